#include "gog/rational.hpp"

namespace gog {

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) fail(ErrorCode::DivisionByZero, "0 to a negative power");
        return Rational(0);
    }
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), k);
    return invert ? Rational(den, num) : Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::string int_str(const Int& n) { return n.get_str(); }

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NegativeRadicand: return "NegativeRadicand";
        case ErrorCode::RootNotRepresentable: return "RootNotRepresentable";
        case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
        case ErrorCode::ZeroDivisor: return "ZeroDivisor";
        case ErrorCode::NonPositiveLeading: return "NonPositiveLeading";
        case ErrorCode::NotInfinitelyIncreasing: return "NotInfinitelyIncreasing";
        case ErrorCode::FuelExhausted: return "FuelExhausted";
        case ErrorCode::IdentityHasNoRank: return "IdentityHasNoRank";
        case ErrorCode::InvalidCoordinate: return "InvalidCoordinate";
        case ErrorCode::RankNotDecreasing: return "RankNotDecreasing";
        case ErrorCode::NotCommuting: return "NotCommuting";
        case ErrorCode::LogarithmRequired: return "LogarithmRequired";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::ActionViolation: return "ActionViolation";
        case ErrorCode::NotNormal: return "NotNormal";
        case ErrorCode::NotConvex: return "NotConvex";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace gog
