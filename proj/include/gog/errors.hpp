#ifndef GOG_ERRORS_HPP
#define GOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gog {

enum class ErrorCode {
    DivisionByZero,
    NegativeRadicand,
    RootNotRepresentable,
    ZeroCoefficient,
    ZeroDivisor,
    NonPositiveLeading,
    NotInfinitelyIncreasing,
    FuelExhausted,
    IdentityHasNoRank,
    InvalidCoordinate,
    RankNotDecreasing,
    NotCommuting,
    LogarithmRequired,
    PreconditionViolated,
    ActionViolation,
    NotNormal,
    NotConvex,
    ParseError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace gog

#endif
