#ifndef GOG_ALGEBRAIC_HPP
#define GOG_ALGEBRAIC_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "gog/polynomial.hpp"
#include "gog/rational.hpp"

namespace gog {

enum class Cmp { Less, Equal, Greater };

/// Exact real algebraic number: a squarefree, primitive integer polynomial
/// with positive leading coefficient plus an open isolating interval with
/// rational endpoints that are not roots.  Rational values are always stored
/// with a degree-1 polynomial.  Values are immutable and cheap to copy.
class AlgebraicReal {
public:
    AlgebraicReal() : rat_(Rational(0)) {}
    AlgebraicReal(const Rational& r) : rat_(r) {}
    AlgebraicReal(long n) : rat_(Rational(n)) {}

    /// Builds the unique root of `poly` in (lo, hi); validates the isolating
    /// interval and normalizes (squarefree part, rationality detection).
    static AlgebraicReal from_root(const ZPoly& poly, const Rational& lo, const Rational& hi);

    bool is_rational() const { return rat_.has_value(); }
    bool is_zero() const { return rat_ && rat_->is_zero(); }
    bool is_one() const { return rat_ && rat_->is_one(); }
    /// Only valid when is_rational().
    const Rational& rational_value() const { return *rat_; }

    /// Degree-1 polynomial den*x - num for rationals.
    ZPoly minpoly() const;
    Rational lower() const { return rat_ ? *rat_ - Rational(1) : lo_; }
    Rational upper() const { return rat_ ? *rat_ + Rational(1) : hi_; }
    int degree() const { return rat_ ? 1 : minpoly_.degree(); }

    int sign() const;

    friend AlgebraicReal add(const AlgebraicReal& a, const AlgebraicReal& b);
    friend AlgebraicReal mul(const AlgebraicReal& a, const AlgebraicReal& b);
    friend AlgebraicReal neg(const AlgebraicReal& a);
    friend AlgebraicReal recip(const AlgebraicReal& a);
    friend Cmp cmp(const AlgebraicReal& a, const AlgebraicReal& b);
    /// Unique real n-th root: positive for a > 0; for a < 0 requires n odd.
    friend AlgebraicReal root(const AlgebraicReal& a, int n);
    friend AlgebraicReal pow_rational(const AlgebraicReal& a, const Rational& q);

    AlgebraicReal operator+(const AlgebraicReal& o) const { return add(*this, o); }
    AlgebraicReal operator-(const AlgebraicReal& o) const { return add(*this, neg(o)); }
    AlgebraicReal operator*(const AlgebraicReal& o) const { return mul(*this, o); }
    AlgebraicReal operator/(const AlgebraicReal& o) const { return mul(*this, recip(o)); }
    AlgebraicReal operator-() const { return neg(*this); }
    bool operator==(const AlgebraicReal& o) const { return cmp(*this, o) == Cmp::Equal; }
    bool operator!=(const AlgebraicReal& o) const { return cmp(*this, o) != Cmp::Equal; }
    bool operator<(const AlgebraicReal& o) const { return cmp(*this, o) == Cmp::Less; }
    bool operator>(const AlgebraicReal& o) const { return cmp(*this, o) == Cmp::Greater; }
    bool operator<=(const AlgebraicReal& o) const { return cmp(*this, o) != Cmp::Greater; }
    bool operator>=(const AlgebraicReal& o) const { return cmp(*this, o) != Cmp::Less; }

    AlgebraicReal pow_int(long e) const;

    /// New value with an isolating interval of width below `eps`.
    AlgebraicReal refined(const Rational& eps) const;

    /// Decimal approximation accurate to `digits` fractional digits.
    /// Display only; never used in comparisons.
    std::string decimal(int digits = 6) const;
    /// "p/q" for rationals, "algebraic(minpoly=..., interval=[lo,hi]) ~ d.ddd"
    /// otherwise.
    std::string str() const;
    /// Compact rendering for coefficients in series output.
    std::string short_str() const;

private:
    AlgebraicReal(ZPoly p, Rational lo, Rational hi)
        : minpoly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}

    void refine_step();
    static AlgebraicReal make(const ZPoly& vanishing,
                              const std::function<std::pair<Rational, Rational>(int)>& bracket);
    /// a0 + a1*sqrt(D) for a positive non-square integer D, a1 != 0.
    static AlgebraicReal from_quadratic(const Rational& a0, const Rational& a1, const Int& D);

    std::optional<Rational> rat_; // engaged exactly for rational values
    ZPoly minpoly_;               // irrational only
    Rational lo_, hi_;            // irrational only: open isolating interval
};

AlgebraicReal add(const AlgebraicReal& a, const AlgebraicReal& b);
AlgebraicReal mul(const AlgebraicReal& a, const AlgebraicReal& b);
AlgebraicReal neg(const AlgebraicReal& a);
AlgebraicReal recip(const AlgebraicReal& a);
Cmp cmp(const AlgebraicReal& a, const AlgebraicReal& b);
AlgebraicReal root(const AlgebraicReal& a, int n);
AlgebraicReal pow_rational(const AlgebraicReal& a, const Rational& q);

/// The simplest rational (smallest denominator, then smallest |numerator|)
/// strictly inside (lo, hi).  Stern-Brocot walk.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

} // namespace gog

#endif
