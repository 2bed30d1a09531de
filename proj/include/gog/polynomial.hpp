#ifndef GOG_POLYNOMIAL_HPP
#define GOG_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "gog/rational.hpp"

namespace gog {

/// Univariate polynomial with integer coefficients, stored low-to-high with
/// no trailing zero (the zero polynomial has an empty coefficient vector).
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ZPoly constant(const Int& c) { return ZPoly(std::vector<Int>{c}); }
    static ZPoly monomial(const Int& c, int degree);
    /// x - r scaled to integer coefficients: den(r)*x - num(r).
    static ZPoly linear_root(const Rational& r);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    const Int& leading() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator-() const;
    ZPoly scaled(const Int& k) const;

    ZPoly derivative() const;
    Int content() const;
    /// Content removed, leading coefficient made positive.
    ZPoly primitive() const;
    /// Content removed, sign of the leading coefficient kept.
    ZPoly primitive_pos_content() const;
    /// this / gcd(this, this'), primitive with positive leading coefficient.
    ZPoly squarefree_part() const;
    /// Exact quotient; aborts if the division is not exact.
    ZPoly divide_exact(const ZPoly& d) const;

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }

    /// Substitute x -> x + r (r rational), clearing denominators; the result
    /// has roots shifted by -r up to a positive constant factor.
    ZPoly compose_shift(const Rational& r) const;
    /// Substitute x -> r*x (r != 0), clearing denominators.
    ZPoly compose_scale(const Rational& r) const;
    /// Substitute x -> x^n.
    ZPoly compose_power(int n) const;
    /// x^deg * p(1/x): reverses the coefficients.
    ZPoly reversed() const;
    /// Divide out any x^k factor.
    ZPoly strip_root_at_zero() const;

    /// Number of distinct real roots in (a, b], by Sturm's theorem.
    /// Requires a squarefree polynomial and a < b.
    int count_roots(const Rational& a, const Rational& b) const;
    /// Cauchy bound: all real roots lie in (-M, M).
    Rational root_bound() const;

    std::string str(const std::string& var = "x") const;

    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<Int> c_;
};

ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Precomputed Sturm chain of a squarefree polynomial; reusable across many
/// interval queries (the chain construction dominates one-shot counting).
class SturmChain {
public:
    explicit SturmChain(const ZPoly& p);
    /// Distinct real roots in (a, b], a < b.
    int count(const Rational& a, const Rational& b) const;

private:
    int variations(const Rational& x) const;
    std::vector<ZPoly> chain_;
};

/// Resultant of two integer polynomials (zero iff they share a complex root).
Rational resultant(const ZPoly& f, const ZPoly& g);

/// Res_y(A(y), B(x - y)): vanishes at x = a + b for roots a of A, b of B.
ZPoly resultant_sum(const ZPoly& A, const ZPoly& B);
/// Res_y(A(y), y^m B(x / y)): vanishes at x = a * b.  Requires B(0) != 0.
ZPoly resultant_product(const ZPoly& A, const ZPoly& B);

} // namespace gog

#endif
