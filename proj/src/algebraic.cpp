#include "gog/algebraic.hpp"

#include <cassert>
#include <numeric>
#include <map>
#include <mutex>
#include <sstream>

namespace gog {

namespace {

// Largest m/2^s with (m/2^s)^n <= r, for r > 0.
Rational dyadic_nth_root_lower(const Rational& r, int n, int s) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(s) * n);
    Int target = (r * Rational(scale)).floor();
    if (target < 0) target = 0;
    Int m;
    mpz_root(m.get_mpz_t(), target.get_mpz_t(), static_cast<unsigned long>(n));
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(s));
    return Rational(m, den);
}

// Smallest (m+1)/2^s with ((m+1)/2^s)^n > r, for r > 0.
Rational dyadic_nth_root_upper(const Rational& r, int n, int s) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(s) * n);
    Int target = (r * Rational(scale)).ceil();
    Int m;
    mpz_root(m.get_mpz_t(), target.get_mpz_t(), static_cast<unsigned long>(n));
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(s));
    return Rational(m + 1, den);
}

Rational simplest_positive(const Rational& lo, const Rational& hi) {
    // 0 <= lo < hi; smallest-denominator rational strictly inside (lo, hi).
    Rational c(Int(lo.floor() + 1));
    if (c < hi) return c;
    Rational base(lo.floor());
    Rational upper_inv = (Rational(1) / (hi - base));
    if (lo == base) {
        Rational y(Int(upper_inv.floor() + 1));
        return base + y.reciprocal();
    }
    Rational inner = simplest_positive(upper_inv, Rational(1) / (lo - base));
    return base + inner.reciprocal();
}

} // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    assert(lo < hi);
    if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
    if (lo.sign() >= 0) return simplest_positive(lo, hi);
    return -simplest_positive(-hi, -lo);
}

ZPoly AlgebraicReal::minpoly() const {
    return rat_ ? ZPoly::linear_root(*rat_) : minpoly_;
}

namespace {

// Bisect an isolating interval once; the root is simple so the endpoint signs
// differ.  Returns false if the midpoint hits the root exactly (rational root,
// possible only before rationality normalization).
bool bisect_once(const ZPoly& p, Rational& lo, Rational& hi) {
    Rational mid = (lo + hi) * Rational(1, 2);
    int sm = p.sign_at(mid);
    if (sm == 0) return false;
    if (sm == p.sign_at(lo)) lo = mid;
    else hi = mid;
    return true;
}

} // namespace

AlgebraicReal AlgebraicReal::make(
    const ZPoly& vanishing,
    const std::function<std::pair<Rational, Rational>(int)>& bracket) {
    ZPoly p = vanishing.squarefree_part();
    assert(p.degree() >= 1);
    SturmChain chain(p);
    for (int k = 0;; ++k) {
        assert(k < 4096 && "root isolation failed to converge");
        auto [lo, hi] = bracket(k);
        if (lo >= hi) continue;
        if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) continue;
        if (chain.count(lo, hi) != 1) continue;

        // Zero detection: 0 in the interval and a root of p means the value
        // is exactly 0.
        if (lo.sign() < 0 && hi.sign() > 0 && p.sign_at(Rational(0)) == 0)
            return AlgebraicReal(Rational(0));
        p = p.strip_root_at_zero();

        // Rationality detection: a rational root r = a/b of the primitive
        // polynomial p has b | leading coefficient, so once the simplest
        // rational in the interval has a larger denominator than that, the
        // value is certifiably irrational.
        Rational den_bound(Rational(p.leading()).abs());
        while (true) {
            Rational cand = simplest_rational_between(lo, hi);
            if (p.sign_at(cand) == 0) return AlgebraicReal(cand);
            if (Rational(cand.denominator()) > den_bound)
                return AlgebraicReal(std::move(p), std::move(lo), std::move(hi));
            bool ok = bisect_once(p, lo, hi);
            assert(ok && "rational root escaped detection");
        }
    }
}

AlgebraicReal AlgebraicReal::from_quadratic(const Rational& a0, const Rational& a1,
                                            const Int& D) {
    assert(!a1.is_zero());
    // (x - a0)^2 - a1^2 D
    Rational two_a0 = a0 * Rational(2);
    Rational c0 = a0 * a0 - a1 * a1 * Rational(D);
    Int den = lcm(two_a0.denominator(), c0.denominator());
    ZPoly p(std::vector<Int>{(c0 * Rational(den)).numerator(),
                             (-two_a0 * Rational(den)).numerator(), den});
    return make(p, [&](int k) {
        int prec = 4 + 2 * k;
        Rational lo = dyadic_nth_root_lower(Rational(D), 2, prec);
        Rational hi = dyadic_nth_root_upper(Rational(D), 2, prec);
        Rational u = a0 + a1 * lo, v = a0 + a1 * hi;
        if (a1.sign() < 0) std::swap(u, v);
        return std::make_pair(u, v);
    });
}

AlgebraicReal AlgebraicReal::from_root(const ZPoly& poly, const Rational& lo,
                                       const Rational& hi) {
    if (poly.degree() < 1) fail(ErrorCode::Internal, "from_root: constant polynomial");
    ZPoly p = poly.squarefree_part();
    if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0 || lo >= hi || p.count_roots(lo, hi) != 1)
        fail(ErrorCode::Internal, "from_root: interval is not isolating");
    Rational l = lo, h = hi;
    return make(p, [&](int k) {
        for (int i = 0; i < k; ++i) bisect_once(p, l, h);
        return std::make_pair(l, h);
    });
}

void AlgebraicReal::refine_step() {
    assert(!rat_);
    bool ok = bisect_once(minpoly_, lo_, hi_);
    assert(ok && "normalized value hit a rational midpoint");
}

AlgebraicReal AlgebraicReal::refined(const Rational& eps) const {
    if (rat_) return *this;
    AlgebraicReal out = *this;
    while (out.hi_ - out.lo_ >= eps) out.refine_step();
    return out;
}

int AlgebraicReal::sign() const {
    if (is_rational()) return rational_value().sign();
    Rational lo = lo_, hi = hi_;
    while (true) {
        if (lo.sign() >= 0) return 1;
        if (hi.sign() <= 0) return -1;
        bool ok = bisect_once(minpoly_, lo, hi);
        assert(ok);
    }
}

namespace {

// Quadratic irrationals as a0 + a1*sqrt(D) with D a positive non-square
// integer.  Sums and products inside one quadratic field close at degree 2,
// which stops the degree cascade that resultants would cause.
struct Quad {
    Rational a0, a1; // a1 != 0
    Int disc;        // > 0, not a perfect square
};

std::optional<Quad> quad_view(const AlgebraicReal& x) {
    if (x.is_rational() || x.degree() != 2) return std::nullopt;
    const ZPoly& p = x.minpoly();
    Int c2 = p.coeff(2), c1 = p.coeff(1), c0 = p.coeff(0);
    Int disc = c1 * c1 - 4 * c2 * c0;
    assert(disc > 0);
    Rational a0 = Rational(-c1, 2 * c2);
    Rational a1_mag = Rational(Int(1), 2 * c2);
    int side = cmp(x, AlgebraicReal(a0)) == Cmp::Greater ? 1 : -1;
    return Quad{a0, side > 0 ? a1_mag : -a1_mag, disc};
}

// When B(x) is A(x/q) up to a constant (so the roots of B are q times the
// roots of A), return q.  Series-coefficient sums are overwhelmingly rational
// multiples of one algebraic number, and this avoids a resultant there.
std::optional<Rational> proportionality(const ZPoly& A, const ZPoly& B) {
    int n = A.degree();
    if (n != B.degree() || n < 2) return std::nullopt;
    int i = -1, j = -1;
    for (int k = 0; k <= n; ++k) {
        if (A.coeff(k) == 0 && B.coeff(k) == 0) continue;
        if (A.coeff(k) == 0 || B.coeff(k) == 0) return std::nullopt;
        if (i < 0) i = k;
        else { j = k; break; }
    }
    if (j < 0) return std::nullopt;
    Rational ratio = (Rational(B.coeff(i)) / Rational(A.coeff(i))) /
                     (Rational(B.coeff(j)) / Rational(A.coeff(j)));
    // ratio = q^(j-i); extract an exact rational root if one exists.
    int e = j - i;
    Rational mag = ratio.abs();
    Int num_root, den_root;
    int num_ok = mpz_root(num_root.get_mpz_t(), mag.numerator().get_mpz_t(),
                          static_cast<unsigned long>(e));
    int den_ok = mpz_root(den_root.get_mpz_t(), mag.denominator().get_mpz_t(),
                          static_cast<unsigned long>(e));
    if (!num_ok || !den_ok) return std::nullopt;
    Rational q(num_root, den_root);
    for (const Rational& cand : {q, -q}) {
        if (cand.is_zero()) continue;
        if (A.compose_scale(cand.reciprocal()) == B) return cand;
    }
    return std::nullopt;
}

} // namespace

AlgebraicReal add(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() && b.is_rational())
        return AlgebraicReal(a.rational_value() + b.rational_value());
    if (a.is_rational()) return add(b, a);
    if (b.is_rational()) {
        Rational r = b.rational_value();
        if (r.is_zero()) return a;
        // p(x - r) vanishes at a + r; the shifted interval stays isolating.
        ZPoly p = a.minpoly_.compose_shift(-r).strip_root_at_zero();
        return AlgebraicReal(std::move(p), a.lo_ + r, a.hi_ + r);
    }
    if (auto qa = quad_view(a)) {
        if (auto qb = quad_view(b)) {
            // Same square class iff the product of discriminants is a square;
            // then sqrt(D_b) = k sqrt(D_a) / D_a.
            Int prod = qa->disc * qb->disc;
            if (mpz_perfect_square_p(prod.get_mpz_t())) {
                Int k;
                mpz_sqrt(k.get_mpz_t(), prod.get_mpz_t());
                Rational b1 = qb->a1 * Rational(k) / Rational(qa->disc);
                Rational s0 = qa->a0 + qb->a0;
                Rational s1 = qa->a1 + b1;
                if (s1.is_zero()) return AlgebraicReal(s0);
                return AlgebraicReal::from_quadratic(s0, s1, qa->disc);
            }
        }
    }
    if (auto q = proportionality(a.minpoly_, b.minpoly_)) {
        if (cmp(mul(a, AlgebraicReal(*q)), b) == Cmp::Equal)
            return mul(a, AlgebraicReal(*q + Rational(1)));
    }
    ZPoly r = resultant_sum(a.minpoly_, b.minpoly_);
    AlgebraicReal x = a, y = b;
    return AlgebraicReal::make(r, [&x, &y](int k) {
        if (k > 0) {
            x.refine_step();
            y.refine_step();
        }
        return std::make_pair(x.lo_ + y.lo_, x.hi_ + y.hi_);
    });
}

AlgebraicReal neg(const AlgebraicReal& a) {
    if (a.is_rational()) return AlgebraicReal(-a.rational_value());
    ZPoly p = a.minpoly_.compose_scale(Rational(-1)).primitive();
    return AlgebraicReal(std::move(p), -a.hi_, -a.lo_);
}

namespace {

// v^n = c for a binomial minpoly l*x^n + m (so c = -m/l).
std::optional<Rational> binomial_power_value(const ZPoly& p) {
    int n = p.degree();
    if (n < 2 || p.coeff(0) == 0) return std::nullopt;
    for (int i = 1; i < n; ++i)
        if (p.coeff(i) != 0) return std::nullopt;
    return Rational(-p.coeff(0), p.leading());
}

} // namespace

AlgebraicReal mul(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() && b.is_rational())
        return AlgebraicReal(a.rational_value() * b.rational_value());
    if (a.is_rational()) return mul(b, a);
    if (b.is_rational()) {
        Rational r = b.rational_value();
        if (r.is_zero()) return AlgebraicReal(Rational(0));
        if (r.is_one()) return a;
        ZPoly p = a.minpoly_.compose_scale(r.reciprocal()).strip_root_at_zero();
        Rational lo = a.lo_ * r, hi = a.hi_ * r;
        if (r.sign() < 0) std::swap(lo, hi);
        return AlgebraicReal(std::move(p), std::move(lo), std::move(hi));
    }
    if (auto qa = quad_view(a)) {
        if (auto qb = quad_view(b)) {
            Int prod = qa->disc * qb->disc;
            if (mpz_perfect_square_p(prod.get_mpz_t())) {
                Int k;
                mpz_sqrt(k.get_mpz_t(), prod.get_mpz_t());
                Rational b1 = qb->a1 * Rational(k) / Rational(qa->disc);
                Rational p0 = qa->a0 * qb->a0 + qa->a1 * b1 * Rational(qa->disc);
                Rational p1 = qa->a0 * b1 + qa->a1 * qb->a0;
                if (p1.is_zero()) return AlgebraicReal(p0);
                return AlgebraicReal::from_quadratic(p0, p1, qa->disc);
            }
        }
    }
    ZPoly r;
    // Radicals multiply without a resultant: v_a^n = c_a and v_b^m = c_b give
    // (v_a v_b)^L = c_a^(L/n) c_b^(L/m) for L = lcm(n, m).
    auto ca = binomial_power_value(a.minpoly_);
    auto cb = binomial_power_value(b.minpoly_);
    if (ca && cb) {
        long n = a.minpoly_.degree(), m = b.minpoly_.degree();
        long L = n / std::gcd(n, m) * m;
        Rational big = ca->pow_int(L / n) * cb->pow_int(L / m);
        r = ZPoly::monomial(big.denominator(), static_cast<int>(L)) -
            ZPoly::constant(big.numerator());
    } else {
        r = resultant_product(a.minpoly_, b.minpoly_);
    }
    AlgebraicReal x = a, y = b;
    // Make the operand intervals sign-definite so the product bracket is a
    // plain endpoint product.
    while (x.lo_.sign() < 0 && x.hi_.sign() > 0) x.refine_step();
    while (y.lo_.sign() < 0 && y.hi_.sign() > 0) y.refine_step();
    return AlgebraicReal::make(r, [&x, &y](int k) {
        if (k > 0) {
            x.refine_step();
            y.refine_step();
        }
        Rational c1 = x.lo_ * y.lo_, c2 = x.lo_ * y.hi_;
        Rational c3 = x.hi_ * y.lo_, c4 = x.hi_ * y.hi_;
        Rational lo = Rational::min(Rational::min(c1, c2), Rational::min(c3, c4));
        Rational hi = Rational::max(Rational::max(c1, c2), Rational::max(c3, c4));
        return std::make_pair(lo, hi);
    });
}

AlgebraicReal recip(const AlgebraicReal& a) {
    if (a.is_zero()) fail(ErrorCode::DivisionByZero, "recip(0)");
    if (a.is_rational()) return AlgebraicReal(a.rational_value().reciprocal());
    AlgebraicReal x = a;
    while (x.lo_.sign() < 0 && x.hi_.sign() > 0) x.refine_step();
    ZPoly p = x.minpoly_.reversed().primitive();
    return AlgebraicReal(std::move(p), x.hi_.reciprocal(), x.lo_.reciprocal());
}

Cmp cmp(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() && b.is_rational()) {
        Rational x = a.rational_value(), y = b.rational_value();
        if (x < y) return Cmp::Less;
        if (y < x) return Cmp::Greater;
        return Cmp::Equal;
    }
    if (a.is_rational()) {
        Cmp c = cmp(b, a);
        return c == Cmp::Less ? Cmp::Greater : (c == Cmp::Greater ? Cmp::Less : Cmp::Equal);
    }
    if (b.is_rational()) {
        // a irrational: one sign evaluation against the isolating interval.
        Rational r = b.rational_value();
        if (r <= a.lo_) return Cmp::Greater;
        if (r >= a.hi_) return Cmp::Less;
        return a.minpoly_.sign_at(r) == a.minpoly_.sign_at(a.lo_) ? Cmp::Greater : Cmp::Less;
    }
    AlgebraicReal x = a, y = b;
    auto disjoint = [&]() -> std::optional<Cmp> {
        if (x.hi_ <= y.lo_) return Cmp::Less;
        if (y.hi_ <= x.lo_) return Cmp::Greater;
        return std::nullopt;
    };
    for (int k = 0; k < 4; ++k) {
        if (auto c = disjoint()) return *c;
        x.refine_step();
        y.refine_step();
    }
    if (auto c = disjoint()) return *c;
    ZPoly g = gcd(x.minpoly_, y.minpoly_);
    if (g.degree() >= 1) {
        Rational lo = Rational::max(x.lo_, y.lo_);
        Rational hi = Rational::min(x.hi_, y.hi_);
        // A root of g inside both isolating intervals equals both values.
        if (lo < hi && g.count_roots(lo, hi) >= 1) return Cmp::Equal;
    }
    while (true) {
        if (auto c = disjoint()) return *c;
        x.refine_step();
        y.refine_step();
    }
}

AlgebraicReal root(const AlgebraicReal& a, int n) {
    if (n <= 0) fail(ErrorCode::Internal, "root index must be positive");
    if (n == 1) return a;
    int s = a.sign();
    if (s <= 0 && n % 2 == 0)
        fail(ErrorCode::NegativeRadicand, "even root of a non-positive value");
    if (s == 0) return AlgebraicReal(Rational(0));
    if (s < 0) return neg(root(neg(a), n));

    if (a.is_rational()) {
        Rational r = a.rational_value();
        Int num_root, den_root;
        int num_exact = mpz_root(num_root.get_mpz_t(), r.numerator().get_mpz_t(),
                                 static_cast<unsigned long>(n));
        int den_exact = mpz_root(den_root.get_mpz_t(), r.denominator().get_mpz_t(),
                                 static_cast<unsigned long>(n));
        if (num_exact && den_exact) return AlgebraicReal(Rational(num_root, den_root));
        // den(r) x^n - num(r): squarefree, with a unique positive root.
        ZPoly p = ZPoly::monomial(r.denominator(), n) - ZPoly::constant(r.numerator());
        p = p.primitive();
        return AlgebraicReal::make(p, [&r, n](int k) {
            int prec = 4 + 2 * k;
            return std::make_pair(dyadic_nth_root_lower(r, n, prec),
                                  dyadic_nth_root_upper(r, n, prec));
        });
    }

    AlgebraicReal x = a;
    while (x.lo_.sign() <= 0) x.refine_step();
    ZPoly p = x.minpoly_.compose_power(n);
    return AlgebraicReal::make(p, [&x, n](int k) {
        if (k > 0) x.refine_step();
        int prec = 4 + 2 * k;
        return std::make_pair(dyadic_nth_root_lower(x.lo_, n, prec),
                              dyadic_nth_root_upper(x.hi_, n, prec));
    });
}

AlgebraicReal AlgebraicReal::pow_int(long e) const {
    if (e == 0) return AlgebraicReal(Rational(1));
    if (e < 0) return recip(*this).pow_int(-e);
    if (is_rational()) return AlgebraicReal(rational_value().pow_int(e));
    AlgebraicReal acc(Rational(1));
    AlgebraicReal base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

AlgebraicReal pow_rational(const AlgebraicReal& a, const Rational& q) {
    if (q.is_zero()) {
        if (a.is_zero()) fail(ErrorCode::DivisionByZero, "0^0");
        return AlgebraicReal(Rational(1));
    }
    if (a.is_zero()) {
        if (q.sign() < 0) fail(ErrorCode::DivisionByZero, "0 to a negative power");
        return AlgebraicReal(Rational(0));
    }
    long num = 0, den = 1;
    if (!q.numerator().fits_slong_p() || !q.denominator().fits_slong_p())
        fail(ErrorCode::Internal, "pow_rational exponent out of range");
    num = q.numerator().get_si();
    den = q.denominator().get_si();

    // Fractional powers of rational bases recur throughout composition; memoize.
    static std::mutex cache_mu;
    static std::map<std::pair<Rational, Rational>, AlgebraicReal> cache;
    bool cacheable = a.is_rational() && den > 1;
    if (cacheable) {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = cache.find({a.rational_value(), q});
        if (it != cache.end()) return it->second;
    }
    AlgebraicReal out;
    if (a.is_rational()) {
        // (a^num)^(1/den): one rational power then one direct root, so no
        // resultant arithmetic on this very hot path.
        Rational rp = a.rational_value().pow_int(num);
        out = (den == 1) ? AlgebraicReal(rp) : root(AlgebraicReal(rp), static_cast<int>(den));
    } else {
        AlgebraicReal base = (den == 1) ? a : root(a, static_cast<int>(den));
        out = base.pow_int(num);
    }
    if (cacheable) {
        std::lock_guard<std::mutex> lk(cache_mu);
        cache.emplace(std::make_pair(a.rational_value(), q), out);
    }
    return out;
}

std::string AlgebraicReal::decimal(int digits) const {
    Rational eps = Rational(1, 2) * Rational(Int(1), Rational(10).pow_int(digits).numerator());
    AlgebraicReal r = is_rational() ? *this : refined(eps);
    Rational mid = is_rational() ? rational_value() : (r.lo_ + r.hi_) * Rational(1, 2);
    bool negative = mid.sign() < 0;
    if (negative) mid = -mid;
    Int scale = Rational(10).pow_int(digits).numerator();
    Int scaled = (mid * Rational(scale) + Rational(1, 2)).floor();
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    std::string out = (negative ? "-" : "") + ip.get_str();
    if (!(frac == "0")) out += "." + frac;
    return out;
}

std::string AlgebraicReal::str() const {
    if (is_rational()) return rational_value().str();
    std::ostringstream os;
    os << "algebraic(minpoly=" << minpoly_.str() << ", interval=[" << lo_.str() << ", "
       << hi_.str() << "]) ~ " << decimal();
    return os.str();
}

std::string AlgebraicReal::short_str() const {
    if (is_rational()) return rational_value().str();
    return "(~" + decimal() + ":" + minpoly_.str() + ")";
}

} // namespace gog
