#include "gog/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace gog {

namespace {

// Rational-coefficient polynomial, low-to-high; internal helper for the
// Euclidean algorithm, Sturm chains and interpolation.
struct QPoly {
    std::vector<Rational> c;

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rational& leading() const { return c.back(); }

    static QPoly from_z(const ZPoly& p) {
        QPoly q;
        q.c.reserve(p.coeffs().size());
        for (const Int& n : p.coeffs()) q.c.emplace_back(n);
        return q;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

// Remainder of a by b (b nonzero).
QPoly qrem(QPoly a, const QPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational k = a.leading() / b.leading();
        int shift = a.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i)
            a.c[static_cast<size_t>(i + shift)] -= k * b.c[static_cast<size_t>(i)];
        a.c.pop_back();
        a.trim();
    }
    return a;
}

ZPoly clear_denominators(const QPoly& q) {
    Int den(1);
    for (const Rational& r : q.c) den = lcm(den, r.denominator());
    std::vector<Int> out;
    out.reserve(q.c.size());
    for (const Rational& r : q.c) {
        Rational scaled = r * Rational(den);
        assert(scaled.is_integer());
        out.push_back(scaled.numerator());
    }
    return ZPoly(std::move(out));
}

// Divide out the content, tracking the removed (positive) factor so the
// Euclidean resultant recursion can stay on small primitive polynomials.
QPoly make_primitive_tracked(QPoly p, Rational& factor) {
    Int den(1);
    for (const Rational& r : p.c) den = lcm(den, r.denominator());
    Int num(0);
    for (const Rational& r : p.c) num = gog::gcd(num, r.numerator() * (den / r.denominator()));
    if (num == 0) num = 1;
    Rational scale(num, den);
    factor = scale;
    for (Rational& r : p.c) r = r / scale;
    return p;
}

Rational resultant_q(QPoly f, QPoly g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    Rational acc(1);
    bool flip = false;
    // res(f, g) = (-1)^{deg f * deg g} lc(g)^{deg f - deg r} res(g, r),
    // with remainders rescaled to primitive: res(f, c*r) = c^{deg f} res(f, r).
    while (true) {
        if (g.degree() == 0) {
            acc *= g.leading().pow_int(f.degree());
            break;
        }
        if (f.degree() < g.degree()) {
            if ((f.degree() & 1) && (g.degree() & 1)) flip = !flip;
            std::swap(f, g);
            continue;
        }
        QPoly r = qrem(f, g);
        if (r.is_zero()) return Rational(0);
        if ((f.degree() & 1) && (g.degree() & 1)) flip = !flip;
        acc *= g.leading().pow_int(f.degree() - r.degree());
        Rational factor(1);
        r = make_primitive_tracked(std::move(r), factor);
        acc *= factor.pow_int(g.degree());
        f = std::move(g);
        g = std::move(r);
    }
    return flip ? -acc : acc;
}

// Newton-form interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    size_t n = xs.size();
    std::vector<Rational> divided = ys;
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);

    QPoly acc;           // running result
    QPoly basis;         // (x - x0)...(x - x_{k-1})
    basis.c = {Rational(1)};
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < basis.c.size(); ++i) {
            if (acc.c.size() <= i) acc.c.push_back(Rational(0));
            acc.c[i] += divided[k] * basis.c[i];
        }
        // basis *= (x - xs[k])
        basis.c.insert(basis.c.begin(), Rational(0));
        for (size_t i = 0; i + 1 < basis.c.size(); ++i) basis.c[i] -= xs[k] * basis.c[i + 1];
    }
    acc.trim();
    return acc;
}

} // namespace

// Primitive part dividing by the (positive) content, keeping the sign of the
// leading coefficient.  Used where sign preservation matters.
ZPoly ZPoly::primitive_pos_content() const {
    if (is_zero()) return *this;
    Int cont = content();
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const Int& x : c_) out.push_back(x / cont);
    return ZPoly(std::move(out));
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::monomial(const Int& c, int degree) {
    if (c == 0) return ZPoly();
    std::vector<Int> v(static_cast<size_t>(degree) + 1, Int(0));
    v.back() = c;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::linear_root(const Rational& r) {
    return ZPoly(std::vector<Int>{-r.numerator(), r.denominator()});
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-() const {
    std::vector<Int> v;
    v.reserve(c_.size());
    for (const Int& x : c_) v.push_back(-x);
    return ZPoly(std::move(v));
}

ZPoly ZPoly::scaled(const Int& k) const {
    std::vector<Int> v;
    v.reserve(c_.size());
    for (const Int& x : c_) v.push_back(x * k);
    return ZPoly(std::move(v));
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return ZPoly();
    std::vector<Int> v;
    v.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Int(static_cast<long>(i)));
    return ZPoly(std::move(v));
}

Int ZPoly::content() const {
    Int g(0);
    for (const Int& x : c_) g = gog::gcd(g, x);
    if (g == 0) g = 1;
    return g;
}

ZPoly ZPoly::primitive() const {
    if (is_zero()) return *this;
    Int cont = content();
    if (leading() < 0) cont = -cont;
    std::vector<Int> v;
    v.reserve(c_.size());
    for (const Int& x : c_) v.push_back(x / cont);
    return ZPoly(std::move(v));
}

ZPoly ZPoly::squarefree_part() const {
    if (degree() <= 0) return primitive();
    ZPoly g = gog::gcd(*this, derivative());
    if (g.degree() <= 0) return primitive();
    return divide_exact(g).primitive();
}

ZPoly ZPoly::divide_exact(const ZPoly& d) const {
    // Division over Q must come out with a polynomial quotient times a
    // constant; performed over Q and denominators cleared at the end.
    QPoly a = QPoly::from_z(*this);
    QPoly b = QPoly::from_z(d);
    assert(!b.is_zero());
    QPoly q;
    q.c.assign(static_cast<size_t>(std::max(0, a.degree() - b.degree() + 1)), Rational(0));
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational k = a.leading() / b.leading();
        int shift = a.degree() - b.degree();
        q.c[static_cast<size_t>(shift)] = k;
        for (int i = 0; i <= b.degree(); ++i)
            a.c[static_cast<size_t>(i + shift)] -= k * b.c[static_cast<size_t>(i)];
        a.c.pop_back();
        a.trim();
    }
    assert(a.is_zero() && "divide_exact: remainder nonzero");
    return clear_denominators(q);
}

Rational ZPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

ZPoly ZPoly::compose_shift(const Rational& r) const {
    QPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // acc = acc * (x + r) + coeff
        acc.c.insert(acc.c.begin(), Rational(0));
        for (size_t i = 0; i + 1 < acc.c.size(); ++i) acc.c[i] += r * acc.c[i + 1];
        if (acc.c.empty()) acc.c.push_back(Rational(0));
        acc.c[0] += Rational(*it);
        acc.trim();
    }
    return clear_denominators(acc).primitive();
}

ZPoly ZPoly::compose_scale(const Rational& r) const {
    QPoly out;
    out.c.reserve(c_.size());
    Rational p(1);
    for (const Int& x : c_) {
        out.c.push_back(Rational(x) * p);
        p = p * r;
    }
    out.trim();
    return clear_denominators(out).primitive();
}

ZPoly ZPoly::compose_power(int n) const {
    if (is_zero()) return ZPoly();
    std::vector<Int> v(static_cast<size_t>(degree()) * n + 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i * static_cast<size_t>(n)] = c_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::reversed() const {
    std::vector<Int> v(c_.rbegin(), c_.rend());
    return ZPoly(std::move(v));
}

ZPoly ZPoly::strip_root_at_zero() const {
    size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    if (k == 0) return *this;
    return ZPoly(std::vector<Int>(c_.begin() + static_cast<long>(k), c_.end()));
}

int ZPoly::count_roots(const Rational& a, const Rational& b) const {
    return SturmChain(*this).count(a, b);
}

SturmChain::SturmChain(const ZPoly& p) {
    chain_.push_back(p);
    chain_.push_back(p.derivative());
    while (!chain_.back().is_zero()) {
        QPoly r = qrem(QPoly::from_z(chain_[chain_.size() - 2]),
                       QPoly::from_z(chain_.back()));
        for (Rational& x : r.c) x = -x;
        if (r.is_zero()) break;
        // Rescale to a primitive integer polynomial (positive factor only,
        // signs at sample points must be preserved).
        chain_.push_back(clear_denominators(r).primitive_pos_content());
    }
    while (!chain_.empty() && chain_.back().is_zero()) chain_.pop_back();
}

int SturmChain::variations(const Rational& x) const {
    int count = 0, prev = 0;
    for (const ZPoly& p : chain_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::count(const Rational& a, const Rational& b) const {
    assert(a < b);
    return variations(a) - variations(b);
}

Rational ZPoly::root_bound() const {
    assert(!is_zero());
    Rational m(0);
    Rational lead = Rational(leading()).abs();
    for (size_t i = 0; i + 1 < c_.size(); ++i)
        m = Rational::max(m, Rational(c_[i]).abs() / lead);
    return m + Rational(1);
}

std::string ZPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[static_cast<size_t>(i)];
        if (a == 0) continue;
        if (!out.empty()) out += (a > 0) ? " + " : " - ";
        else if (a < 0) out += "-";
        Int mag = ::abs(a);
        bool unit = (mag == 1) && i > 0;
        if (!unit) out += mag.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    QPoly f = QPoly::from_z(a), g = QPoly::from_z(b);
    if (f.is_zero()) return b.primitive();
    if (g.is_zero()) return a.primitive();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        QPoly r = qrem(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return clear_denominators(f).primitive();
}

Rational resultant(const ZPoly& f, const ZPoly& g) {
    return resultant_q(QPoly::from_z(f), QPoly::from_z(g));
}

namespace {

// Interpolate the resultant-in-x of A(y) against a parametrized family
// B_c(y) over integer sample points c.
ZPoly interpolated_resultant(const ZPoly& A, int xdeg,
                             const std::function<ZPoly(const Int&)>& family) {
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<size_t>(xdeg) + 1);
    ys.reserve(static_cast<size_t>(xdeg) + 1);
    Int c(0);
    for (int k = 0; k <= xdeg; ++k) {
        xs.emplace_back(c);
        ys.push_back(resultant(A, family(c)));
        c = (c >= 0) ? Int(-(c + 1)) : Int(-c);
    }
    QPoly r = interpolate(xs, ys);
    return clear_denominators(r);
}

} // namespace

ZPoly resultant_sum(const ZPoly& A, const ZPoly& B) {
    int xdeg = A.degree() * B.degree();
    auto family = [&B](const Int& c) {
        // B(c - y), by Horner with multiplication by (c - y).
        ZPoly acc;
        ZPoly factor(std::vector<Int>{c, Int(-1)});
        for (int j = B.degree(); j >= 0; --j)
            acc = acc * factor + ZPoly::constant(B.coeff(j));
        return acc;
    };
    return interpolated_resultant(A, xdeg, family);
}

ZPoly resultant_product(const ZPoly& A, const ZPoly& B) {
    assert(B.coeff(0) != 0 && "resultant_product requires B(0) != 0");
    int m = B.degree();
    int xdeg = A.degree() * m;
    auto family = [&B, m](const Int& c) {
        // y^m B(c / y): coefficient of y^{m-j} is b_j c^j.
        std::vector<Int> v(static_cast<size_t>(m) + 1, Int(0));
        Int p(1);
        for (int j = 0; j <= m; ++j) {
            v[static_cast<size_t>(m - j)] = B.coeff(j) * p;
            p *= c;
        }
        return ZPoly(std::move(v));
    };
    return interpolated_resultant(A, xdeg, family);
}

} // namespace gog
