#ifndef GOG_GERM_HPP
#define GOG_GERM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gog/algebraic.hpp"
#include "gog/rational.hpp"

namespace gog {

using Exponent = Rational;

/// One monomial c * x^q of a Puiseux germ; the coefficient is nonzero.
struct Term {
    Rational exponent;
    AlgebraicReal coefficient;
};

/// Per-query scan budget.  Threshold collection is total (the bounded-grid
/// invariant guarantees finitely many terms above any exponent), so fuel only
/// bounds how far below a germ's exponent bound a zero-looking stream is
/// scanned: searches descend at most `max_terms` whole exponent units.
struct Fuel {
    int max_terms;
    Fuel() : max_terms(default_fuel()) {}
    explicit Fuel(int n) : max_terms(n < 1 ? 1 : n) {}
    static int default_fuel();
    static void set_default_fuel(int n);
};

enum class GermOrder { Less, Greater, EqualToDepth };

struct GermCmp {
    GermOrder order;
    int depth = 0;      // scan depth used when order == EqualToDepth
    bool proven = false; // equality is structural, not a budget timeout
    bool less() const { return order == GermOrder::Less; }
    bool greater() const { return order == GermOrder::Greater; }
    bool equal_to_depth() const { return order == GermOrder::EqualToDepth; }
};

namespace detail {
class GermNode;
}

/// Lazy exact Puiseux germ at +infinity: strictly decreasing rational
/// exponents on a bounded grid (1/d)*Z, nonzero AlgebraicReal coefficients.
/// Immutable value; produced terms are memoized behind a lock, so germs can
/// be shared freely between threads.
class Germ {
public:
    Germ(); // the zero germ

    static Germ x();
    static Germ constant(const AlgebraicReal& c);
    static Germ monomial(const AlgebraicReal& c, const Rational& q);
    static Germ one() { return constant(AlgebraicReal(1)); }
    /// Finite sum; terms are merged and normalized.
    static Germ from_terms(std::vector<Term> terms);

    Int ramification() const;
    /// Static upper bound on every exponent in the stream (the first
    /// confirmed term's exponent once one is known).
    Rational exponent_bound() const;
    /// The stream is known finished and empty.
    bool provably_zero() const;
    /// The stream is known finished (every term confirmed).
    bool provably_finite() const;
    /// True when this is exactly the single term 1 * x^1.
    bool is_identity() const;
    /// Constructor provenance, for diagnostics.
    std::string origin() const;

    /// All confirmed terms with exponent >= t (forces production).
    std::vector<Term> terms_above(const Rational& t) const;

    std::shared_ptr<detail::GermNode> node() const { return node_; }
    explicit Germ(std::shared_ptr<detail::GermNode> node) : node_(std::move(node)) {}

private:
    std::shared_ptr<detail::GermNode> node_;
};

Germ add(const Germ& f, const Germ& g);
Germ sub(const Germ& f, const Germ& g);
Germ mul(const Germ& f, const Germ& g);
Germ neg(const Germ& f);
Germ scale(const Germ& f, const AlgebraicReal& c);

/// Multiplicative inverse; needs a nonzero leading term within fuel.
Germ recip(const Germ& f, Fuel fuel = Fuel());
/// f^q for a germ with positive leading coefficient.
Germ rational_power(const Germ& f, const Rational& q, Fuel fuel = Fuel());
Germ derive(const Germ& f);
/// a o b, for b > R (positive leading exponent and coefficient).
Germ compose(const Germ& a, const Germ& b, Fuel fuel = Fuel());
/// Compositional inverse of f > R: compose(f, func_inverse(f)) = x.
Germ func_inverse(const Germ& f, Fuel fuel = Fuel());

GermCmp cmp(const Germ& f, const Germ& g, Fuel fuel = Fuel());
/// First nonzero term, or nullopt when none was found within fuel;
/// `proven_zero` distinguishes a structural zero from a budget timeout.
std::optional<Term> try_leading(const Germ& f, Fuel fuel = Fuel(),
                                bool* proven_zero = nullptr);
/// First nonzero term; FuelExhausted if none found within fuel.
Term leading(const Germ& f, Fuel fuel = Fuel());
/// Coefficient of x^q (exactly 0 when the stream passes q without one).
AlgebraicReal coeff_at(const Germ& f, const Rational& q, Fuel fuel = Fuel());
/// First k confirmed terms (fewer if the budget runs out or the germ ends).
std::vector<Term> truncate(const Germ& f, int k, Fuel fuel = Fuel());
/// f > R: leading term has positive exponent and positive coefficient.
bool is_above_reals(const Germ& f, Fuel fuel = Fuel());

/// Canonical text form "c1*x^(q1) + ... + O(x^(qk))".
std::string render(const Germ& f, int max_terms = 8, Fuel fuel = Fuel());
std::string render_term(const Term& t);

inline Germ operator+(const Germ& a, const Germ& b) { return add(a, b); }
inline Germ operator-(const Germ& a, const Germ& b) { return sub(a, b); }
inline Germ operator*(const Germ& a, const Germ& b) { return mul(a, b); }
inline Germ operator-(const Germ& a) { return neg(a); }

} // namespace gog

#endif
