#include "gog/germ.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "gog/errors.hpp"

namespace gog {

namespace {
std::atomic<int> g_default_fuel{32};
}

int Fuel::default_fuel() { return g_default_fuel.load(); }
void Fuel::set_default_fuel(int n) { g_default_fuel.store(n < 1 ? 1 : n); }

namespace detail {

// Terms in strictly descending exponent order.
using Terms = std::vector<Term>;

namespace {

// Merge-sum of two descending term lists; zero sums dropped.
Terms merge_terms(const Terms& a, const Terms& b) {
    Terms out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exponent > b[j].exponent)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exponent > a[i].exponent) {
            out.push_back(b[j++]);
        } else {
            AlgebraicReal c = a[i].coefficient + b[j].coefficient;
            if (!c.is_zero()) out.push_back(Term{a[i].exponent, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

Terms filter_at_least(Terms terms, const Rational& t) {
    while (!terms.empty() && terms.back().exponent < t) terms.pop_back();
    return terms;
}

// Keep terms with exponent < prev (and >= t unless take_tail).
Terms slice_terms(const Terms& terms, const Rational& t,
                  const std::optional<Rational>& prev, bool take_tail) {
    Terms out;
    for (const Term& term : terms) {
        if (prev && term.exponent >= *prev) continue;
        if (!take_tail && term.exponent < t) break;
        out.push_back(term);
    }
    return out;
}

} // namespace

/// Shared stream machinery.  collect(t) guarantees the cache holds every term
/// with exponent >= t; subclasses implement produce(t) computing that window
/// from scratch (children memoize, so repeated windows stay cheap).
class GermNode {
public:
    GermNode(Int ram, Rational bound) : ram_(std::move(ram)), bound_(std::move(bound)) {
        assert(ram_ > 0);
    }
    virtual ~GermNode() = default;

    const Int& ramification() const { return ram_; }
    const Rational& static_bound() const { return bound_; }

    Rational effective_bound() {
        std::lock_guard<std::mutex> lk(mu_);
        if (!cache_.empty()) return cache_.front().exponent;
        return bound_;
    }

    bool complete() {
        std::lock_guard<std::mutex> lk(mu_);
        return complete_;
    }

    bool provably_zero() {
        std::lock_guard<std::mutex> lk(mu_);
        return complete_ && cache_.empty();
    }

    std::optional<Rational> floor() {
        std::lock_guard<std::mutex> lk(mu_);
        return floor_;
    }

    void collect(const Rational& t) {
        std::lock_guard<std::mutex> lk(mu_);
        if (complete_) return;
        if (floor_ && *floor_ <= t) return;
        bool now_complete = false;
        Terms fresh = produce(t, floor_, now_complete);
        if (getenv("GOG_TRACE2")) {
            fprintf(stderr, "[collect %p t=%s prev=%s] %s ->", (void*)this,
                    t.str().c_str(), floor_ ? floor_->str().c_str() : "none",
                    origin().substr(0, 60).c_str());
            for (const Term& x : fresh)
                fprintf(stderr, " (%s;%s)", x.exponent.str().c_str(),
                        x.coefficient.short_str().c_str());
            fprintf(stderr, "%s\n", now_complete ? " [complete]" : "");
        }
        assert(std::is_sorted(fresh.begin(), fresh.end(),
                              [](const Term& x, const Term& y) {
                                  return x.exponent > y.exponent;
                              }));
        assert(!floor_ || fresh.empty() || fresh.front().exponent < *floor_);
        cache_.insert(cache_.end(), std::make_move_iterator(fresh.begin()),
                      std::make_move_iterator(fresh.end()));
        floor_ = t;
        complete_ = now_complete;
    }

    /// collect(t) then a copy of every confirmed term (superset of the
    /// window above t).
    Terms window(const Rational& t) {
        collect(t);
        std::lock_guard<std::mutex> lk(mu_);
        return cache_;
    }

    Terms snapshot() {
        std::lock_guard<std::mutex> lk(mu_);
        return cache_;
    }

    virtual std::string origin() const = 0;

protected:
    /// The new slice of terms with t <= exponent < prev (everything at or
    /// above prev is already cached; prev unset means nothing cached yet).
    /// When the stream can be finished, return every remaining term below
    /// prev and set `complete`.  Called under the node lock; may collect on
    /// child nodes only.
    virtual Terms produce(const Rational& t, const std::optional<Rational>& prev,
                          bool& complete) = 0;

    /// For nodes whose full term list is known at construction.
    void init_complete(Terms terms) {
        cache_ = std::move(terms);
        complete_ = true;
    }

private:
    Int ram_;
    Rational bound_;
    std::mutex mu_;
    Terms cache_;
    std::optional<Rational> floor_;
    bool complete_ = false;
};

namespace {

using NodePtr = std::shared_ptr<GermNode>;

Int den_of(const Rational& q) { return q.denominator(); }

class LeafNode final : public GermNode {
public:
    explicit LeafNode(Terms terms, std::string origin)
        : GermNode(grid_of(terms), terms.empty() ? Rational(0) : terms.front().exponent),
          terms_(terms),
          origin_(std::move(origin)) {
        init_complete(std::move(terms));
    }

    std::string origin() const override { return origin_; }

protected:
    Terms produce(const Rational& t, const std::optional<Rational>& prev,
                  bool& complete) override {
        complete = true;
        return slice_terms(terms_, t, prev, true);
    }

private:
    static Int grid_of(const Terms& ts) {
        Int d(1);
        for (const Term& t : ts) d = lcm(d, den_of(t.exponent));
        return d;
    }
    Terms terms_;
    std::string origin_;
};

class AddNode final : public GermNode {
public:
    AddNode(NodePtr f, NodePtr g)
        : GermNode(lcm(f->ramification(), g->ramification()),
                   Rational::max(f->static_bound(), g->static_bound())),
          f_(std::move(f)),
          g_(std::move(g)) {}

    std::string origin() const override {
        return "add(" + f_->origin() + ", " + g_->origin() + ")";
    }

protected:
    Terms produce(const Rational& t, const std::optional<Rational>& prev,
                  bool& complete) override {
        Terms wf = slice_terms(f_->window(t), t, prev, true);
        Terms wg = slice_terms(g_->window(t), t, prev, true);
        complete = f_->complete() && g_->complete();
        Terms merged = merge_terms(wf, wg);
        if (complete) return merged;
        return filter_at_least(std::move(merged), t);
    }

private:
    NodePtr f_, g_;
};

class MulNode final : public GermNode {
public:
    MulNode(NodePtr f, NodePtr g)
        : GermNode(lcm(f->ramification(), g->ramification()),
                   f->static_bound() + g->static_bound()),
          f_(std::move(f)),
          g_(std::move(g)) {}

    std::string origin() const override {
        return "mul(" + f_->origin() + ", " + g_->origin() + ")";
    }

protected:
    Terms produce(const Rational& t, const std::optional<Rational>& prev,
                  bool& complete) override {
        if (f_->provably_zero() || g_->provably_zero()) {
            complete = true;
            return {};
        }
        Terms wf = f_->window(t - g_->effective_bound());
        Terms wg = g_->window(t - f_->effective_bound());
        bool both = f_->complete() && g_->complete();
        std::map<Rational, AlgebraicReal, std::greater<Rational>> bucket;
        for (const Term& a : wf) {
            for (const Term& b : wg) {
                Rational q = a.exponent + b.exponent;
                if (prev && q >= *prev) continue;
                if (!both && q < t) continue;
                AlgebraicReal c = a.coefficient * b.coefficient;
                auto it = bucket.find(q);
                if (it == bucket.end()) bucket.emplace(std::move(q), std::move(c));
                else it->second = it->second + c;
            }
        }
        Terms out;
        for (auto& [q, c] : bucket)
            if (!c.is_zero()) out.push_back(Term{q, c});
        complete = both;
        return out;
    }

private:
    NodePtr f_, g_;
};

/// c0 * x^e0 * sum_k C(r, k) u^k, where every exponent of u is negative.
/// Covers reciprocals (r = -1), fractional powers and the substitution step
/// of composition.  r must not be a nonnegative integer (those are mul
/// chains, which keep exactness).
class BinomNode final : public GermNode {
public:
    BinomNode(NodePtr u, Rational u_bound, Rational r, AlgebraicReal c0, Rational e0)
        : GermNode(lcm(u->ramification(), den_of(e0)), e0),
          u_(std::move(u)),
          u_bound_(std::move(u_bound)),
          r_(std::move(r)),
          c0_(std::move(c0)),
          e0_(std::move(e0)) {
        assert(u_bound_.sign() < 0);
        assert(!(r_.is_integer() && r_.sign() >= 0));
    }

    std::string origin() const override {
        return "binom(" + u_->origin() + ", " + r_.str() + ")";
    }

protected:
    Terms produce(const Rational& t, const std::optional<Rational>& prev,
                  bool& complete) override {
        auto monomial_in_slice = [&]() { return !prev || e0_ < *prev; };
        Rational rel = t - e0_;
        if (rel > Rational(0) && !u_->provably_zero()) {
            complete = false;
            return {};
        }
        Terms wu = u_->window(Rational::min(rel, Rational(0)));
        if (u_->provably_zero()) {
            complete = true;
            if (t > e0_ || !monomial_in_slice()) return {};
            return {Term{e0_, c0_}};
        }
        if (wu.empty()) {
            // No tail term reaches the threshold, so u^k for k >= 1 cannot
            // either; only the k = 0 monomial survives.
            complete = false;
            if (!monomial_in_slice()) return {};
            return {Term{e0_, c0_}};
        }
        // u^k sits at or below k * lexp(u), so only finitely many k reach
        // the threshold.  The confirmed leading exponent of u is much
        // tighter than the grid bound once compositions stack up.
        Rational ub = Rational::min(wu.front().exponent, u_bound_);
        Int kmax = (rel / ub).floor();
        assert(kmax.fits_slong_p());
        long n = kmax.get_si();
        ensure_powers(n);
        std::map<Rational, AlgebraicReal, std::greater<Rational>> bucket;
        Rational binom(1);
        for (long k = 0; k <= n; ++k) {
            if (k > 0) binom = binom * (r_ - Rational(k - 1)) / Rational(k);
            if (binom.is_zero()) break;
            for (const Term& term : powers_[static_cast<size_t>(k)]->window(rel)) {
                if (term.exponent < rel) continue;
                Rational q = term.exponent + e0_;
                if (prev && q >= *prev) continue;
                AlgebraicReal c = term.coefficient * c0_ * AlgebraicReal(binom);
                if (getenv("GOG_TRACE"))
                    fprintf(stderr, "[binom %p r=%s] t=%s k=%ld u^k-term (%s ; %s) binom=%s contrib %s\n",
                            (void*)this, r_.str().c_str(), t.str().c_str(), k,
                            term.exponent.str().c_str(), term.coefficient.short_str().c_str(),
                            binom.str().c_str(), c.short_str().c_str());
                if (c.is_zero()) continue;
                auto it = bucket.find(q);
                if (it == bucket.end()) bucket.emplace(std::move(q), std::move(c));
                else it->second = it->second + c;
            }
        }
        Terms out;
        for (auto& [q, c] : bucket)
            if (!c.is_zero()) out.push_back(Term{q, c});
        complete = false;
        return out;
    }

private:
    void ensure_powers(long n) {
        if (powers_.empty())
            powers_.push_back(std::make_shared<LeafNode>(
                Terms{Term{Rational(0), AlgebraicReal(1)}}, "1"));
        while (static_cast<long>(powers_.size()) <= n)
            powers_.push_back(std::make_shared<MulNode>(powers_.back(), u_));
    }

    NodePtr u_;
    Rational u_bound_;
    Rational r_;
    AlgebraicReal c0_;
    Rational e0_;
    std::vector<NodePtr> powers_; // u^0, u^1, ... (guarded by the node lock)
};

class DeriveNode final : public GermNode {
public:
    explicit DeriveNode(NodePtr f)
        : GermNode(f->ramification(), f->static_bound() - Rational(1)), f_(std::move(f)) {}

    std::string origin() const override { return "D(" + f_->origin() + ")"; }

protected:
    Terms produce(const Rational& t, const std::optional<Rational>& prev,
                  bool& complete) override {
        Terms src = f_->window(t + Rational(1));
        complete = f_->complete();
        Terms out;
        out.reserve(src.size());
        for (const Term& term : src) {
            if (term.exponent.is_zero()) continue;
            Rational q = term.exponent - Rational(1);
            if (prev && q >= *prev) continue;
            if (!complete && q < t) continue;
            out.push_back(Term{q, term.coefficient * AlgebraicReal(term.exponent)});
        }
        return out;
    }

private:
    NodePtr f_;
};

/// Caps the declared exponent bound of a stream whose cancellations are known
/// structurally (the tail u of a leading factorization has exponents < 0).
class TightenNode final : public GermNode {
public:
    TightenNode(NodePtr f, Rational bound)
        : GermNode(f->ramification(), std::move(bound)), f_(std::move(f)) {}

    std::string origin() const override { return f_->origin(); }

protected:
    Terms produce(const Rational& t, const std::optional<Rational>& prev,
                  bool& complete) override {
        Terms inner = f_->window(t);
        complete = f_->complete(); // read only after the window forced f_
        Terms w = slice_terms(inner, t, prev, complete);
        for ([[maybe_unused]] const Term& term : w)
            assert(term.exponent <= static_bound() && "tightened bound violated");
        return w;
    }

private:
    NodePtr f_;
};

struct LeadingInfo {
    AlgebraicReal coeff;
    Rational exponent;
};

struct FirstTerm {
    std::optional<Term> term;
    bool proven_zero = false;
};

// First nonzero term, scanning at most `fuel` units below `start`.
// Geometric descent keeps shallow leads cheap.
FirstTerm first_term_below(GermNode& node, const Rational& start, Fuel fuel) {
    int budget = fuel.max_terms;
    int d = 1;
    while (true) {
        node.collect(start - Rational(d));
        Terms got = node.snapshot();
        if (!got.empty()) return {got.front(), false};
        if (node.complete()) return {std::nullopt, true};
        if (d >= budget) return {std::nullopt, false};
        d = std::min(d * 2, budget);
    }
}

FirstTerm first_term(GermNode& node, Fuel fuel) {
    Terms got = node.snapshot();
    if (!got.empty()) return {got.front(), false};
    if (node.complete()) return {std::nullopt, true};
    return first_term_below(node, node.effective_bound(), fuel);
}

class ComposeNode final : public GermNode {
public:
    ComposeNode(NodePtr a, NodePtr b, LeadingInfo lead_b, NodePtr u_b, Rational u_bound)
        : GermNode(lcm(a->ramification() * den_of(lead_b.exponent), b->ramification()),
                   a->static_bound() * lead_b.exponent),
          a_(std::move(a)),
          b_(std::move(b)),
          lead_(std::move(lead_b)),
          u_(std::move(u_b)),
          u_bound_(std::move(u_bound)) {}

    std::string origin() const override {
        return "(" + a_->origin() + " @ " + b_->origin() + ")";
    }

protected:
    Terms produce(const Rational& t, const std::optional<Rational>& prev,
                  bool& complete) override {
        if (a_->provably_zero()) {
            complete = true;
            return {};
        }
        Terms wa = a_->window(t / lead_.exponent);
        bool all_complete = a_->complete();
        std::map<Rational, AlgebraicReal, std::greater<Rational>> bucket;
        for (const Term& term : wa) {
            if (!all_complete && term.exponent * lead_.exponent < t) continue;
            NodePtr s = power_of_b(term.exponent);
            Terms ws = s->window(t);
            bool s_complete = s->complete();
            for (const Term& pt : ws) {
                if (prev && pt.exponent >= *prev) continue;
                if (!s_complete && pt.exponent < t) continue;
                AlgebraicReal c = term.coefficient * pt.coefficient;
                if (c.is_zero()) continue;
                if (getenv("GOG_TRACE"))
                    fprintf(stderr, "[compose %p] t=%s q=%s stream-term (%s ; %s) contrib %s\n",
                            (void*)this, t.str().c_str(), term.exponent.str().c_str(),
                            pt.exponent.str().c_str(), pt.coefficient.short_str().c_str(),
                            c.short_str().c_str());
                auto it = bucket.find(pt.exponent);
                if (it == bucket.end()) bucket.emplace(pt.exponent, std::move(c));
                else it->second = it->second + c;
            }
            if (!s_complete) all_complete = false;
        }
        Terms out;
        for (auto& [q, c] : bucket) {
            if (c.is_zero()) continue;
            if (all_complete || q >= t) out.push_back(Term{q, c});
        }
        complete = all_complete;
        return out;
    }

private:
    // b^q as a stream: an exact mul chain for nonnegative integer q, the
    // binomial series otherwise.
    NodePtr power_of_b(const Rational& q) {
        auto it = powers_.find(q);
        if (it != powers_.end()) return it->second;
        NodePtr s;
        if (q.is_zero()) {
            s = std::make_shared<LeafNode>(Terms{Term{Rational(0), AlgebraicReal(1)}}, "1");
        } else if (q.is_integer() && q.sign() > 0 && q.numerator().fits_slong_p()) {
            long n = q.numerator().get_si();
            s = b_;
            for (long i = 1; i < n; ++i) s = std::make_shared<MulNode>(s, b_);
        } else {
            s = std::make_shared<BinomNode>(u_, u_bound_, q, pow_rational(lead_.coeff, q),
                                            lead_.exponent * q);
        }
        powers_.emplace(q, s);
        return s;
    }

    NodePtr a_, b_;
    LeadingInfo lead_;
    NodePtr u_;
    Rational u_bound_;
    std::map<Rational, NodePtr> powers_; // guarded by the node lock
};

NodePtr make_leaf(Terms terms, std::string origin) {
    return std::make_shared<LeafNode>(std::move(terms), std::move(origin));
}

} // namespace

class FuncInverseNode final : public GermNode {
public:
    FuncInverseNode(NodePtr f, LeadingInfo lead, Fuel fuel)
        : GermNode(f->ramification() * lead.exponent.numerator() *
                       lead.exponent.denominator(),
                   Rational(1) / lead.exponent),
          f_(std::move(f)),
          lead_(std::move(lead)),
          fuel_(fuel) {}

    std::string origin() const override { return "inv(" + f_->origin() + ")"; }

protected:
    Terms produce(const Rational& t, const std::optional<Rational>& prev,
                  bool& complete) override;

private:
    NodePtr f_;
    LeadingInfo lead_;
    Fuel fuel_;
    // Iteration state (guarded by the node lock).
    Terms confirmed_;
    bool done_ = false;
    std::optional<Rational> residual_exp_;
};

} // namespace detail

using detail::GermNode;
using detail::Terms;

namespace {

using NodePtr = std::shared_ptr<GermNode>;

Germ wrap(NodePtr n) { return Germ(std::move(n)); }

// Leading decomposition f = c x^e (1 + u) with every exponent of u negative.
struct Factored {
    detail::LeadingInfo lead;
    NodePtr u;
    Rational u_bound;
};

Factored factor_leading(const Germ& f, Fuel fuel, ErrorCode missing_code, const char* what) {
    auto ft = detail::first_term(*f.node(), fuel);
    if (!ft.term) fail(missing_code, what);
    detail::LeadingInfo lead{ft.term->coefficient, ft.term->exponent};
    // u = f * c^-1 x^-e - 1; all of its terms sit strictly below 0.
    NodePtr shifted = std::make_shared<detail::MulNode>(
        f.node(),
        detail::make_leaf({Term{-lead.exponent, recip(lead.coeff)}}, "normalizer"));
    NodePtr u_raw = std::make_shared<detail::AddNode>(
        shifted, detail::make_leaf({Term{Rational(0), AlgebraicReal(-1)}}, "-1"));
    Rational step = Rational(1) / Rational(u_raw->ramification());
    NodePtr u = std::make_shared<detail::TightenNode>(u_raw, -step);
    return Factored{std::move(lead), std::move(u), -step};
}

} // namespace

namespace detail {

Terms FuncInverseNode::produce(const Rational& t, const std::optional<Rational>& prev,
                               bool& complete) {
    if (confirmed_.empty()) {
        AlgebraicReal c0 = pow_rational(lead_.coeff, -(Rational(1) / lead_.exponent));
        confirmed_.push_back(Term{Rational(1) / lead_.exponent, c0});
    }
    while (!done_ && confirmed_.back().exponent >= t) {
        Germ g = wrap(make_leaf(confirmed_, "partial-inverse"));
        Germ residual = sub(compose(wrap(f_), g, fuel_), Germ::x());
        Rational start =
            residual_exp_ ? *residual_exp_ : residual.node()->effective_bound();
        auto ft = first_term_below(*residual.node(), start, fuel_);
        if (ft.proven_zero) {
            done_ = true;
            break;
        }
        if (!ft.term)
            fail(ErrorCode::FuelExhausted,
                 "func_inverse: residual leading term not found within fuel");
        Germ deriv = compose(derive(wrap(f_)), g, fuel_);
        Term dlead = leading(deriv, fuel_);
        Rational q = ft.term->exponent - dlead.exponent;
        AlgebraicReal c = neg(ft.term->coefficient / dlead.coefficient);
        assert(q < confirmed_.back().exponent && "inverse corrections must descend");
        assert(!c.is_zero());
        confirmed_.push_back(Term{q, c});
        residual_exp_ = ft.term->exponent;
    }
    complete = done_;
    return slice_terms(confirmed_, t, prev, done_);
}

} // namespace detail

Germ::Germ() : node_(detail::make_leaf({}, "0")) {}

Germ Germ::x() {
    return wrap(detail::make_leaf({Term{Rational(1), AlgebraicReal(1)}}, "x"));
}

Germ Germ::constant(const AlgebraicReal& c) {
    if (c.is_zero()) return Germ();
    return wrap(detail::make_leaf({Term{Rational(0), c}}, c.short_str()));
}

Germ Germ::monomial(const AlgebraicReal& c, const Rational& q) {
    if (c.is_zero()) fail(ErrorCode::ZeroCoefficient, "monomial with zero coefficient");
    return wrap(detail::make_leaf({Term{q, c}},
                                  c.short_str() + "*x^(" + q.str() + ")"));
}

Germ Germ::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
    Terms merged;
    for (Term& t : terms) {
        if (!merged.empty() && merged.back().exponent == t.exponent)
            merged.back().coefficient = merged.back().coefficient + t.coefficient;
        else
            merged.push_back(std::move(t));
    }
    Terms cleaned;
    for (Term& t : merged)
        if (!t.coefficient.is_zero()) cleaned.push_back(std::move(t));
    return wrap(detail::make_leaf(std::move(cleaned), "sum"));
}

Int Germ::ramification() const { return node_->ramification(); }
Rational Germ::exponent_bound() const { return node_->effective_bound(); }

bool Germ::provably_zero() const {
    if (node_->provably_zero()) return true;
    if (node_->complete() || !node_->snapshot().empty()) return false;
    // One shallow probe so trivially finished streams report themselves.
    node_->collect(node_->effective_bound() - Rational(1));
    return node_->provably_zero();
}

bool Germ::provably_finite() const { return node_->complete(); }
std::string Germ::origin() const { return node_->origin(); }

bool Germ::is_identity() const {
    if (!node_->complete()) return false;
    Terms t = node_->snapshot();
    return t.size() == 1 && t[0].exponent == Rational(1) && t[0].coefficient.is_one();
}

std::vector<Term> Germ::terms_above(const Rational& t) const {
    return detail::filter_at_least(node_->window(t), t);
}

Germ add(const Germ& f, const Germ& g) {
    if (f.provably_zero()) return g;
    if (g.provably_zero()) return f;
    return wrap(std::make_shared<detail::AddNode>(f.node(), g.node()));
}

Germ neg(const Germ& f) { return scale(f, AlgebraicReal(-1)); }

Germ sub(const Germ& f, const Germ& g) { return add(f, neg(g)); }

Germ scale(const Germ& f, const AlgebraicReal& c) {
    if (c.is_zero()) return Germ();
    if (c.is_one()) return f;
    return mul(f, Germ::constant(c));
}

Germ mul(const Germ& f, const Germ& g) {
    if (f.provably_zero() || g.provably_zero()) return Germ();
    return wrap(std::make_shared<detail::MulNode>(f.node(), g.node()));
}

Germ recip(const Germ& f, Fuel fuel) {
    Factored fac = factor_leading(f, fuel, ErrorCode::ZeroDivisor,
                                  "recip: no nonzero term within fuel");
    if (fac.u->provably_zero())
        return Germ::monomial(recip(fac.lead.coeff), -fac.lead.exponent);
    return wrap(std::make_shared<detail::BinomNode>(
        fac.u, fac.u_bound, Rational(-1), recip(fac.lead.coeff), -fac.lead.exponent));
}

Germ rational_power(const Germ& f, const Rational& q, Fuel fuel) {
    if (q.is_zero()) return Germ::one();
    if (q.is_one()) return f;
    if (q.is_integer() && q.sign() > 0 && q.numerator().fits_slong_p()) {
        long n = q.numerator().get_si();
        Germ acc = f;
        for (long i = 1; i < n; ++i) acc = mul(acc, f);
        return acc;
    }
    Factored fac = factor_leading(f, fuel, ErrorCode::NonPositiveLeading,
                                  "rational_power: no leading term within fuel");
    if (fac.lead.coeff.sign() <= 0)
        fail(ErrorCode::NonPositiveLeading,
             "rational_power needs a positive leading coefficient");
    if (fac.u->provably_zero())
        return Germ::monomial(pow_rational(fac.lead.coeff, q), fac.lead.exponent * q);
    return wrap(std::make_shared<detail::BinomNode>(
        fac.u, fac.u_bound, q, pow_rational(fac.lead.coeff, q), fac.lead.exponent * q));
}

Germ derive(const Germ& f) { return wrap(std::make_shared<detail::DeriveNode>(f.node())); }

Germ compose(const Germ& a, const Germ& b, Fuel fuel) {
    Factored fac = factor_leading(b, fuel, ErrorCode::NotInfinitelyIncreasing,
                                  "compose: right operand has no leading term within fuel");
    if (fac.lead.exponent.sign() <= 0 || fac.lead.coeff.sign() <= 0)
        fail(ErrorCode::NotInfinitelyIncreasing,
             "compose: right operand is not > R (leading " +
                 render_term(Term{fac.lead.exponent, fac.lead.coeff}) + ")");
    if (b.is_identity()) return a;
    if (a.is_identity()) return b;
    if (a.provably_zero()) return Germ();
    return wrap(std::make_shared<detail::ComposeNode>(a.node(), b.node(), fac.lead, fac.u,
                                                      fac.u_bound));
}

Germ func_inverse(const Germ& f, Fuel fuel) {
    Factored fac = factor_leading(f, fuel, ErrorCode::NotInfinitelyIncreasing,
                                  "func_inverse: no leading term within fuel");
    if (fac.lead.exponent.sign() <= 0 || fac.lead.coeff.sign() <= 0)
        fail(ErrorCode::NotInfinitelyIncreasing, "func_inverse: germ is not > R");
    if (f.is_identity()) return f;
    return wrap(std::make_shared<detail::FuncInverseNode>(f.node(), fac.lead, fuel));
}

GermCmp cmp(const Germ& f, const Germ& g, Fuel fuel) {
    Germ d = sub(f, g);
    auto ft = detail::first_term(*d.node(), fuel);
    if (ft.term)
        return GermCmp{ft.term->coefficient.sign() > 0 ? GermOrder::Greater
                                                       : GermOrder::Less};
    return GermCmp{GermOrder::EqualToDepth, fuel.max_terms, ft.proven_zero};
}

std::optional<Term> try_leading(const Germ& f, Fuel fuel, bool* proven_zero) {
    auto ft = detail::first_term(*f.node(), fuel);
    if (proven_zero) *proven_zero = ft.proven_zero;
    return ft.term;
}

Term leading(const Germ& f, Fuel fuel) {
    auto ft = detail::first_term(*f.node(), fuel);
    if (!ft.term)
        fail(ErrorCode::FuelExhausted,
             "leading: no nonzero term within fuel of " + f.origin());
    return *ft.term;
}

AlgebraicReal coeff_at(const Germ& f, const Rational& q, Fuel fuel) {
    (void)fuel; // collection down to an exponent threshold is total
    for (const Term& t : f.node()->window(q)) {
        if (t.exponent == q) return t.coefficient;
        if (t.exponent < q) break;
    }
    return AlgebraicReal(0);
}

std::vector<Term> truncate(const Germ& f, int k, Fuel fuel) {
    NodePtr n = f.node();
    Rational start = n->effective_bound();
    int d = 1;
    while (true) {
        n->collect(start - Rational(d));
        Terms got = n->snapshot();
        if (static_cast<int>(got.size()) >= k || n->complete() || d >= fuel.max_terms) {
            if (static_cast<int>(got.size()) > k) got.resize(static_cast<size_t>(k));
            return got;
        }
        d = std::min(d * 2, fuel.max_terms);
    }
}

bool is_above_reals(const Germ& f, Fuel fuel) {
    auto t = try_leading(f, fuel);
    return t && t->exponent.sign() > 0 && t->coefficient.sign() > 0;
}

std::string render_term(const Term& t) {
    std::string c = t.coefficient.short_str();
    if (t.exponent.is_zero()) return c;
    std::string mono = t.exponent.is_one() ? "x" : "x^(" + t.exponent.str() + ")";
    if (t.coefficient.is_one()) return mono;
    if (t.coefficient.is_rational() && t.coefficient.rational_value() == Rational(-1))
        return "-" + mono;
    return c + "*" + mono;
}

std::string render(const Germ& f, int max_terms, Fuel fuel) {
    std::vector<Term> ts = truncate(f, max_terms, fuel);
    if (ts.empty()) {
        if (f.provably_zero()) return "0";
        return "O(x^(" + f.node()->floor().value_or(f.exponent_bound()).str() + "))";
    }
    std::ostringstream os;
    for (size_t i = 0; i < ts.size(); ++i) {
        std::string term = render_term(ts[i]);
        if (i == 0) os << term;
        else if (!term.empty() && term[0] == '-') os << " - " << term.substr(1);
        else os << " + " << term;
    }
    bool ended =
        f.provably_finite() && static_cast<int>(f.node()->snapshot().size()) <= max_terms;
    if (!ended) {
        Rational tail = f.node()->floor().value_or(ts.back().exponent);
        os << " + O(x^(" << tail.str() << "))";
    }
    return os.str();
}

} // namespace gog
