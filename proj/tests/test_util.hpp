#ifndef GOG_TEST_UTIL_HPP
#define GOG_TEST_UTIL_HPP

#include <map>
#include <random>
#include <vector>

#include "gog/germ.hpp"

namespace gog::testutil {

inline Rational rnd_small_rational(std::mt19937_64& rng, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

// Finite germ with <= max_terms terms, exponents on the 1/4 grid in [-2, 2].
inline Germ rnd_finite_germ(std::mt19937_64& rng, int max_terms = 4,
                            bool above_reals = false) {
    std::uniform_int_distribution<int> nterms(above_reals ? 0 : 1, max_terms - 1);
    std::uniform_int_distribution<int> expq(-8, 8);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::vector<Term> terms;
    if (above_reals) {
        std::uniform_int_distribution<int> lead_exp(1, 8);
        std::uniform_int_distribution<int> lead_coef(1, 5);
        terms.push_back(Term{Rational(lead_exp(rng), 4), AlgebraicReal(lead_coef(rng))});
    }
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int c = coef(rng);
        if (c == 0) continue;
        Rational q(expq(rng), 4);
        if (above_reals && q >= terms.front().exponent) continue;
        terms.push_back(Term{q, AlgebraicReal(c)});
    }
    return Germ::from_terms(std::move(terms));
}

// Naive dense arithmetic on finite exponent->coefficient maps; the
// independent oracle for ring-law checks.
using PolyMap = std::map<Rational, AlgebraicReal>;

inline PolyMap to_map(const std::vector<Term>& ts) {
    PolyMap m;
    for (const Term& t : ts) m.emplace(t.exponent, t.coefficient);
    return m;
}

inline PolyMap map_add(const PolyMap& a, const PolyMap& b) {
    PolyMap out = a;
    for (const auto& [q, c] : b) {
        auto it = out.find(q);
        if (it == out.end()) out.emplace(q, c);
        else it->second = it->second + c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

inline PolyMap map_mul(const PolyMap& a, const PolyMap& b) {
    PolyMap out;
    for (const auto& [qa, ca] : a)
        for (const auto& [qb, cb] : b) {
            AlgebraicReal c = ca * cb;
            auto it = out.find(qa + qb);
            if (it == out.end()) out.emplace(qa + qb, c);
            else it->second = it->second + c;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// Exact equality of the first k confirmed terms.
inline bool same_truncation(const Germ& f, const Germ& g, int k, Fuel fuel = Fuel()) {
    auto tf = truncate(f, k, fuel);
    auto tg = truncate(g, k, fuel);
    if (tf.size() != tg.size()) return false;
    for (size_t i = 0; i < tf.size(); ++i) {
        if (tf[i].exponent != tg[i].exponent) return false;
        if (tf[i].coefficient != tg[i].coefficient) return false;
    }
    return true;
}

inline bool equal_to_depth(const Germ& f, const Germ& g, int units) {
    return cmp(f, g, Fuel(units)).equal_to_depth();
}

} // namespace gog::testutil

#endif
