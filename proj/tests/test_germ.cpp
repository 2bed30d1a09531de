#include "doctest.h"

#include "gog/germ.hpp"
#include "test_util.hpp"

using namespace gog;
using namespace gog::testutil;

namespace {

Germ germ_x() { return Germ::x(); }

Term term(long c, const Rational& q) { return Term{q, AlgebraicReal(c)}; }

bool has_terms(const Germ& f, const std::vector<Term>& expected, int k = 16) {
    auto got = truncate(f, k);
    if (got.size() != expected.size()) return false;
    for (size_t i = 0; i < got.size(); ++i)
        if (got[i].exponent != expected[i].exponent ||
            got[i].coefficient != expected[i].coefficient)
            return false;
    return true;
}

} // namespace

TEST_CASE("constructors") {
    CHECK(has_terms(germ_x(), {term(1, Rational(1))}));
    CHECK(has_terms(Germ::constant(AlgebraicReal(5)), {term(5, Rational(0))}));
    CHECK(has_terms(Germ::monomial(AlgebraicReal(3), Rational(-2)),
                    {term(3, Rational(-2))}));
    CHECK_THROWS_AS(Germ::monomial(AlgebraicReal(0), Rational(1)), Error);
    CHECK(Germ().provably_zero());
}

TEST_CASE("add, sub, mul") {
    Germ x = germ_x();
    CHECK(has_terms(add(x, Germ::one()), {term(1, Rational(1)), term(1, Rational(0))}));

    Germ f = add(x, Germ::monomial(AlgebraicReal(1), Rational(1, 2)));
    Germ d = sub(f, f);
    CHECK(cmp(d, Germ()).equal_to_depth());
    CHECK(cmp(d, Germ()).proven);

    Germ p = mul(add(x, Germ::one()), sub(x, Germ::one()));
    CHECK(has_terms(p, {term(1, Rational(2)), term(-1, Rational(0))}));
    CHECK(p.provably_finite());
}

TEST_CASE("recip") {
    CHECK(has_terms(recip(germ_x()), {term(1, Rational(-1))}));

    // 1/(1 + x^-1) = 1 - x^-1 + x^-2 - ...
    Germ g = add(Germ::one(), Germ::monomial(AlgebraicReal(1), Rational(-1)));
    auto ts = truncate(recip(g), 4);
    REQUIRE(ts.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(ts[static_cast<size_t>(i)].exponent == Rational(-i));
        CHECK(ts[static_cast<size_t>(i)].coefficient ==
              AlgebraicReal(i % 2 == 0 ? 1 : -1));
    }

    // recip is a one-sided inverse to 10 confirmed positions
    Germ f = add(mul(germ_x(), germ_x()), germ_x());
    Germ prod = mul(recip(f), f);
    auto tp = truncate(prod, 10);
    REQUIRE(tp.size() == 1);
    CHECK(tp[0].exponent == Rational(0));
    CHECK(tp[0].coefficient == AlgebraicReal(1));

    CHECK_THROWS_AS(recip(Germ()), Error);
}

TEST_CASE("rational_power") {
    Germ x2 = mul(germ_x(), germ_x());
    CHECK(has_terms(rational_power(x2, Rational(1, 2)), {term(1, Rational(1))}));

    // Oracle: (x^2+x)^(1/2) = x * sum_k C(1/2, k) x^-k with the generalized
    // binomial coefficients computed independently here.
    Germ f = add(x2, germ_x());
    Germ h = rational_power(f, Rational(1, 2));
    auto ts = truncate(h, 6);
    Rational binom(1);
    for (int k = 0; k < 6; ++k) {
        if (k > 0) binom = binom * (Rational(1, 2) - Rational(k - 1)) / Rational(k);
        CHECK(ts[static_cast<size_t>(k)].exponent == Rational(1) - Rational(k));
        CHECK(ts[static_cast<size_t>(k)].coefficient == AlgebraicReal(binom));
    }
    CHECK(ts[1].coefficient == AlgebraicReal(Rational(1, 2)));
    CHECK(ts[2].coefficient == AlgebraicReal(Rational(-1, 8)));
    CHECK(ts[3].coefficient == AlgebraicReal(Rational(1, 16)));

    CHECK(has_terms(rational_power(f, Rational(0)), {term(1, Rational(0))}));
    CHECK_THROWS_AS(rational_power(neg(germ_x()), Rational(1, 2)), Error);
}

TEST_CASE("derive") {
    CHECK(has_terms(derive(germ_x()), {term(1, Rational(0))}));
    CHECK(derive(Germ::constant(AlgebraicReal(7))).provably_zero());

    Germ f = add(mul(germ_x(), germ_x()),
                 Germ::monomial(AlgebraicReal(3), Rational(1, 2)));
    auto ts = truncate(derive(f), 4);
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].exponent == Rational(1));
    CHECK(ts[0].coefficient == AlgebraicReal(2));
    CHECK(ts[1].exponent == Rational(-1, 2));
    CHECK(ts[1].coefficient == AlgebraicReal(Rational(3, 2)));
}

TEST_CASE("compose") {
    Germ x = germ_x();
    Germ x2 = mul(x, x);

    Germ c1 = compose(x2, add(x, Germ::one()));
    CHECK(has_terms(c1, {term(1, Rational(2)), term(2, Rational(1)), term(1, Rational(0))}));
    CHECK(c1.provably_finite());

    Germ f = add(x, Germ::monomial(AlgebraicReal(1), Rational(1, 2)));
    Germ c2 = compose(f, x2);
    CHECK(has_terms(c2, {term(1, Rational(2)), term(1, Rational(1))}));

    // compose(x^(1/2), x^2 + x) agrees with the rational_power oracle
    Germ left = compose(Germ::monomial(AlgebraicReal(1), Rational(1, 2)), add(x2, x));
    Germ right = rational_power(add(x2, x), Rational(1, 2));
    CHECK(same_truncation(left, right, 8));

    CHECK_THROWS_AS(compose(x, Germ::monomial(AlgebraicReal(1), Rational(-1))), Error);
    CHECK_THROWS_AS(compose(x, neg(x)), Error);
}

TEST_CASE("func_inverse") {
    Germ x = germ_x();
    CHECK(has_terms(func_inverse(add(x, Germ::one())),
                    {term(1, Rational(1)), term(-1, Rational(0))}));
    CHECK(has_terms(func_inverse(mul(x, x)), {term(1, Rational(1, 2))}));

    Germ f = add(x, Germ::monomial(AlgebraicReal(1), Rational(1, 2)));
    Germ g = func_inverse(f);
    auto ts = truncate(g, 4);
    REQUIRE(ts.size() == 4);
    CHECK(ts[0].exponent == Rational(1));
    CHECK(ts[0].coefficient == AlgebraicReal(1));
    CHECK(ts[1].exponent == Rational(1, 2));
    CHECK(ts[1].coefficient == AlgebraicReal(-1));
    CHECK(ts[2].exponent == Rational(0));
    CHECK(ts[2].coefficient == AlgebraicReal(Rational(1, 2)));
    CHECK(ts[3].exponent == Rational(-1, 2));
    CHECK(ts[3].coefficient == AlgebraicReal(Rational(-1, 8)));

    CHECK(equal_to_depth(compose(f, g), x, 8));
    CHECK(equal_to_depth(compose(g, f), x, 8));
}

TEST_CASE("cmp") {
    Germ x = germ_x();
    Germ x2 = mul(x, x);
    CHECK(cmp(x2, scale(x, AlgebraicReal(2))).greater());
    Germ f = add(x, Germ::monomial(AlgebraicReal(1), Rational(1, 2)));
    CHECK(cmp(f, scale(x, AlgebraicReal(2))).less());
    CHECK(cmp(f, f).equal_to_depth());
}

TEST_CASE("leading, coeff_at, truncate") {
    Germ f = add(scale(mul(germ_x(), germ_x()), AlgebraicReal(4)), germ_x());
    Term lt = leading(f);
    CHECK(lt.exponent == Rational(2));
    CHECK(lt.coefficient == AlgebraicReal(4));

    CHECK(coeff_at(add(germ_x(), Germ::one()), Rational(0)) == AlgebraicReal(1));
    CHECK(coeff_at(add(germ_x(), Germ::one()), Rational(1, 2)).is_zero());

    Germ g = recip(add(Germ::one(), Germ::monomial(AlgebraicReal(1), Rational(-1))));
    auto ts = truncate(g, 3);
    REQUIRE(ts.size() == 3);
    CHECK(ts[0].exponent == Rational(0));
    CHECK(ts[1].coefficient == AlgebraicReal(-1));
    CHECK(ts[2].exponent == Rational(-2));

    CHECK_THROWS_AS(leading(sub(f, f)), Error);
}

TEST_CASE("render") {
    Germ f = add(scale(mul(germ_x(), germ_x()), AlgebraicReal(4)), germ_x());
    CHECK(render(f) == "4*x^(2) + x");
    Germ g = recip(add(Germ::one(), Germ::monomial(AlgebraicReal(1), Rational(-1))));
    CHECK(render(g, 3).find("1 - x^(-1) + x^(-2) + O(x^(") == 0);
    CHECK(render(Germ()) == "0");
}

TEST_CASE("ring axioms against the dense oracle") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 40; ++i) {
        Germ f = rnd_finite_germ(rng);
        Germ g = rnd_finite_germ(rng);
        PolyMap mf = to_map(truncate(f, 32));
        PolyMap mg = to_map(truncate(g, 32));

        PolyMap sum = map_add(mf, mg);
        PolyMap prod = map_mul(mf, mg);
        auto got_sum = to_map(truncate(add(f, g), 32, Fuel(48)));
        auto got_prod = to_map(truncate(mul(f, g), 32, Fuel(48)));
        CHECK(got_sum.size() == sum.size());
        CHECK(got_prod.size() == prod.size());
        for (const auto& [q, c] : sum) {
            auto it = got_sum.find(q);
            REQUIRE(it != got_sum.end());
            CHECK(it->second == c);
        }
        for (const auto& [q, c] : prod) {
            auto it = got_prod.find(q);
            REQUIRE(it != got_prod.end());
            CHECK(it->second == c);
        }
    }
}

TEST_CASE("HFC axioms to depth") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 12; ++i) {
        Germ a = rnd_finite_germ(rng);
        Germ a2 = rnd_finite_germ(rng);
        Germ b = rnd_finite_germ(rng, 3, true);
        Germ d = rnd_finite_germ(rng, 3, true);

        // HFC4
        CHECK(equal_to_depth(compose(a, Germ::x()), a, 10));
        CHECK(equal_to_depth(compose(Germ::x(), b), b, 10));

        // HFC2 associativity
        Germ lhs = compose(a, compose(b, d));
        Germ rhs = compose(compose(a, b), d);
        CHECK(equal_to_depth(lhs, rhs, 8));

        // HFC1 ring morphism
        Germ l1 = compose(add(mul(a, a2), a), b);
        Germ r1 = add(mul(compose(a, b), compose(a2, b)), compose(a, b));
        CHECK(equal_to_depth(l1, r1, 8));
    }
}

TEST_CASE("HFC3 monotonicity in the right argument") {
    std::mt19937_64 rng(303);
    int checked = 0;
    for (int i = 0; i < 30 && checked < 10; ++i) {
        Germ a = rnd_finite_germ(rng, 3, true);
        Germ b1 = rnd_finite_germ(rng, 3, true);
        Germ b2 = rnd_finite_germ(rng, 3, true);
        GermCmp c = cmp(b1, b2);
        if (c.equal_to_depth()) continue;
        if (c.greater()) std::swap(b1, b2);
        GermCmp cc = cmp(compose(a, b1), compose(a, b2));
        CHECK(cc.less());
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("group law: compose with func_inverse is the identity to depth") {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 10; ++i) {
        Germ f = rnd_finite_germ(rng, 4, true);
        Germ g = func_inverse(f);
        CHECK(equal_to_depth(compose(f, g), Germ::x(), 10));
        CHECK(equal_to_depth(compose(g, f), Germ::x(), 10));
    }
}

TEST_CASE("grid invariant: emitted exponents lie on the declared grid") {
    std::mt19937_64 rng(505);
    for (int i = 0; i < 10; ++i) {
        Germ f = rnd_finite_germ(rng, 4, true);
        Germ g = rnd_finite_germ(rng, 4, true);
        for (const Germ& h :
             {add(f, g), mul(f, g), compose(f, g), func_inverse(f), recip(f),
              rational_power(f, Rational(3, 2)), derive(f)}) {
            Rational d{h.ramification()};
            for (const Term& t : truncate(h, 12, Fuel(16))) {
                Rational scaled = t.exponent * d;
                CHECK(scaled.is_integer());
            }
        }
    }
}

TEST_CASE("memoized streams are observation-order independent") {
    Germ f = add(mul(germ_x(), germ_x()), germ_x());
    Germ r1 = recip(f);
    Germ r2 = recip(f);
    auto deep = truncate(r1, 9);
    (void)truncate(r2, 2);
    auto shallow_then_deep = truncate(r2, 9);
    REQUIRE(deep.size() == shallow_then_deep.size());
    for (size_t i = 0; i < deep.size(); ++i) {
        CHECK(deep[i].exponent == shallow_then_deep[i].exponent);
        CHECK(deep[i].coefficient == shallow_then_deep[i].coefficient);
    }
}
