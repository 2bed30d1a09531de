#include "doctest.h"

#include <random>

#include "gog/algebraic.hpp"
#include "gog/polynomial.hpp"
#include "gog/rational.hpp"

using namespace gog;

namespace {

AlgebraicReal sqrt2() { return root(AlgebraicReal(2), 2); }
AlgebraicReal sqrt3() { return root(AlgebraicReal(3), 2); }

Rational rnd_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 6);
    return Rational(num(rng), den(rng));
}

// Random algebraic number of degree <= 4: r or r^(1/n) for n in {2,3,4}.
AlgebraicReal rnd_algebraic(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3);
    int k = kind(rng);
    if (k == 0) return AlgebraicReal(rnd_rational(rng));
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> den(1, 4);
    AlgebraicReal base((Rational(num(rng), den(rng))));
    AlgebraicReal r = root(base, k + 1);
    std::uniform_int_distribution<int> flip(0, 1);
    return flip(rng) ? neg(r) : r;
}

} // namespace

TEST_CASE("rational arithmetic and rendering") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a + b).str() == "5/6");
    CHECK(Rational(-4, 8).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(2, 3).pow_int(-2) == Rational(9, 4));
    CHECK_THROWS_AS(a / Rational(0), Error);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).ceil() == 4);
}

TEST_CASE("polynomial basics") {
    ZPoly p(std::vector<Int>{Int(-2), Int(0), Int(1)}); // x^2 - 2
    CHECK(p.str() == "x^2 - 2");
    CHECK(p.eval(Rational(2)) == Rational(2));
    CHECK(p.derivative().str() == "2*x");
    ZPoly sq = p * p;
    CHECK(sq.squarefree_part() == p);
    CHECK(p.count_roots(Rational(0), Rational(2)) == 1);
    CHECK(p.count_roots(Rational(-2), Rational(2)) == 2);
    CHECK(p.count_roots(Rational(2), Rational(3)) == 0);
}

TEST_CASE("resultant oracle: Res_y(y^2-2, (x-y)^2-3) = x^4 - 10x^2 + 1") {
    ZPoly A(std::vector<Int>{Int(-2), Int(0), Int(1)});
    ZPoly B(std::vector<Int>{Int(-3), Int(0), Int(1)});
    ZPoly r = resultant_sum(A, B).primitive();
    ZPoly expected(std::vector<Int>{Int(1), Int(0), Int(-10), Int(0), Int(1)});
    CHECK(r == expected);
}

TEST_CASE("simplest rational in interval") {
    CHECK(simplest_rational_between(Rational(31, 10), Rational(32, 10)) == Rational(19, 6));
    CHECK(simplest_rational_between(Rational(-1, 2), Rational(1, 3)) == Rational(0));
    CHECK(simplest_rational_between(Rational(19, 10), Rational(26, 10)) == Rational(2));
    CHECK(simplest_rational_between(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
}

TEST_CASE("algebraic add: sqrt2 + sqrt3 is the expected quartic root") {
    AlgebraicReal s = add(sqrt2(), sqrt3());
    CHECK_FALSE(s.is_rational());
    ZPoly expected(std::vector<Int>{Int(1), Int(0), Int(-10), Int(0), Int(1)});
    CHECK(s.minpoly() == expected);
    AlgebraicReal tight = s.refined(Rational(1, 100));
    CHECK(tight.lower() > Rational(31, 10));
    CHECK(tight.upper() < Rational(32, 10));
}

TEST_CASE("algebraic add: sqrt2 + (-sqrt2) = 0") {
    AlgebraicReal z = add(sqrt2(), neg(sqrt2()));
    CHECK(z.is_rational());
    CHECK(z.is_zero());
}

TEST_CASE("algebraic mul and recip") {
    CHECK(mul(sqrt2(), sqrt2()) == AlgebraicReal(2));
    CHECK(mul(sqrt2(), sqrt2()).is_rational());

    AlgebraicReal r = recip(sqrt2());
    ZPoly expected(std::vector<Int>{Int(-1), Int(0), Int(2)}); // 2x^2 - 1
    CHECK(r.minpoly() == expected);
    CHECK(mul(r, sqrt2()) == AlgebraicReal(1));
    CHECK(neg(AlgebraicReal(0)).is_zero());
    CHECK_THROWS_AS(recip(AlgebraicReal(0)), Error);
}

TEST_CASE("algebraic cmp") {
    CHECK(cmp(sqrt2(), AlgebraicReal(Rational(3, 2))) == Cmp::Less);
    AlgebraicReal a = sqrt3();
    CHECK(cmp(a, a) == Cmp::Equal);
    CHECK(cmp(mul(sqrt2(), sqrt2()), AlgebraicReal(2)) == Cmp::Equal);
    CHECK(cmp(sqrt2(), sqrt3()) == Cmp::Less);
    CHECK(cmp(add(sqrt2(), AlgebraicReal(1)), sqrt3()) == Cmp::Greater);
}

TEST_CASE("roots") {
    CHECK(root(AlgebraicReal(4), 2) == AlgebraicReal(2));
    CHECK(root(AlgebraicReal(4), 2).is_rational());

    AlgebraicReal s = root(AlgebraicReal(2), 2);
    ZPoly expected(std::vector<Int>{Int(-2), Int(0), Int(1)});
    CHECK(s.minpoly() == expected);

    AlgebraicReal c = root(AlgebraicReal(8), 3);
    CHECK(mul(mul(c, c), c) == AlgebraicReal(8));

    CHECK(root(AlgebraicReal(-8), 3) == AlgebraicReal(-2));
    CHECK_THROWS_AS(root(AlgebraicReal(-1), 2), Error);
}

TEST_CASE("pow_rational") {
    CHECK(pow_rational(AlgebraicReal(4), Rational(3, 2)) == AlgebraicReal(8));
    AlgebraicReal a = add(sqrt2(), AlgebraicReal(1));
    CHECK(pow_rational(a, Rational(1)) == a);
    AlgebraicReal h = pow_rational(AlgebraicReal(2), Rational(1, 2));
    CHECK(mul(h, h) == AlgebraicReal(2));
    CHECK(pow_rational(a, Rational(0)) == AlgebraicReal(1));
    CHECK(pow_rational(AlgebraicReal(2), Rational(-1)) == AlgebraicReal(Rational(1, 2)));
}

TEST_CASE("degree-1 normalization catches rational values") {
    // (sqrt3 + sqrt2)(sqrt3 - sqrt2) = 1
    AlgebraicReal p = mul(add(sqrt3(), sqrt2()), add(sqrt3(), neg(sqrt2())));
    CHECK(p.is_rational());
    CHECK(p.rational_value() == Rational(1));
}

TEST_CASE("field axioms on random degree <= 4 samples") {
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 25; ++i) {
        AlgebraicReal a = rnd_algebraic(rng);
        AlgebraicReal b = rnd_algebraic(rng);
        AlgebraicReal c = rnd_algebraic(rng);
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(add(a, neg(a)).is_zero());
        if (!a.is_zero()) CHECK(mul(a, recip(a)) == AlgebraicReal(1));
    }
}

TEST_CASE("order compatible with addition and positive multiplication") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 25; ++i) {
        AlgebraicReal a = rnd_algebraic(rng);
        AlgebraicReal b = rnd_algebraic(rng);
        AlgebraicReal c = rnd_algebraic(rng);
        if (cmp(a, b) == Cmp::Less) {
            CHECK(cmp(add(a, c), add(b, c)) == Cmp::Less);
            if (c.sign() > 0) CHECK(cmp(mul(a, c), mul(b, c)) == Cmp::Less);
        }
    }
}

TEST_CASE("root and pow laws") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        AlgebraicReal a = rnd_algebraic(rng);
        if (a.sign() <= 0) continue;
        for (int n : {2, 3}) {
            AlgebraicReal r = root(a, n);
            CHECK(r.pow_int(n) == a);
        }
        Rational p = rnd_rational(rng), q = rnd_rational(rng);
        CHECK(mul(pow_rational(a, p), pow_rational(a, q)) == pow_rational(a, p + q));
    }
}

TEST_CASE("decimal rendering") {
    CHECK(sqrt2().decimal(5) == "1.41421");
    CHECK(AlgebraicReal(Rational(-3, 2)).decimal(3) == "-1.5");
    CHECK(AlgebraicReal(7).decimal(4) == "7");
    CHECK(sqrt2().str().find("algebraic(minpoly=x^2 - 2") == 0);
}
