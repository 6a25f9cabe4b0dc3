#include <doctest.h>

#include <random>

#include "imtori/poly.hpp"

using namespace imtori;

namespace {

std::mt19937_64 rng(0x5eed1);

Rat rand_rat(int hi = 20) {
    std::uniform_int_distribution<int> num(-hi, hi);
    std::uniform_int_distribution<int> den(1, 6);
    return Rat(num(rng), den(rng));
}

RationalPoly rand_poly(int deg, int hi = 20) {
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rand_rat(hi));
    while (!c.empty() && c.back() == 0) c.pop_back();
    return RationalPoly::from_rationals(c);
}

} // namespace

TEST_CASE("interval arithmetic is inclusion-correct") {
    DyadicInterval a(Rat(-1, 3), Rat(1, 2));
    DyadicInterval b(Rat(2), Rat(3));
    CHECK((a * b).lo == Rat(-1));
    CHECK((a * b).hi == Rat(3, 2));
    CHECK((a + b).lo == Rat(5, 3));
    CHECK(a.contains_zero());
    CHECK(a.sign() == 0);
    CHECK(b.sign() == 1);
    CHECK(DyadicInterval(Rat(-5), Rat(-1)).sign() == -1);
}

TEST_CASE("polynomials normalize to lowest terms") {
    RationalPoly f({Int(2), Int(4)}, Int(6)); // (2+4x)/6 = (1+2x)/3
    CHECK(f.den() == 3);
    CHECK(f.coeffs() == std::vector<Int>{Int(1), Int(2)});
    CHECK(f.coeff(1) == Rat(2, 3));

    RationalPoly g = RationalPoly::from_rationals({Rat(1, 2), Rat(1, 3)});
    CHECK(g.den() == 6);
    CHECK(g.coeffs() == std::vector<Int>{Int(3), Int(2)});
}

TEST_CASE("parse accepts monomial lists") {
    RationalPoly f = RationalPoly::parse("x^4 - 5*x + 112/27");
    CHECK(f.degree() == 4);
    CHECK(f.coeff(4) == 1);
    CHECK(f.coeff(1) == -5);
    CHECK(f.coeff(0) == Rat(112, 27));
    CHECK(RationalPoly::parse(f.to_string()) == f);
}

TEST_CASE("json round trip") {
    for (int i = 0; i < 20; ++i) {
        RationalPoly f = rand_poly(6);
        CHECK(RationalPoly::from_json(f.to_json()) == f);
    }
}

TEST_CASE("ring operations agree with evaluation") {
    for (int i = 0; i < 30; ++i) {
        RationalPoly f = rand_poly(5), g = rand_poly(4);
        Rat x = rand_rat(5);
        CHECK((f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x));
        CHECK((f - g).evaluate(x) == f.evaluate(x) - g.evaluate(x));
        CHECK((f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x));
    }
}

TEST_CASE("divmod reconstructs the dividend") {
    for (int i = 0; i < 20; ++i) {
        RationalPoly f = rand_poly(6), d = rand_poly(3);
        if (d.is_zero()) continue;
        auto [q, r] = f.divmod(d);
        CHECK(q * d + r == f);
        CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("interval evaluation encloses the exact value") {
    for (int i = 0; i < 20; ++i) {
        RationalPoly f = rand_poly(5);
        Rat lo = rand_rat(4);
        DyadicInterval x(lo, lo + Rat(1, 7));
        Rat mid = lo + Rat(1, 14);
        DyadicInterval y = f.evaluate(x);
        CHECK(y.lo <= f.evaluate(mid));
        CHECK(f.evaluate(mid) <= y.hi);
    }
}

TEST_CASE("resultant edge cases") {
    RationalPoly z = RationalPoly::zero();
    RationalPoly f = RationalPoly::parse("x^2 + 1");
    CHECK_THROWS_AS(resultant(z, z), Error);
    CHECK(resultant(z, f) == 0);
    CHECK(resultant(RationalPoly::from_rationals({Rat(3)}),
                    RationalPoly::from_rationals({Rat(5)})) == 1);
}

TEST_CASE("resultant is multiplicative and vanishes on shared roots") {
    for (int i = 0; i < 15; ++i) {
        RationalPoly f = rand_poly(3), g = rand_poly(2), h = rand_poly(2);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
    // common factor (x - 2)
    RationalPoly common = RationalPoly::parse("x - 2");
    RationalPoly f = common * RationalPoly::parse("x^2 + 3");
    RationalPoly g = common * RationalPoly::parse("x + 5");
    CHECK(resultant(f, g) == 0);
}

TEST_CASE("discriminant matches closed forms") {
    CHECK(discriminant(RationalPoly::parse("x^4 + x + 1")) == 229);
    CHECK(discriminant(RationalPoly::parse("x^4 - 5*x + 112/27")) == Rat(27510943, 19683));
    CHECK(discriminant(RationalPoly::parse("x^4 - 5*x + 140/27")) == Rat(370313375, 19683));
    for (int i = 0; i < 20; ++i) {
        Rat b = rand_rat(), c = rand_rat();
        RationalPoly quad = RationalPoly::from_rationals({c, b, Rat(1)});
        CHECK(discriminant(quad) == b * b - 4 * c);
        Rat p = rand_rat(), q = rand_rat();
        RationalPoly dep = RationalPoly::from_rationals({q, p, Rat(0), Rat(1)});
        CHECK(discriminant(dep) == -4 * p * p * p - 27 * q * q);
    }
    CHECK_THROWS_AS(discriminant(RationalPoly::parse("x + 1")), Error);
}

TEST_CASE("sturm counts on known polynomials") {
    CHECK(sturm_count(RationalPoly::parse("x^2 + 1")) == 0);
    CHECK(sturm_count(RationalPoly::parse("x^2 - 2")) == 2);
    CHECK(sturm_count(RationalPoly::parse("x^4 + x + 1")) == 0);
    RationalPoly cubic = RationalPoly::parse("x - 1") * RationalPoly::parse("x - 2") *
                         RationalPoly::parse("x + 3");
    CHECK(sturm_count(cubic) == 3);
    // repeated root counted once
    RationalPoly sq = RationalPoly::parse("x - 1") * RationalPoly::parse("x - 1");
    CHECK(sturm_count(sq) == 1);
    CHECK_THROWS_AS(sturm_count(RationalPoly::zero()), Error);
}

TEST_CASE("sturm agrees with constructed root counts") {
    std::uniform_int_distribution<int> root(-8, 8);
    std::uniform_int_distribution<int> nreal(0, 3), ncplx(0, 2);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<int> roots;
        int nr = nreal(rng);
        while (static_cast<int>(roots.size()) < nr) {
            int r = root(rng);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        RationalPoly f = RationalPoly::from_rationals({Rat(1)});
        for (int r : roots) f = f * RationalPoly::from_rationals({Rat(-r), Rat(1)});
        for (int j = ncplx(rng); j > 0; --j) {
            // x^2 + ax + b with a^2 < 4b: no real roots
            int a = root(rng);
            Rat b = Rat(a * a, 4) + 1 + (j % 3);
            f = f * RationalPoly::from_rationals({b, Rat(a), Rat(1)});
        }
        if (f.degree() < 1) continue;
        CHECK(sturm_count(f) == roots.size());
    }
}

TEST_CASE("gcd and squarefree part") {
    RationalPoly a = RationalPoly::parse("x^2 - 1");
    RationalPoly b = RationalPoly::parse("x^2 - 2*x + 1");
    RationalPoly g = a.gcd(b);
    CHECK(g == RationalPoly::parse("x - 1"));
    RationalPoly f = a * b; // (x-1)^3 (x+1)
    RationalPoly sf = f.squarefree_part();
    CHECK(sf.degree() == 2);
    CHECK(sf.gcd(sf.derivative()).degree() == 0);
}
