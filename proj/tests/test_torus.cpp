#include <doctest.h>

#include <random>

#include "imtori/torus.hpp"

using namespace imtori;

namespace {
std::mt19937_64 rng(0x70305);
}

TEST_CASE("roots of x^2 + 1") {
    set_precision_bits(128);
    auto roots = complex_roots(RationalPoly::parse("x^2 + 1"), 128);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) {
        CHECK(abs(r.value.re) < pow2(-100));
        CHECK(abs(abs(r.value.im) - 1) < pow2(-100));
        CHECK(r.errorRadius < pow2(-100));
    }
    CHECK_THROWS_AS(complex_roots(RationalPoly::parse("x^2 + 2*x + 1"), 128), Error);
}

TEST_CASE("root products reproduce the constant term") {
    set_precision_bits(192);
    for (int iter = 0; iter < 15; ++iter) {
        std::vector<Rat> c;
        int deg = 3 + static_cast<int>(rng() % 5);
        for (int i = 0; i < deg; ++i)
            c.push_back(Rat(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 3)));
        c.push_back(Rat(1));
        RationalPoly f = RationalPoly::from_rationals(c);
        if (f.squarefree_part() != f || f.coeff(0) == 0) continue;
        auto roots = complex_roots(f, 192);
        REQUIRE(roots.size() == static_cast<size_t>(deg));
        Complex prod(1);
        for (const auto& r : roots) prod *= r.value;
        Rat expected = (deg % 2 ? -1 : 1) * f.coeff(0);
        CHECK(abs(prod.re - to_bigfloat(expected)) < pow2(-120));
        CHECK(abs(prod.im) < pow2(-120));
    }
}

TEST_CASE("root count on the real axis matches sturm") {
    set_precision_bits(160);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<Rat> c;
        int deg = 2 + static_cast<int>(rng() % 7);
        for (int i = 0; i < deg; ++i) c.push_back(Rat(static_cast<long>(rng() % 21) - 10));
        c.push_back(Rat(1 + static_cast<long>(rng() % 3)));
        RationalPoly f = RationalPoly::from_rationals(c);
        if (f.squarefree_part() != f) continue;
        auto roots = complex_roots(f, 160);
        unsigned real = 0;
        for (const auto& r : roots)
            if (abs(r.value.im) <= r.errorRadius) ++real;
        CHECK(real == sturm_count(f));
    }
}

TEST_CASE("conjugate pairing") {
    set_precision_bits(160);
    auto roots = complex_roots(RationalPoly::parse("x^4 + x + 1"), 160);
    auto pairs = pair_conjugates(roots);
    REQUIRE(pairs.size() == 2);
    for (const auto& [up, down] : pairs) {
        CHECK(up.value.im > 0);
        CHECK(abs(up.value.re - down.value.re) < pow2(-120));
        CHECK(abs(up.value.im + down.value.im) < pow2(-120));
    }
    auto realroots = complex_roots(RationalPoly::parse("x^2 - 2"), 160);
    CHECK_THROWS_AS(pair_conjugates(realroots), Error);
}

TEST_CASE("embedding signatures") {
    EmbeddingSignature s = EmbeddingSignature::from_string("0110");
    CHECK(s.bits == std::vector<bool>{false, true, true, false});
    CHECK(s.to_string() == "0110");
    CHECK_THROWS_AS(EmbeddingSignature::from_string("01a"), Error);
}

TEST_CASE("period matrix and complex structure for the classic quartic") {
    RationalPoly f = RationalPoly::parse("x^4 + x + 1");
    for (const char* sigStr : {"00", "01", "10", "11"}) {
        EmbeddingSignature sig = EmbeddingSignature::from_string(sigStr);
        PeriodMatrix pm = period_matrix(f, sig, 212);
        CHECK(pm.g == 2);
        REQUIRE(pm.entries.size() == 2);
        REQUIRE(pm.entries[0].size() == 4);
        ComplexStructure cs = complex_structure(pm);
        CHECK(cs.residual < pow2(-166)); // 1e-50
        CHECK(cs.conditionEstimate > 1);
        BigFloat res = commutation_residual(companion_matrix(f), cs.J);
        CHECK(res < pow2(-166));
    }
    CHECK_THROWS_AS(period_matrix(f, EmbeddingSignature::from_string("000"), 212), Error);
}

TEST_CASE("companion matrix") {
    RationalPoly f = RationalPoly::parse("x^4 + x + 1");
    RatMat c = companion_matrix(f);
    REQUIRE(c.size() == 4);
    CHECK(c[1][0] == 1);
    CHECK(c[0][3] == -1); // -a_0
    CHECK(c[1][3] == -1); // -a_1
    CHECK(c[2][3] == 0);
    CHECK(c[3][3] == 0);
    CHECK_THROWS_AS(companion_matrix(RationalPoly::parse("2*x^2 + 1")), Error);
}

TEST_CASE("dense solver round trips") {
    set_precision_bits(128);
    RealMat a(3, std::vector<BigFloat>(3));
    for (auto& row : a)
        for (auto& x : row) x = BigFloat(static_cast<long>(rng() % 17) - 8) / 3;
    a[0][0] += 20; a[1][1] += 20; a[2][2] += 20; // well conditioned
    RealMat id(3, std::vector<BigFloat>(3, BigFloat(0)));
    for (int i = 0; i < 3; ++i) id[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    RealMat inv = real_mat_solve(a, id);
    RealMat prod = real_mat_mul(a, inv);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(abs(prod[static_cast<size_t>(i)][static_cast<size_t>(j)] - id[static_cast<size_t>(i)][static_cast<size_t>(j)]) < pow2(-100));
    RealMat singular(2, std::vector<BigFloat>(2, BigFloat(1)));
    CHECK_THROWS_AS(real_mat_solve(singular, RealMat(2, std::vector<BigFloat>(2, BigFloat(1)))),
                    Error);
}
