#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "imtori/modp.hpp"

using namespace imtori;

namespace {

std::mt19937_64 rng(0xfeed2);

// All monic irreducibles over F_p up to maxDeg, by sieving trial division.
std::vector<ModPoly> monic_irreducibles(std::uint64_t p, int maxDeg) {
    std::vector<ModPoly> irr;
    std::vector<std::vector<std::uint64_t>> current; // monic polys of the working degree
    for (int d = 1; d <= maxDeg; ++d) {
        std::vector<std::uint64_t> c(static_cast<size_t>(d) + 1, 0);
        c[static_cast<size_t>(d)] = 1;
        while (true) {
            ModPoly f{p, c};
            bool divisible = false;
            for (const ModPoly& q : irr) {
                if (2 * q.degree() > d) break;
                if (mod_rem(f, q).is_zero()) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) irr.push_back(f);
            // increment the non-leading coefficients like a base-p counter
            int i = 0;
            for (; i < d; ++i) {
                if (++c[static_cast<size_t>(i)] < p) break;
                c[static_cast<size_t>(i)] = 0;
            }
            if (i == d) break;
        }
        std::sort(irr.begin(), irr.end(),
                  [](const ModPoly& a, const ModPoly& b) { return a.degree() < b.degree(); });
    }
    return irr;
}

std::map<unsigned, unsigned> factor_degrees_oracle(const ModPoly& f,
                                                   const std::vector<ModPoly>& irr) {
    std::map<unsigned, unsigned> out;
    ModPoly rem = f;
    for (const ModPoly& q : irr) {
        while (rem.degree() >= q.degree() && mod_rem(rem, q).is_zero()) {
            out[static_cast<unsigned>(q.degree())]++;
            rem = mod_divmod(rem, q).first;
        }
    }
    REQUIRE(rem.degree() == 0);
    return out;
}

ModPoly rand_modpoly(std::uint64_t p, int deg) {
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    std::vector<std::uint64_t> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = coef(rng);
    c.back() = 1 + coef(rng) % (p - 1 > 0 ? p - 1 : 1);
    return ModPoly{p, c};
}

} // namespace

TEST_CASE("word arithmetic helpers") {
    CHECK(mulmod_u64(0xffffffffull, 0xffffffffull, 1000000007ull) ==
          (static_cast<unsigned __int128>(0xffffffffull) * 0xffffffffull % 1000000007ull));
    CHECK(powmod_u64(3, 100, 101) == 1); // Fermat
    for (std::uint64_t a = 1; a < 13; ++a) CHECK(mulmod_u64(a, invmod_u64(a, 13), 13) == 1);
}

TEST_CASE("reduce_mod guards") {
    RationalPoly f = RationalPoly::parse("x^4 - 5*x + 112/27");
    CHECK_THROWS_AS(reduce_mod(f, 3), Error); // 3 | denominator
    ModPoly m = reduce_mod(f, 5);
    CHECK(m.degree() == 4);
    // 112/27 mod 5: 27^-1 = 3, 112*3 = 336 = 1 mod 5
    CHECK(m.coeffs[0] == 1);
    RationalPoly drop = RationalPoly::parse("5*x^2 + x + 1");
    CHECK_THROWS_AS(reduce_mod(drop, 5), Error); // leading coefficient vanishes
}

TEST_CASE("mod ring operations agree with evaluation") {
    for (std::uint64_t p : {5ull, 7ull}) {
        for (int iter = 0; iter < 20; ++iter) {
            ModPoly a = rand_modpoly(p, 4), b = rand_modpoly(p, 3);
            auto eval = [&](const ModPoly& f, std::uint64_t x) {
                std::uint64_t acc = 0;
                for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
                    acc = (mulmod_u64(acc, x, p) + *it) % p;
                return acc;
            };
            for (std::uint64_t x = 0; x < p; ++x) {
                CHECK(eval(mod_add(a, b), x) == (eval(a, x) + eval(b, x)) % p);
                CHECK(eval(mod_mul(a, b), x) == mulmod_u64(eval(a, x), eval(b, x), p));
                auto [q, r] = mod_divmod(a, b);
                CHECK((mulmod_u64(eval(q, x), eval(b, x), p) + eval(r, x)) % p == eval(a, x));
            }
        }
    }
}

TEST_CASE("distinct degree split matches trial-division factorization") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        std::vector<ModPoly> irr = monic_irreducibles(p, 6);
        int done = 0;
        while (done < 25) {
            ModPoly f = rand_modpoly(p, 3 + static_cast<int>(rng() % 4));
            if (f.degree() < 1) continue;
            // restrict to squarefree inputs; the operation rejects the rest
            if (mod_gcd(f, mod_derivative(f)).degree() != 0) {
                CHECK_THROWS_AS(distinct_degree_split(f), Error);
                continue;
            }
            CHECK(distinct_degree_split(f) == factor_degrees_oracle(f, irr));
            ++done;
        }
    }
}

TEST_CASE("frobenius cycle types of the classic quartic") {
    RationalPoly f = RationalPoly::parse("x^4 + x + 1");
    CycleType t3 = frobenius_cycle_type(f, 3);
    CHECK(t3.parts == std::vector<unsigned>{1, 3});
    CycleType t2 = frobenius_cycle_type(f, 2);
    CHECK(t2.parts == std::vector<unsigned>{4});
    // disc = 229, prime: the only ramified prime
    CHECK_THROWS_AS(frobenius_cycle_type(f, 229), Error);
}
