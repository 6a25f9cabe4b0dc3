#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "imtori/poly.hpp"

namespace imtori {

// Dense polynomial over F_p for machine-word p.
struct ModPoly {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> coeffs; // ascending, all < p, no trailing zeros

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    void trim();
};

// Multiset of cycle lengths of a permutation of n points.
struct CycleType {
    std::vector<unsigned> parts; // sorted ascending
    unsigned n = 0;

    bool operator==(const CycleType& o) const = default;
};

ModPoly mod_add(const ModPoly& a, const ModPoly& b);
ModPoly mod_sub(const ModPoly& a, const ModPoly& b);
ModPoly mod_mul(const ModPoly& a, const ModPoly& b);
ModPoly mod_rem(const ModPoly& a, const ModPoly& b);
ModPoly mod_gcd(ModPoly a, ModPoly b);
ModPoly mod_derivative(const ModPoly& a);
// a^e mod m, e arbitrary precision.
ModPoly mod_powmod(const ModPoly& a, const Int& e, const ModPoly& m);
std::pair<ModPoly, ModPoly> mod_divmod(const ModPoly& a, const ModPoly& b);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

ModPoly reduce_mod(const RationalPoly& f, std::uint64_t p);

// Counts of irreducible factors per degree; fb must be squarefree.
std::map<unsigned, unsigned> distinct_degree_split(const ModPoly& fb);

// Frobenius cycle type of f at an unramified prime p (Dedekind).
CycleType frobenius_cycle_type(const RationalPoly& f, std::uint64_t p);

} // namespace imtori
