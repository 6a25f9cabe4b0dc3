#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imtori/poly.hpp"

namespace imtori {

// (g,l,p,b,c) of the x^{2g} - bx - pc/l^l family, with per-condition flags.
struct AdmissibleQuadruple {
    unsigned g = 0;
    Int l, p, b, c;
    bool lDividesTwoGMinusOne = false;
    bool pCoprime = false;
    bool bPrimitiveRoot = false;
    bool lNotDividesB = false;
    bool lNotDividesC = false;
    bool radicalDividesPMinusOne = false;
    bool noRealRoots = false;

    bool valid() const {
        return lDividesTwoGMinusOne && pCoprime && bPrimitiveRoot && lNotDividesB &&
               lNotDividesC && radicalDividesPMinusOne && noRealRoots;
    }
    std::string to_json() const;
};

enum class RamificationConclusion { Ramified, Unramified, Undecided };

struct RamificationWitness {
    Int ell;
    long discValuation = 0;
    RamificationConclusion conclusion = RamificationConclusion::Undecided;

    std::string to_json() const;
};

struct FamilyMember {
    AdmissibleQuadruple quad;
    RationalPoly poly;
    Rat disc;
    std::optional<RamificationWitness> witness; // absent for the first member
};

struct FamilyReport {
    unsigned g = 0;
    std::vector<FamilyMember> members;
    // distinguisher[i][j]: prime separating members i and j (0 on the diagonal)
    std::vector<std::vector<Int>> pairwiseDistinguishers;

    std::string to_json() const;
};

struct SearchBudgets {
    std::uint64_t primeBudget = 10000;
    Int cMax = 1000000;
};

// sum_{j<=n} x^j / j!, n even.
RationalPoly truncated_exponent(unsigned n);

struct SelmerPoly {
    RationalPoly poly;
    bool reducibleRisk = false; // g = n/2 congruent to 1 mod 3
};
SelmerPoly selmer(unsigned n);

AdmissibleQuadruple is_admissible(unsigned g, const Int& l, const Int& p, const Int& b,
                                  const Int& c);

RationalPoly mori_poly(const AdmissibleQuadruple& q, bool force = false);
RationalPoly mori_poly_raw(unsigned g, const Int& l, const Int& p, const Int& b, const Int& c);

enum class RealRootVerdict { NoRealRoots, HasRealRoots };

struct RealRootExclusion {
    DyadicInterval closedFormMin; // certified enclosure of min_R f
    unsigned sturmCount = 0;
    RealRootVerdict verdict = RealRootVerdict::HasRealRoots;
};

// Certified interval evaluation at the derivative's real zero, cross-checked
// against the Sturm count. Requires b > 0.
RealRootExclusion real_root_exclusion(unsigned g, const Int& l, const Int& p, const Int& b,
                                      const Int& c);

Int primitive_root(const Int& p);
bool is_primitive_root(const Int& b, const Int& p);

// Closed-form trinomial discriminant, asserted against the resultant route.
Rat trinomial_disc_closed(unsigned g, const Int& l, const Int& p, const Int& b, const Int& c);

RamificationWitness ramification_witness(const RationalPoly& f, const Int& ell, const Int& l);

AdmissibleQuadruple search_quadruple(unsigned g, const SearchBudgets& budgets = {});

FamilyReport build_family(unsigned g, unsigned count, const SearchBudgets& budgets = {});

} // namespace imtori
