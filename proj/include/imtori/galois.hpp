#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "imtori/modp.hpp"
#include "imtori/newton.hpp"

namespace imtori {

enum class WitnessKind { ModpPrime, EisensteinDumas, Cited };

struct IrreducibilityWitness {
    WitnessKind kind;
    Int prime;            // the witnessing prime for the computational kinds
    std::string citation; // theorem name for Cited
};

struct GaloisEvidence {
    RationalPoly f;
    unsigned n = 0;
    std::vector<std::pair<std::uint64_t, CycleType>> samples;
    std::optional<IrreducibilityWitness> witness;
};

enum class GroupDetermination { Sn, An, Undetermined };
enum class CertLevel { ProvedComputationally, Cited };

struct GaloisCertificate {
    bool transitive = false;
    bool twoTransitive = false;
    bool primitive = false;
    bool containsAlternating = false;
    GroupDetermination groupDetermination = GroupDetermination::Undetermined;
    bool noProperSubfield = false;
    CertLevel certLevel = CertLevel::ProvedComputationally;
    // per-flag provenance: witness prime or theorem name
    std::string transitiveWitness;
    std::string twoTransitiveWitness;
    std::string alternatingWitness;

    std::string to_json() const;
};

// Smallest unramified prime with f irreducible mod p, or an Eisenstein-Dumas
// certificate at a prime dividing den(f). nullopt when nothing is found.
std::optional<IrreducibilityWitness> irreducibility_witness(const RationalPoly& f,
                                                            std::uint64_t primeBudget);

// Cycle types at every unramified prime up to the budget, ascending.
GaloisEvidence collect_evidence(const RationalPoly& f, std::uint64_t primeBudget,
                                const IrreducibilityWitness& witness);

GaloisCertificate certify(const GaloisEvidence& ev, const Rat& disc);

enum class QuarticGroup { S4, A4, D4, C4, V4 };
std::string quartic_group_name(QuarticGroup g);

// Independent resolvent-cubic oracle for irreducible quartics.
QuarticGroup quartic_galois_oracle(const RationalPoly& f);

} // namespace imtori
