#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "imtori/families.hpp"
#include "imtori/galois.hpp"
#include "imtori/lattice.hpp"

namespace imtori {

inline constexpr int kSchemaVersion = 1;

// Canonical payload lives in `doc` (sorted keys, decimal-string integers).
// `timings` is a side channel excluded from serialization and equality.
struct TorusReport {
    nlohmann::json doc;
    nlohmann::json timings;

    bool operator==(const TorusReport& o) const { return doc == o.doc; }
};

std::string serialize(const TorusReport& r);
TorusReport parse(const std::string& bytes);

inline Rat pow10_inv(unsigned k) {
    Int d(1);
    for (unsigned i = 0; i < k; ++i) d *= 10;
    return Rat(1, d);
}

struct PipelineOptions {
    unsigned precisionBits = 212;
    std::uint64_t primeBudget = 500;
    Int heightBound = Int(100000000);
    Rat tol = pow10_inv(40);
    std::string signature; // empty = all-zero
    bool certify = true;
    bool torus = true;
    unsigned maxPrecisionRetries = 4;
};

struct PipelineResult {
    TorusReport report;
    bool certificatesOk = true;
};

// generate -> certify -> build torus -> compute invariants -> report.
// familyKind in {EXP, SELMER, MORI, CUSTOM}; quad may carry the Mori
// parameters for the ramification section.
PipelineResult run_pipeline(const std::string& familyKind, const nlohmann::json& parameters,
                            const RationalPoly& f, const PipelineOptions& opts,
                            const AdmissibleQuadruple* quad = nullptr);

} // namespace imtori
