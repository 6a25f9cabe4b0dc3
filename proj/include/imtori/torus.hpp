#pragma once

#include <string>
#include <vector>

#include "imtori/poly.hpp"

namespace imtori {

using RealMat = std::vector<std::vector<BigFloat>>;
using RatMat = std::vector<std::vector<Rat>>;

struct CertifiedRoot {
    Complex value;
    BigFloat errorRadius;
};

// bit j selects the conjugate of the j-th upper-half-plane root
struct EmbeddingSignature {
    std::vector<bool> bits;

    static EmbeddingSignature from_string(const std::string& s);
    std::string to_string() const;
};

struct PeriodMatrix {
    unsigned g = 0;
    unsigned precisionBits = 0;
    std::vector<std::vector<Complex>> entries; // g x 2g
    std::vector<std::vector<BigFloat>> errors;
    EmbeddingSignature signature;
};

struct ComplexStructure {
    RealMat J;               // 2g x 2g, multiplication by i in the lattice basis
    BigFloat residual;       // max-norm of J^2 + I
    BigFloat conditionEstimate;
};

// All roots with certified error radii; residual contract
// |f(z)| < 2^-precisionBits * height(f), pairwise disjoint disks.
std::vector<CertifiedRoot> complex_roots(const RationalPoly& f, unsigned precisionBits);

// g conjugate pairs (upper-half representative first), ordered by (re, |im|).
std::vector<std::pair<CertifiedRoot, CertifiedRoot>> pair_conjugates(
    const std::vector<CertifiedRoot>& roots);

PeriodMatrix period_matrix(const RationalPoly& f, const EmbeddingSignature& signature,
                           unsigned precisionBits);

ComplexStructure complex_structure(const PeriodMatrix& pm);

// Multiplication by the root in the power basis.
RatMat companion_matrix(const RationalPoly& f);

// Dense linear algebra helpers at working precision.
RealMat real_mat_mul(const RealMat& a, const RealMat& b);
RealMat real_mat_solve(const RealMat& a, const RealMat& rhs); // a^-1 * rhs
BigFloat real_mat_max_norm(const RealMat& a);
RealMat rat_to_real(const RatMat& a);

std::string period_matrix_to_json(const PeriodMatrix& pm);

} // namespace imtori
