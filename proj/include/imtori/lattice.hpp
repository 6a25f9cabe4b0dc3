#pragma once

#include <string>
#include <vector>

#include "imtori/torus.hpp"

namespace imtori {

using IntMat = std::vector<std::vector<Int>>;

struct LLLResult {
    IntMat basis;
    IntMat transform; // unimodular, basis = transform * input
};

// Exact integer LLL (all-integer Gram-Schmidt), delta = 99/100.
LLLResult lll_reduce(const IntMat& basis);

enum class KernelMethod { Exact, LllNumeric };

struct IntegerKernelResult {
    unsigned rank = 0;
    IntMat basis;
    std::vector<BigFloat> residuals;
    Int heightBound;
    BigFloat tolerance;
    KernelMethod method = KernelMethod::LllNumeric;

    std::string to_json() const;
};

// Integer near-kernel of a real linear map given as a k x m matrix with a
// uniform entry error bound. One-sided: reported vectors are near-kernel
// vectors; rank 0 only means none exist below (H, tol).
IntegerKernelResult integer_kernel_numeric(const RealMat& L, const BigFloat& entryError,
                                           const Int& H, const BigFloat& tol);

// Exact rational kernel, saturated to primitive integer vectors.
IntegerKernelResult integer_kernel_exact(const RatMat& L);

// Integer alternating forms E with J^t E J = E.
IntegerKernelResult ns_rank(const ComplexStructure& cs, const Int& H, const BigFloat& tol);
IntegerKernelResult ns_rank_exact(const RatMat& J);
IntegerKernelResult ns_rank_numeric(const RatMat& J, const Int& H, const BigFloat& tol);

// Integer matrices M with MJ = JM.
IntegerKernelResult end_rank(const ComplexStructure& cs, const Int& H, const BigFloat& tol);
IntegerKernelResult end_rank_exact(const RatMat& J);
IntegerKernelResult end_rank_numeric(const RatMat& J, const Int& H, const BigFloat& tol);

BigFloat commutation_residual(const RatMat& M, const RealMat& J);

unsigned rational_rank(std::vector<std::vector<Rat>> rows);
bool same_rational_rowspace(const std::vector<std::vector<Rat>>& a,
                            const std::vector<std::vector<Rat>>& b);

struct InvariantReport {
    IntegerKernelResult nsRank;
    IntegerKernelResult endRank;
    BigFloat companionResidual;

    std::string to_json() const;
};

} // namespace imtori
