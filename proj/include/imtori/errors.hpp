#pragma once

#include <stdexcept>
#include <string>

namespace imtori {

enum class Errc {
    Degenerate,
    DegreeTooSmall,
    NotPrime,
    DenominatorNotInvertible,
    DegreeDrop,
    NotSquarefree,
    RamifiedPrime,
    ZeroConstantTerm,
    NoTransitivity,
    OracleScope,
    BadDegree,
    InvalidQuadruple,
    UnsupportedShape,
    Precision,
    ExcludedPrime,
    BadCount,
    SearchBudget,
    FormulaMismatch,
    Conjugacy,
    RealRoot,
    NotMonic,
    DegenerateLattice,
    Dependent,
    Schema,
    Inconsistent,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace imtori
