#pragma once

#include <string>
#include <vector>

#include "imtori/numeric.hpp"

namespace imtori {

// Exact interval with rational endpoints, used for certified sign evaluation.
struct DyadicInterval {
    Rat lo;
    Rat hi;

    DyadicInterval() : lo(0), hi(0) {}
    DyadicInterval(Rat a, Rat b);
    static DyadicInterval point(const Rat& a) { return DyadicInterval(a, a); }

    Rat width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    // +1 / -1 when the interval is strictly signed, 0 otherwise.
    int sign() const;

    DyadicInterval operator+(const DyadicInterval& o) const;
    DyadicInterval operator-(const DyadicInterval& o) const;
    DyadicInterval operator*(const DyadicInterval& o) const;
};

// Univariate polynomial over Q, stored as an integer coefficient vector
// (ascending degree) over a positive denominator, always in lowest terms.
class RationalPoly {
public:
    RationalPoly() : den_(1) {}
    RationalPoly(std::vector<Int> coeffs, Int den);
    static RationalPoly zero() { return RationalPoly(); }
    static RationalPoly from_rationals(const std::vector<Rat>& coeffs);
    // c * x^k
    static RationalPoly monomial(const Rat& c, unsigned k);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& den() const { return den_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(unsigned k) const;
    Rat leading() const;
    bool is_monic() const { return !is_zero() && coeffs_.back() == den_; }

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly scaled(const Rat& c) const;
    bool operator==(const RationalPoly& o) const = default;

    RationalPoly derivative() const;
    Rat evaluate(const Rat& x) const;
    DyadicInterval evaluate(const DyadicInterval& x) const;
    Complex evaluate(const Complex& z) const;

    // Quotient/remainder over Q; divisor must be nonzero.
    std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const;

    // Primitive integer gcd with positive leading coefficient.
    RationalPoly gcd(const RationalPoly& o) const;
    RationalPoly squarefree_part() const;

    // Largest absolute value among the rational coefficients.
    Rat height() const;

    std::string to_string() const;
    std::string to_json() const;
    static RationalPoly from_json(const std::string& text);
    // Accepts "x^4 - 5*x + 112/27" style monomial lists.
    static RationalPoly parse(const std::string& text);

private:
    void normalize();

    std::vector<Int> coeffs_;
    Int den_;
};

// Res(f, g) by exact elimination on the Sylvester matrix.
Rat resultant(const RationalPoly& f, const RationalPoly& g);

// (-1)^{n(n-1)/2} Res(f, f') / lc(f)
Rat discriminant(const RationalPoly& f);

// Number of distinct real roots, via the Sturm chain of the squarefree part.
unsigned sturm_count(const RationalPoly& f);

} // namespace imtori
