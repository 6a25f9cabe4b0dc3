#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "imtori/errors.hpp"

namespace imtori {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>>;

// Working precision is process-global; pipelines set it once per run.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

BigFloat to_bigfloat(const Rat& q);
BigFloat to_bigfloat(const Int& n);

// 2^-k as a BigFloat at current precision.
BigFloat pow2(long k);

bool is_prime(const Int& n);
bool is_prime_u64(std::uint64_t n);

// v_p(q); q must be nonzero, p prime.
long valuation(const Rat& q, const Int& p);
long valuation_int(const Int& n, const Int& p);

bool is_perfect_square(const Int& n);
// q is the square of a rational.
bool is_square(const Rat& q);

std::vector<Int> prime_factors(const Int& n);

// q^k; boost's pow does not cover gmp_rational.
Rat rat_pow(const Rat& q, unsigned k);

// Complex arithmetic over BigFloat; std::complex is not usable with mpfr-backed types.
struct Complex {
    BigFloat re;
    BigFloat im;

    Complex() : re(0), im(0) {}
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(long r) : re(r), im(0) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator-() const { return {-re, -im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator/(const Complex& o) const {
        BigFloat d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

    Complex conj() const { return {re, -im}; }
    BigFloat norm() const { return re * re + im * im; }
    BigFloat abs() const { return sqrt(norm()); }
};

} // namespace imtori
