#include "imtori/numeric.hpp"

#include <cmath>

namespace imtori {

namespace {
unsigned g_precision_bits = 212;
}

void set_precision_bits(unsigned bits) {
    if (bits < 24) fail(Errc::Precision, "precision below 24 bits");
    g_precision_bits = bits;
    // boost's mpfr backend counts decimal digits.
    unsigned digits10 = static_cast<unsigned>(bits * 0.30103) + 4;
    BigFloat::default_precision(digits10);
}

unsigned precision_bits() { return g_precision_bits; }

BigFloat to_bigfloat(const Rat& q) {
    return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

BigFloat to_bigfloat(const Int& n) { return BigFloat(n); }

BigFloat pow2(long k) {
    BigFloat r(1);
    BigFloat two(2);
    long a = k < 0 ? -k : k;
    BigFloat p = pow(two, static_cast<unsigned>(a));
    return k < 0 ? r / p : p;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

bool is_prime_u64(std::uint64_t n) { return is_prime(Int(n)); }

long valuation_int(const Int& n, const Int& p) {
    if (n == 0) fail(Errc::Degenerate, "valuation of zero");
    Int m = abs(n);
    long v = 0;
    Int q, r;
    for (;;) {
        divide_qr(m, p, q, r);
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

long valuation(const Rat& q, const Int& p) {
    if (q == 0) fail(Errc::Degenerate, "valuation of zero");
    if (!is_prime(p)) fail(Errc::NotPrime, "valuation base must be prime");
    long v = valuation_int(numerator(q), p);
    if (v == 0) v = -valuation_int(denominator(q), p);
    return v;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int s = sqrt(n);
    return s * s == n;
}

bool is_square(const Rat& q) {
    if (q < 0) return false;
    return is_perfect_square(numerator(q)) && is_perfect_square(denominator(q));
}

std::vector<Int> prime_factors(const Int& n) {
    std::vector<Int> out;
    Int m = abs(n);
    if (m < 2) return out;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

Rat rat_pow(const Rat& q, unsigned k) {
    return Rat(pow(numerator(q), k), pow(denominator(q), k));
}

} // namespace imtori
