#include "imtori/modp.hpp"

#include <algorithm>

namespace imtori {

void ModPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    // p prime, a != 0 mod p
    return powmod_u64(a % p, p - 2, p);
}

ModPoly mod_add(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.p, {}};
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        std::uint64_t s = 0;
        if (i < a.coeffs.size()) s += a.coeffs[i];
        if (i < b.coeffs.size()) s += b.coeffs[i];
        r.coeffs[i] = s % a.p;
    }
    r.trim();
    return r;
}

ModPoly mod_sub(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.p, {}};
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        std::uint64_t s = a.p;
        if (i < a.coeffs.size()) s += a.coeffs[i];
        if (i < b.coeffs.size()) s -= b.coeffs[i];
        r.coeffs[i] = s % a.p;
    }
    r.trim();
    return r;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.p, {}};
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            r.coeffs[i + j] =
                (r.coeffs[i + j] + static_cast<__uint128_t>(a.coeffs[i]) * b.coeffs[j]) % a.p;
        }
    }
    r.trim();
    return r;
}

std::pair<ModPoly, ModPoly> mod_divmod(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) fail(Errc::Degenerate, "mod-p division by zero polynomial");
    ModPoly rem = a;
    ModPoly quot{a.p, {}};
    int db = b.degree();
    if (rem.degree() >= db) quot.coeffs.assign(rem.degree() - db + 1, 0);
    std::uint64_t inv_lc = invmod_u64(b.coeffs.back(), a.p);
    for (int k = rem.degree(); k >= db; --k) {
        std::uint64_t q = mulmod_u64(rem.coeffs[k], inv_lc, a.p);
        if (q == 0) continue;
        quot.coeffs[k - db] = q;
        for (int j = 0; j <= db; ++j) {
            std::uint64_t sub = mulmod_u64(q, b.coeffs[j], a.p);
            rem.coeffs[k - db + j] = (rem.coeffs[k - db + j] + a.p - sub) % a.p;
        }
    }
    rem.trim();
    quot.trim();
    return {quot, rem};
}

ModPoly mod_rem(const ModPoly& a, const ModPoly& b) { return mod_divmod(a, b).second; }

ModPoly mod_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = mod_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.coeffs.back() != 1) {
        std::uint64_t inv = invmod_u64(a.coeffs.back(), a.p);
        for (auto& c : a.coeffs) c = mulmod_u64(c, inv, a.p);
    }
    return a;
}

ModPoly mod_derivative(const ModPoly& a) {
    ModPoly r{a.p, {}};
    if (a.degree() < 1) return r;
    r.coeffs.resize(a.coeffs.size() - 1);
    for (size_t i = 1; i < a.coeffs.size(); ++i)
        r.coeffs[i - 1] = mulmod_u64(a.coeffs[i], i % a.p, a.p);
    r.trim();
    return r;
}

ModPoly mod_powmod(const ModPoly& a, const Int& e, const ModPoly& m) {
    ModPoly base = mod_rem(a, m);
    ModPoly result{a.p, {1 % a.p}};
    Int exp = e;
    while (exp > 0) {
        if ((exp & 1) != 0) result = mod_rem(mod_mul(result, base), m);
        base = mod_rem(mod_mul(base, base), m);
        exp >>= 1;
    }
    return result;
}

ModPoly reduce_mod(const RationalPoly& f, std::uint64_t p) {
    Int P(p);
    if (f.den() % P == 0)
        fail(Errc::DenominatorNotInvertible, "prime divides the denominator");
    if (!f.is_zero() && f.coeffs().back() % P == 0)
        fail(Errc::DegreeDrop, "prime divides the leading coefficient");
    std::uint64_t inv_den = invmod_u64(static_cast<std::uint64_t>(f.den() % P), p);
    ModPoly r{p, {}};
    r.coeffs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        Int m = c % P;
        if (m < 0) m += P;
        r.coeffs.push_back(mulmod_u64(static_cast<std::uint64_t>(m), inv_den, p));
    }
    r.trim();
    return r;
}

std::map<unsigned, unsigned> distinct_degree_split(const ModPoly& fb) {
    if (fb.degree() < 1) fail(Errc::Degenerate, "nothing to split");
    ModPoly g = mod_gcd(fb, mod_derivative(fb));
    if (g.degree() > 0) fail(Errc::NotSquarefree, "input polynomial is not squarefree");

    std::map<unsigned, unsigned> out;
    ModPoly rem = fb;
    ModPoly x{fb.p, {0, 1}};
    ModPoly h = x; // x^{p^d} mod rem, starting at d = 0
    for (unsigned d = 1; rem.degree() >= 1; ++d) {
        if (static_cast<int>(2 * d) > rem.degree()) {
            // leftover factor is irreducible
            out[static_cast<unsigned>(rem.degree())] += 1;
            break;
        }
        h = mod_powmod(h, Int(fb.p), rem);
        ModPoly gd = mod_gcd(rem, mod_sub(h, x));
        if (gd.degree() > 0) {
            out[d] += static_cast<unsigned>(gd.degree()) / d;
            rem = mod_divmod(rem, gd).first;
            h = mod_rem(h, rem);
        }
    }
    return out;
}

CycleType frobenius_cycle_type(const RationalPoly& f, std::uint64_t p) {
    Rat disc = discriminant(f);
    if (numerator(disc) % Int(p) == 0)
        fail(Errc::RamifiedPrime, "prime divides the discriminant numerator");
    ModPoly fb = reduce_mod(f, p);
    auto split = distinct_degree_split(fb);
    CycleType ct;
    for (const auto& [d, count] : split)
        for (unsigned i = 0; i < count; ++i) ct.parts.push_back(d);
    std::sort(ct.parts.begin(), ct.parts.end());
    for (unsigned d : ct.parts) ct.n += d;
    if (ct.n != static_cast<unsigned>(f.degree()))
        fail(Errc::Inconsistent, "cycle type parts do not sum to the degree");
    return ct;
}

} // namespace imtori
