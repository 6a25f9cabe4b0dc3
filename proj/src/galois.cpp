#include "imtori/galois.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace imtori {

namespace {

std::vector<Int> divisors(const Int& n, size_t cap = 1u << 16) {
    Int m = abs(n);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m) large.push_back(m / d);
            if (small.size() + large.size() > cap)
                fail(Errc::OracleScope, "too many divisors for the rational-root search");
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Rat> rational_roots(const RationalPoly& f) {
    std::vector<Rat> roots;
    if (f.degree() < 1) return roots;
    RationalPoly p = f;
    if (p.coeff(0) == 0) {
        roots.emplace_back(0);
        while (p.coeff(0) == 0 && p.degree() >= 1) {
            std::vector<Int> c(p.coeffs().begin() + 1, p.coeffs().end());
            p = RationalPoly(std::move(c), p.den());
        }
    }
    if (p.degree() < 1) return roots;
    // candidates are (divisor of constant) / (divisor of lc) of the integer vector
    std::vector<Int> c = p.coeffs();
    Int an = c.back();
    for (const Int& num : divisors(c.front())) {
        for (const Int& den : divisors(an)) {
            for (int s : {1, -1}) {
                Rat cand(s * num, den);
                if (p.evaluate(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool quartic_is_irreducible(const RationalPoly& monic) {
    if (!rational_roots(monic).empty()) return false;
    // split into two monic quadratics: depress, then z-cubic for the cross term
    Rat a = monic.coeff(3), b = monic.coeff(2), cc = monic.coeff(1), d = monic.coeff(0);
    Rat sh = a / 4;
    Rat P = b - 6 * sh * sh;
    Rat Q = cc - 2 * b * sh + 8 * sh * sh * sh;
    Rat R = d - cc * sh + b * sh * sh - 3 * sh * sh * sh * sh;
    if (Q == 0 && is_square(P * P - 4 * R)) return false;
    RationalPoly zcubic = RationalPoly::from_rationals({-Q * Q, P * P - 4 * R, 2 * P, Rat(1)});
    for (const Rat& z : rational_roots(zcubic))
        if (z > 0 && is_square(z)) return false;
    return true;
}

} // namespace

std::optional<IrreducibilityWitness> irreducibility_witness(const RationalPoly& f,
                                                            std::uint64_t primeBudget) {
    if (f.degree() < 2) fail(Errc::DegreeTooSmall, "witness search needs degree >= 2");
    if (f.coeff(0) != 0) {
        for (const Int& l : prime_factors(f.den())) {
            PolygonCert cert = eisenstein_dumas(f, l);
            if (cert.irreducible())
                return IrreducibilityWitness{WitnessKind::EisensteinDumas, l, ""};
        }
    }
    Rat disc = f.degree() >= 2 ? discriminant(f) : Rat(1);
    unsigned n = static_cast<unsigned>(f.degree());
    for (std::uint64_t p = 2; p <= primeBudget; ++p) {
        if (!is_prime_u64(p)) continue;
        Int P(p);
        if (f.den() % P == 0 || f.coeffs().back() % P == 0) continue;
        if (numerator(disc) % P == 0) continue;
        CycleType ct = frobenius_cycle_type(f, p);
        if (ct.parts.size() == 1 && ct.parts[0] == n)
            return IrreducibilityWitness{WitnessKind::ModpPrime, P, ""};
    }
    return std::nullopt;
}

GaloisEvidence collect_evidence(const RationalPoly& f, std::uint64_t primeBudget,
                                const IrreducibilityWitness& witness) {
    GaloisEvidence ev;
    ev.f = f;
    ev.n = static_cast<unsigned>(f.degree());
    ev.witness = witness;
    Rat disc = discriminant(f);
    for (std::uint64_t p = 2; p <= primeBudget; ++p) {
        if (!is_prime_u64(p)) continue;
        Int P(p);
        if (f.den() % P == 0 || f.coeffs().back() % P == 0) continue;
        if (numerator(disc) % P == 0) continue;
        ev.samples.emplace_back(p, frobenius_cycle_type(f, p));
    }
    return ev;
}

GaloisCertificate certify(const GaloisEvidence& ev, const Rat& disc) {
    GaloisCertificate cert;
    if (!ev.witness) fail(Errc::NoTransitivity, "evidence lacks an irreducibility witness");
    cert.transitive = true;
    {
        std::ostringstream os;
        switch (ev.witness->kind) {
            case WitnessKind::ModpPrime: os << "irreducible mod " << ev.witness->prime; break;
            case WitnessKind::EisensteinDumas:
                os << "Eisenstein-Dumas at " << ev.witness->prime;
                break;
            case WitnessKind::Cited: os << "cited: " << ev.witness->citation; break;
        }
        cert.transitiveWitness = os.str();
    }
    unsigned n = ev.n;
    for (const auto& [p, ct] : ev.samples) {
        if (ct.parts.size() == 2 && ct.parts[0] == 1 && ct.parts[1] == n - 1) {
            cert.twoTransitive = true;
            cert.twoTransitiveWitness = "p=" + std::to_string(p);
            break;
        }
    }
    cert.primitive = cert.twoTransitive;
    if (cert.primitive) {
        for (const auto& [p, ct] : ev.samples) {
            if (ct.parts.empty()) continue;
            unsigned q = ct.parts.back();
            bool rest_fixed = std::all_of(ct.parts.begin(), ct.parts.end() - 1,
                                          [](unsigned x) { return x == 1; });
            if (rest_fixed && q + 3 <= n && is_prime(Int(q))) {
                cert.containsAlternating = true;
                cert.alternatingWitness = "p=" + std::to_string(p);
                break;
            }
        }
    }
    if (cert.containsAlternating)
        cert.groupDetermination = is_square(disc) ? GroupDetermination::An : GroupDetermination::Sn;
    cert.noProperSubfield = cert.primitive;
    cert.certLevel = ev.witness->kind == WitnessKind::Cited ? CertLevel::Cited
                                                            : CertLevel::ProvedComputationally;
    return cert;
}

std::string quartic_group_name(QuarticGroup g) {
    switch (g) {
        case QuarticGroup::S4: return "S4";
        case QuarticGroup::A4: return "A4";
        case QuarticGroup::D4: return "D4";
        case QuarticGroup::C4: return "C4";
        case QuarticGroup::V4: return "V4";
    }
    return "?";
}

QuarticGroup quartic_galois_oracle(const RationalPoly& f) {
    if (f.degree() != 4) fail(Errc::OracleScope, "oracle handles quartics only");
    RationalPoly monic = f.scaled(1 / f.leading());
    if (!quartic_is_irreducible(monic)) fail(Errc::OracleScope, "oracle needs an irreducible quartic");
    Rat a = monic.coeff(3), b = monic.coeff(2), c = monic.coeff(1), d = monic.coeff(0);
    RationalPoly resolvent = RationalPoly::from_rationals(
        {-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Rat(1)});
    std::vector<Rat> roots = rational_roots(resolvent);
    Rat D = discriminant(monic);
    if (roots.empty()) return is_square(D) ? QuarticGroup::A4 : QuarticGroup::S4;
    if (roots.size() == 3) return QuarticGroup::V4;
    // one rational resolvent root: C4 versus D4 (Kappe-Warren)
    Rat beta = roots.front();
    auto splits_over_QsqrtD = [&](const Rat& delta) {
        return delta == 0 || is_square(delta) || is_square(delta * D);
    };
    Rat d1 = a * a - 4 * (b - beta);
    Rat d2 = beta * beta - 4 * d;
    return (splits_over_QsqrtD(d1) && splits_over_QsqrtD(d2)) ? QuarticGroup::C4
                                                              : QuarticGroup::D4;
}

std::string GaloisCertificate::to_json() const {
    nlohmann::json j;
    j["transitive"] = transitive;
    j["transitiveWitness"] = transitiveWitness;
    j["twoTransitive"] = twoTransitive;
    j["twoTransitiveWitness"] = twoTransitiveWitness;
    j["primitive"] = primitive;
    j["containsAlternating"] = containsAlternating;
    j["alternatingWitness"] = alternatingWitness;
    switch (groupDetermination) {
        case GroupDetermination::Sn: j["groupDetermination"] = "S_n"; break;
        case GroupDetermination::An: j["groupDetermination"] = "A_n"; break;
        case GroupDetermination::Undetermined: j["groupDetermination"] = "UNDETERMINED"; break;
    }
    j["noProperSubfield"] = noProperSubfield;
    j["certLevel"] =
        certLevel == CertLevel::Cited ? "CITED" : "PROVED_COMPUTATIONALLY";
    return j.dump();
}

} // namespace imtori
