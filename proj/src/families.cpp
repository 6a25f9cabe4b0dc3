#include "imtori/families.hpp"

#include <sstream>

#include <json.hpp>

#include "imtori/galois.hpp"
#include "imtori/modp.hpp"
#include "imtori/newton.hpp"

namespace imtori {

namespace {

Int rat_floor(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

Int floordiv(const Int& a, const Int& b) { return rat_floor(Rat(a, b)); }

// Enclose the positive real zero of t^{2g-1} - b/(2g) by bisection.
DyadicInterval beta_interval(unsigned g, const Int& b, unsigned bits) {
    unsigned n = 2 * g;
    Rat target(b, n);
    Rat lo(0), hi = target < 1 ? Rat(1) : target;
    auto above = [&](const Rat& t) {
        Rat v = rat_pow(t, n - 1);
        return v >= target;
    };
    Rat width = hi - lo;
    Rat eps = Rat(1, Int(1) << bits);
    while (width > eps) {
        Rat mid = (lo + hi) / 2;
        if (above(mid))
            hi = mid;
        else
            lo = mid;
        width = hi - lo;
    }
    return DyadicInterval(lo, hi);
}

} // namespace

RationalPoly truncated_exponent(unsigned n) {
    if (n < 2 || n % 2 != 0) fail(Errc::BadDegree, "truncated exponent needs even n >= 2");
    Int fact(1);
    for (unsigned j = 2; j <= n; ++j) fact *= j;
    std::vector<Int> coeffs(n + 1);
    Int c = fact; // n!/j! for j = 0
    coeffs[0] = fact;
    Int run(1);
    for (unsigned j = 1; j <= n; ++j) {
        run *= j;
        coeffs[j] = fact / run;
    }
    (void)c;
    return RationalPoly(std::move(coeffs), fact);
}

SelmerPoly selmer(unsigned n) {
    if (n % 2 != 0 || n < 4) fail(Errc::BadDegree, "selmer trinomial needs even n >= 4");
    std::vector<Int> coeffs(n + 1, Int(0));
    coeffs[0] = 1;
    coeffs[1] = 1;
    coeffs[n] = 1;
    SelmerPoly out{RationalPoly(std::move(coeffs), 1), (n / 2) % 3 == 1};
    return out;
}

bool is_primitive_root(const Int& b, const Int& p) {
    Int r = b % p;
    if (r < 0) r += p;
    if (r == 0) return false;
    Int order = p - 1;
    for (const Int& q : prime_factors(order)) {
        if (powm(r, order / q, p) == 1) return false;
    }
    return true;
}

Int primitive_root(const Int& p) {
    if (!is_prime(p)) fail(Errc::NotPrime, "primitive root needs a prime modulus");
    for (Int b = 1; b < p; ++b)
        if (is_primitive_root(b, p)) return b;
    fail(Errc::Inconsistent, "no primitive root found");
}

RationalPoly mori_poly_raw(unsigned g, const Int& l, const Int& p, const Int& b, const Int& c) {
    unsigned n = 2 * g;
    Int ll = pow(l, static_cast<unsigned>(l.convert_to<unsigned long>()));
    std::vector<Rat> coeffs(n + 1, Rat(0));
    coeffs[0] = Rat(-p * c, ll);
    coeffs[1] = Rat(-b);
    coeffs[n] = 1;
    return RationalPoly::from_rationals(coeffs);
}

RealRootExclusion real_root_exclusion(unsigned g, const Int& l, const Int& p, const Int& b,
                                      const Int& c) {
    if (b <= 0) fail(Errc::UnsupportedShape, "minimum analysis assumes b > 0");
    RationalPoly f = mori_poly_raw(g, l, p, b, c);
    RealRootExclusion out;
    out.sturmCount = sturm_count(f);
    bool decided = false;
    for (unsigned bits : {64u, 128u, 256u, 512u, 1024u}) {
        DyadicInterval beta = beta_interval(g, b, bits);
        DyadicInterval val = f.evaluate(beta);
        if (val.sign() != 0) {
            out.closedFormMin = val;
            decided = true;
            break;
        }
    }
    if (!decided) fail(Errc::Precision, "sign of the minimum undecidable at max precision");
    bool positive = out.closedFormMin.sign() > 0;
    if (positive != (out.sturmCount == 0))
        fail(Errc::Inconsistent, "interval sign disagrees with the Sturm count");
    out.verdict = out.sturmCount == 0 ? RealRootVerdict::NoRealRoots : RealRootVerdict::HasRealRoots;
    return out;
}

AdmissibleQuadruple is_admissible(unsigned g, const Int& l, const Int& p, const Int& b,
                                  const Int& c) {
    if (g < 2) fail(Errc::BadCount, "family parameter g must be >= 2");
    if (!is_prime(l) || !is_prime(p)) fail(Errc::NotPrime, "l and p must be prime");
    AdmissibleQuadruple q;
    q.g = g;
    q.l = l;
    q.p = p;
    q.b = b;
    q.c = c;
    Int m = 2 * Int(g) - 1;
    q.lDividesTwoGMinusOne = m % l == 0;
    q.pCoprime = m % p != 0;
    q.bPrimitiveRoot = is_primitive_root(b, p);
    q.lNotDividesB = b % l != 0;
    q.lNotDividesC = c % l != 0;
    q.radicalDividesPMinusOne = true;
    for (const Int& r : prime_factors(m))
        if ((p - 1) % r != 0) q.radicalDividesPMinusOne = false;
    if (b > 0) {
        q.noRealRoots = real_root_exclusion(g, l, p, b, c).verdict == RealRootVerdict::NoRealRoots;
    } else {
        q.noRealRoots = sturm_count(mori_poly_raw(g, l, p, b, c)) == 0;
    }
    return q;
}

RationalPoly mori_poly(const AdmissibleQuadruple& q, bool force) {
    if (!force && !q.valid()) fail(Errc::InvalidQuadruple, "quadruple fails admissibility");
    return mori_poly_raw(q.g, q.l, q.p, q.b, q.c);
}

Rat trinomial_disc_closed(unsigned g, const Int& l, const Int& p, const Int& b, const Int& c) {
    unsigned n = 2 * g;
    Int ll = pow(l, static_cast<unsigned>(l.convert_to<unsigned long>()));
    Rat A(-b);
    Rat B = Rat(-p * c, ll);
    Rat closed = rat_pow(Rat(n), n) * rat_pow(B, n - 1) +
                 (n % 2 == 0 ? Rat(-1) : Rat(1)) * rat_pow(Rat(n - 1), n - 1) * rat_pow(A, n);
    if ((Int(n) * (n - 1) / 2) % 2 == 1) closed = -closed;
    Rat viaResultant = discriminant(mori_poly_raw(g, l, p, b, c));
    if (abs(closed) != abs(viaResultant))
        fail(Errc::FormulaMismatch, "closed-form and resultant discriminants differ");
    return viaResultant;
}

RamificationWitness ramification_witness(const RationalPoly& f, const Int& ell, const Int& l) {
    if (ell == l) fail(Errc::ExcludedPrime, "valuation parity argument is invalid at l");
    RamificationWitness w;
    w.ell = ell;
    w.discValuation = valuation(discriminant(f), ell);
    if (w.discValuation == 0)
        w.conclusion = RamificationConclusion::Unramified;
    else if (w.discValuation % 2 != 0)
        w.conclusion = RamificationConclusion::Ramified;
    else
        w.conclusion = RamificationConclusion::Undecided;
    return w;
}

namespace {

// Upper end of the admissible-c range: c must stay below l^l/p * (beta^{2g} - b*beta).
DyadicInterval c_bound_interval(unsigned g, const Int& l, const Int& p, const Int& b) {
    unsigned n = 2 * g;
    DyadicInterval beta = beta_interval(g, b, 160);
    std::vector<Rat> mc(n + 1, Rat(0));
    mc[1] = Rat(-b);
    mc[n] = 1;
    DyadicInterval m0 = RationalPoly::from_rationals(mc).evaluate(beta);
    Int ll = pow(l, static_cast<unsigned>(l.convert_to<unsigned long>()));
    return m0 * DyadicInterval::point(Rat(ll, p));
}

void certify_chain(const AdmissibleQuadruple& q, const RationalPoly& f) {
    if (!eisenstein_dumas(f, q.l).irreducible())
        fail(Errc::Inconsistent, "Eisenstein-Dumas certificate failed at l");
    CycleType ct = frobenius_cycle_type(f, q.p.convert_to<std::uint64_t>());
    CycleType expect;
    expect.parts = {1, 2 * q.g - 1};
    expect.n = 2 * q.g;
    if (!(ct == expect)) fail(Errc::Inconsistent, "cycle type at p is not [1, 2g-1]");
    if (sturm_count(f) != 0) fail(Errc::Inconsistent, "certified member has real roots");
}

} // namespace

AdmissibleQuadruple search_quadruple(unsigned g, const SearchBudgets& budgets) {
    if (g < 2) fail(Errc::BadCount, "family parameter g must be >= 2");
    Int m = 2 * Int(g) - 1;
    Int l = prime_factors(m).front();
    std::vector<Int> rad = prime_factors(m);
    Int p(0);
    for (std::uint64_t cand = 2; cand <= budgets.primeBudget; ++cand) {
        if (!is_prime_u64(cand)) continue;
        Int P(cand);
        if (m % P == 0) continue;
        bool ok = true;
        for (const Int& r : rad)
            if ((P - 1) % r != 0) ok = false;
        if (ok) {
            p = P;
            break;
        }
    }
    if (p == 0) fail(Errc::SearchBudget, "no admissible p within the prime budget");
    Int b(0);
    for (Int cand = 1; cand < 100 * p; ++cand) {
        if (cand % l == 0) continue;
        if (is_primitive_root(cand, p)) {
            b = cand;
            break;
        }
    }
    if (b == 0) fail(Errc::SearchBudget, "no primitive root coprime to l found");
    DyadicInterval bound = c_bound_interval(g, l, p, b);
    Int c = rat_floor(bound.hi);
    for (; abs(c) <= budgets.cMax; --c) {
        if (c % l == 0) continue;
        AdmissibleQuadruple q = is_admissible(g, l, p, b, c);
        if (q.valid()) return q;
    }
    fail(Errc::SearchBudget, "no admissible c within the search budget");
}

FamilyReport build_family(unsigned g, unsigned count, const SearchBudgets& budgets) {
    if (count < 1) fail(Errc::BadCount, "family size must be >= 1");
    FamilyReport report;
    report.g = g;

    AdmissibleQuadruple first = search_quadruple(g, budgets);
    RationalPoly f1 = mori_poly(first);
    certify_chain(first, f1);
    report.members.push_back({first, f1, discriminant(f1), std::nullopt});

    Int l = first.l, p = first.p;
    unsigned n = 2 * g;
    while (report.members.size() < count) {
        // smallest prime unramified in all previous members, subject to Lemma-style
        // exclusions: ell must not divide 2g, l or p
        Int ell(0);
        for (std::uint64_t cand = 2; cand <= budgets.primeBudget; ++cand) {
            if (!is_prime_u64(cand)) continue;
            Int L(cand);
            if (L == l || L == p || Int(n) % L == 0) continue;
            bool unram = true;
            for (const auto& mbr : report.members)
                if (numerator(mbr.disc) % L == 0) unram = false;
            if (unram) {
                ell = L;
                break;
            }
        }
        if (ell == 0) fail(Errc::SearchBudget, "no distinguishing prime within budget");

        Int b(0);
        for (Int mult = 1; mult <= 100000; ++mult) {
            Int cand = mult * ell;
            if (cand % l == 0 || cand % p == 0) continue;
            if (is_primitive_root(cand, p)) {
                b = cand;
                break;
            }
        }
        if (b == 0) fail(Errc::SearchBudget, "no primitive-root multiple of ell found");

        DyadicInterval bound = c_bound_interval(g, l, p, b);
        Int ell2 = ell * ell;
        // largest c <= bound with c congruent to ell mod ell^2
        Int c = ell + ell2 * floordiv(rat_floor(bound.hi) - ell, ell2);
        for (Int j = 0; j < l; ++j) {
            if ((c - j * ell2) % l != 0) {
                c -= j * ell2;
                break;
            }
        }
        Int step = l * p * ell2; // preserves residues mod l, p and ell^2
        bool found = false;
        for (; abs(c) <= budgets.cMax; c -= step) {
            AdmissibleQuadruple q = is_admissible(g, l, p, b, c);
            if (!q.valid()) continue;
            RationalPoly f = mori_poly(q);
            Rat disc = discriminant(f);
            if (valuation(disc, ell) != static_cast<long>(n - 1)) continue;
            certify_chain(q, f);
            RamificationWitness w = ramification_witness(f, ell, l);
            if (w.conclusion != RamificationConclusion::Ramified)
                fail(Errc::Inconsistent, "expected an odd-valuation ramification witness");
            report.members.push_back({q, f, disc, w});
            found = true;
            break;
        }
        if (!found) fail(Errc::SearchBudget, "no admissible c for the next member");
    }

    size_t k = report.members.size();
    report.pairwiseDistinguishers.assign(k, std::vector<Int>(k, Int(0)));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            const Int& w = report.members[j].witness->ell;
            if (valuation(report.members[j].disc, w) % 2 == 0 ||
                valuation(report.members[i].disc, w) != 0)
                fail(Errc::Inconsistent, "pairwise distinguisher invariant violated");
            report.pairwiseDistinguishers[i][j] = w;
            report.pairwiseDistinguishers[j][i] = w;
        }
    }
    return report;
}

std::string AdmissibleQuadruple::to_json() const {
    nlohmann::json j;
    j["g"] = g;
    j["l"] = l.str();
    j["p"] = p.str();
    j["b"] = b.str();
    j["c"] = c.str();
    j["flags"] = {{"lDividesTwoGMinusOne", lDividesTwoGMinusOne},
                  {"pCoprime", pCoprime},
                  {"bPrimitiveRoot", bPrimitiveRoot},
                  {"lNotDividesB", lNotDividesB},
                  {"lNotDividesC", lNotDividesC},
                  {"radicalDividesPMinusOne", radicalDividesPMinusOne},
                  {"noRealRoots", noRealRoots}};
    j["valid"] = valid();
    return j.dump();
}

std::string RamificationWitness::to_json() const {
    nlohmann::json j;
    j["ell"] = ell.str();
    j["discValuation"] = discValuation;
    switch (conclusion) {
        case RamificationConclusion::Ramified: j["conclusion"] = "RAMIFIED"; break;
        case RamificationConclusion::Unramified: j["conclusion"] = "UNRAMIFIED"; break;
        case RamificationConclusion::Undecided: j["conclusion"] = "UNDECIDED"; break;
    }
    return j.dump();
}

std::string FamilyReport::to_json() const {
    nlohmann::json j;
    j["g"] = g;
    j["members"] = nlohmann::json::array();
    for (const auto& m : members) {
        nlohmann::json jm;
        jm["quadruple"] = nlohmann::json::parse(m.quad.to_json());
        jm["polynomial"] = nlohmann::json::parse(m.poly.to_json());
        jm["discriminant"] = {{"num", numerator(m.disc).str()},
                              {"den", denominator(m.disc).str()}};
        jm["witness"] =
            m.witness ? nlohmann::json::parse(m.witness->to_json()) : nlohmann::json();
        j["members"].push_back(jm);
    }
    j["pairwiseDistinguishers"] = nlohmann::json::array();
    for (const auto& row : pairwiseDistinguishers) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& x : row) jr.push_back(x.str());
        j["pairwiseDistinguishers"].push_back(jr);
    }
    return j.dump();
}

} // namespace imtori
