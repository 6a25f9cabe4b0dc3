#include "imtori/newton.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

namespace imtori {

std::vector<std::pair<long, long>> newton_polygon(const RationalPoly& f, const Int& l) {
    if (f.is_zero()) fail(Errc::Degenerate, "Newton polygon of the zero polynomial");
    if (!is_prime(l)) fail(Errc::NotPrime, "Newton polygon base must be prime");
    if (f.coeff(0) == 0)
        fail(Errc::ZeroConstantTerm, "x divides the polynomial; strip it first");
    std::vector<std::pair<long, long>> pts;
    for (int i = 0; i <= f.degree(); ++i) {
        Rat a = f.coeff(i);
        if (a == 0) continue;
        pts.emplace_back(i, valuation(a, l));
    }
    // Monotone chain, keeping the lower hull; points already sorted by i.
    std::vector<std::pair<long, long>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // drop b if it lies on or above segment a-p
            long cross = (b.first - a.first) * (p.second - a.second) -
                         (p.first - a.first) * (b.second - a.second);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

PolygonCert eisenstein_dumas(const RationalPoly& f, const Int& l) {
    PolygonCert cert;
    cert.l = l;
    cert.vertices = newton_polygon(f, l);
    long n = f.degree();
    if (cert.vertices.size() != 2) {
        cert.verdict = PolygonVerdict::Inconclusive;
        cert.reason = "polygon has more than one segment";
        return cert;
    }
    auto [i0, v0] = cert.vertices.front();
    auto [i1, v1] = cert.vertices.back();
    if (i0 != 0 || i1 != n) {
        cert.verdict = PolygonVerdict::Inconclusive;
        cert.reason = "segment does not span the full degree range";
        return cert;
    }
    long span = std::abs(v1 - v0);
    if (std::gcd(n, span) != 1) {
        cert.verdict = PolygonVerdict::Inconclusive;
        cert.reason = "segment contains interior lattice points";
        return cert;
    }
    cert.verdict = PolygonVerdict::IrreducibleOverQl;
    std::ostringstream os;
    os << "single lattice-point-free segment (0," << v0 << ")-(" << n << "," << v1
       << ") at l=" << l << "; irreducible over Q_l, hence over Q";
    cert.reason = os.str();
    return cert;
}

std::string PolygonCert::to_json() const {
    nlohmann::json j;
    j["l"] = l.str();
    j["vertices"] = nlohmann::json::array();
    for (const auto& [i, v] : vertices) j["vertices"].push_back({i, v});
    j["verdict"] = irreducible() ? "IRREDUCIBLE_OVER_Q_l" : "INCONCLUSIVE";
    j["reason"] = reason;
    return j.dump();
}

} // namespace imtori
