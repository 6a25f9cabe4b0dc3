#pragma once

#include <string>
#include <utility>
#include <vector>

#include "imtori/poly.hpp"

namespace imtori {

enum class PolygonVerdict { IrreducibleOverQl, Inconclusive };

// Eisenstein-Dumas certificate from the l-adic Newton polygon.
struct PolygonCert {
    Int l;
    std::vector<std::pair<long, long>> vertices; // (i, v_l(a_i)) on the lower hull
    PolygonVerdict verdict = PolygonVerdict::Inconclusive;
    std::string reason;

    bool irreducible() const { return verdict == PolygonVerdict::IrreducibleOverQl; }
    std::string to_json() const;
};

// Lower convex hull of {(i, v_l(a_i)) : a_i != 0}.
std::vector<std::pair<long, long>> newton_polygon(const RationalPoly& f, const Int& l);

PolygonCert eisenstein_dumas(const RationalPoly& f, const Int& l);

} // namespace imtori
