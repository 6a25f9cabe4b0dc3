#include "imtori/torus.hpp"

#include <algorithm>

#include <json.hpp>

namespace imtori {

EmbeddingSignature EmbeddingSignature::from_string(const std::string& s) {
    EmbeddingSignature sig;
    for (char ch : s) {
        if (ch == '0')
            sig.bits.push_back(false);
        else if (ch == '1')
            sig.bits.push_back(true);
        else
            fail(Errc::Schema, "signature must be a bitstring");
    }
    return sig;
}

std::string EmbeddingSignature::to_string() const {
    std::string s;
    for (bool b : bits) s.push_back(b ? '1' : '0');
    return s;
}

namespace {

struct PrecisionScope {
    unsigned saved;
    explicit PrecisionScope(unsigned bits) : saved(precision_bits()) {
        set_precision_bits(bits);
    }
    ~PrecisionScope() { set_precision_bits(saved); }
};

} // namespace

std::vector<CertifiedRoot> complex_roots(const RationalPoly& f, unsigned precisionBits) {
    if (f.degree() < 1) fail(Errc::Degenerate, "root finding needs positive degree");
    if (f.gcd(f.derivative()).degree() > 0)
        fail(Errc::NotSquarefree, "root finding requires a squarefree polynomial");
    unsigned n = static_cast<unsigned>(f.degree());

    PrecisionScope scope(precisionBits + 64);
    RationalPoly monic = f.scaled(1 / f.leading());
    RationalPoly deriv = monic.derivative();

    std::vector<Complex> z(n);
    {
        BigFloat r0(1);
        for (unsigned k = 0; k < n; ++k) {
            BigFloat a = abs(to_bigfloat(monic.coeff(k)));
            if (1 + a > r0) r0 = 1 + a;
        }
        const BigFloat pi = 4 * atan(BigFloat(1));
        for (unsigned k = 0; k < n; ++k) {
            BigFloat theta = 2 * pi * k / n + BigFloat("0.39");
            BigFloat s = r0 * (BigFloat("0.55") + BigFloat("0.4") * (k + 1) / n);
            z[k] = Complex(s * cos(theta), s * sin(theta));
        }
    }

    BigFloat stop = pow2(-static_cast<long>(precisionBits) - 40);
    for (unsigned iter = 0; iter < 1000; ++iter) {
        BigFloat maxcorr(0);
        for (unsigned k = 0; k < n; ++k) {
            Complex fz = monic.evaluate(z[k]);
            Complex fpz = deriv.evaluate(z[k]);
            if (fpz.norm() == 0) {
                z[k].re += pow2(-3);
                maxcorr = 1;
                continue;
            }
            Complex w = fz / fpz;
            Complex sum;
            for (unsigned j = 0; j < n; ++j) {
                if (j == k) continue;
                sum += Complex(BigFloat(1), BigFloat(0)) / (z[k] - z[j]);
            }
            Complex denom = Complex(BigFloat(1), BigFloat(0)) - w * sum;
            Complex corr = denom.norm() == 0 ? w : w / denom;
            z[k] -= corr;
            BigFloat rel = corr.abs() / (1 + z[k].abs());
            if (rel > maxcorr) maxcorr = rel;
        }
        if (maxcorr < stop) break;
    }

    std::vector<CertifiedRoot> out(n);
    BigFloat heightBound = to_bigfloat(f.height());
    BigFloat residualBound = pow2(-static_cast<long>(precisionBits)) * heightBound;
    for (unsigned k = 0; k < n; ++k) {
        Complex fz = f.evaluate(z[k]);
        Complex fpz = f.derivative().evaluate(z[k]);
        if (fz.abs() >= residualBound)
            fail(Errc::Precision, "root residual above the certified bound");
        if (fpz.norm() == 0) fail(Errc::Precision, "vanishing derivative at a computed root");
        out[k] = {z[k], BigFloat(n) * fz.abs() / fpz.abs()};
    }
    std::sort(out.begin(), out.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
        if (a.value.re != b.value.re) return a.value.re < b.value.re;
        return a.value.im < b.value.im;
    });
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            if ((out[i].value - out[j].value).abs() <= out[i].errorRadius + out[j].errorRadius)
                fail(Errc::Precision, "root inclusion disks overlap");
    return out;
}

std::vector<std::pair<CertifiedRoot, CertifiedRoot>> pair_conjugates(
    const std::vector<CertifiedRoot>& roots) {
    std::vector<CertifiedRoot> upper, lower;
    for (const auto& r : roots) {
        if (abs(r.value.im) <= r.errorRadius)
            fail(Errc::RealRoot, "a root disk touches the real axis");
        (r.value.im > 0 ? upper : lower).push_back(r);
    }
    if (upper.size() != lower.size()) fail(Errc::Conjugacy, "unbalanced conjugate sets");
    std::vector<bool> used(lower.size(), false);
    std::vector<std::pair<CertifiedRoot, CertifiedRoot>> pairs;
    for (const auto& u : upper) {
        Complex target = u.value.conj();
        size_t best = lower.size();
        BigFloat bestDist(0);
        for (size_t i = 0; i < lower.size(); ++i) {
            if (used[i]) continue;
            BigFloat d = (lower[i].value - target).abs();
            if (best == lower.size() || d < bestDist) {
                best = i;
                bestDist = d;
            }
        }
        if (best == lower.size() || bestDist > u.errorRadius + lower[best].errorRadius)
            fail(Errc::Conjugacy, "no conjugate partner within disk radii");
        used[best] = true;
        pairs.emplace_back(u, lower[best]);
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (a.first.value.re != b.first.value.re) return a.first.value.re < b.first.value.re;
        return a.first.value.im < b.first.value.im;
    });
    return pairs;
}

PeriodMatrix period_matrix(const RationalPoly& f, const EmbeddingSignature& signature,
                           unsigned precisionBits) {
    if (f.degree() < 2 || f.degree() % 2 != 0)
        fail(Errc::BadDegree, "period matrix needs even degree >= 2");
    unsigned g = static_cast<unsigned>(f.degree()) / 2;
    if (signature.bits.size() != g)
        fail(Errc::Schema, "signature length must equal g");
    auto pairs = pair_conjugates(complex_roots(f, precisionBits));

    PrecisionScope scope(precisionBits + 64);
    PeriodMatrix pm;
    pm.g = g;
    pm.precisionBits = precisionBits;
    pm.signature = signature;
    pm.entries.assign(g, std::vector<Complex>(2 * g));
    pm.errors.assign(g, std::vector<BigFloat>(2 * g));
    BigFloat errCap = pow2(-static_cast<long>(precisionBits) / 2);
    for (unsigned j = 0; j < g; ++j) {
        const CertifiedRoot& rep = signature.bits[j] ? pairs[j].second : pairs[j].first;
        Complex power(BigFloat(1), BigFloat(0));
        BigFloat mag = rep.value.abs();
        for (unsigned k = 0; k < 2 * g; ++k) {
            pm.entries[j][k] = power;
            BigFloat propagated =
                k == 0 ? BigFloat(0) : BigFloat(k) * pow(mag, static_cast<int>(k) - 1) *
                                           rep.errorRadius;
            pm.errors[j][k] = propagated + pow2(-static_cast<long>(precisionBits) - 32) *
                                               (1 + pow(mag, static_cast<int>(k)));
            if (pm.errors[j][k] >= errCap)
                fail(Errc::Precision, "period entry error radius above the contract");
            power *= rep.value;
        }
    }
    return pm;
}

RealMat real_mat_mul(const RealMat& a, const RealMat& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    RealMat r(n, std::vector<BigFloat>(m, BigFloat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t)
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    return r;
}

RealMat real_mat_solve(const RealMat& a, const RealMat& rhs) {
    size_t n = a.size();
    RealMat m = a;
    RealMat x = rhs;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0) fail(Errc::DegenerateLattice, "singular stacked period matrix");
        std::swap(m[piv], m[col]);
        std::swap(x[piv], x[col]);
        BigFloat inv = 1 / m[col][col];
        for (size_t j = col; j < n; ++j) m[col][j] *= inv;
        for (size_t j = 0; j < x[col].size(); ++j) x[col][j] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            BigFloat factor = m[r][col];
            for (size_t j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
            for (size_t j = 0; j < x[r].size(); ++j) x[r][j] -= factor * x[col][j];
        }
    }
    return x;
}

BigFloat real_mat_max_norm(const RealMat& a) {
    BigFloat m(0);
    for (const auto& row : a)
        for (const auto& v : row)
            if (abs(v) > m) m = abs(v);
    return m;
}

RealMat rat_to_real(const RatMat& a) {
    RealMat r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (const auto& q : a[i]) r[i].push_back(to_bigfloat(q));
    return r;
}

ComplexStructure complex_structure(const PeriodMatrix& pm) {
    PrecisionScope scope(pm.precisionBits + 64);
    unsigned g = pm.g, n = 2 * g;
    RealMat P(n, std::vector<BigFloat>(n));
    for (unsigned j = 0; j < g; ++j)
        for (unsigned k = 0; k < n; ++k) {
            P[j][k] = pm.entries[j][k].re;
            P[g + j][k] = pm.entries[j][k].im;
        }
    RealMat JstdP(n, std::vector<BigFloat>(n));
    for (unsigned j = 0; j < g; ++j)
        for (unsigned k = 0; k < n; ++k) {
            JstdP[j][k] = -P[g + j][k]; // (x, y) -> (-y, x)
            JstdP[g + j][k] = P[j][k];
        }
    ComplexStructure cs;
    cs.J = real_mat_solve(P, JstdP);

    RealMat J2 = real_mat_mul(cs.J, cs.J);
    for (unsigned i = 0; i < n; ++i) J2[i][i] += 1;
    cs.residual = real_mat_max_norm(J2);

    RealMat id(n, std::vector<BigFloat>(n, BigFloat(0)));
    for (unsigned i = 0; i < n; ++i) id[i][i] = 1;
    RealMat Pinv = real_mat_solve(P, id);
    cs.conditionEstimate = real_mat_max_norm(P) * real_mat_max_norm(Pinv);
    return cs;
}

RatMat companion_matrix(const RationalPoly& f) {
    if (!f.is_monic()) fail(Errc::NotMonic, "companion matrix requires a monic polynomial");
    unsigned n = static_cast<unsigned>(f.degree());
    RatMat c(n, std::vector<Rat>(n, Rat(0)));
    for (unsigned k = 0; k + 1 < n; ++k) c[k + 1][k] = 1;
    for (unsigned i = 0; i < n; ++i) c[i][n - 1] = -f.coeff(i);
    return c;
}

std::string period_matrix_to_json(const PeriodMatrix& pm) {
    nlohmann::json j;
    j["g"] = pm.g;
    j["precisionBits"] = pm.precisionBits;
    j["basisConvention"] = "POWER_BASIS";
    j["signature"] = pm.signature.to_string();
    unsigned digits = static_cast<unsigned>(pm.precisionBits * 0.30103) + 2;
    j["entries"] = nlohmann::json::array();
    for (unsigned r = 0; r < pm.g; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (unsigned k = 0; k < 2 * pm.g; ++k) {
            row.push_back({{"re", pm.entries[r][k].re.str(digits)},
                           {"im", pm.entries[r][k].im.str(digits)},
                           {"err", pm.errors[r][k].str(8)}});
        }
        j["entries"].push_back(row);
    }
    return j.dump();
}

} // namespace imtori
