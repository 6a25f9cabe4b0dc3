#include "imtori/lattice.hpp"

#include <algorithm>

#include <json.hpp>

namespace imtori {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int round_div(const Int& a, const Int& b) {
    // nearest integer to a/b, ties toward +infinity
    Int num = 2 * a + b;
    Int den = 2 * b;
    Int q = num / den;
    if ((num < 0) != (den < 0) && q * den != num) --q;
    return q;
}

} // namespace

LLLResult lll_reduce(const IntMat& basis) {
    size_t n = basis.size();
    if (n == 0) fail(Errc::Degenerate, "empty basis");
    LLLResult res;
    res.basis = basis;
    res.transform.assign(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) res.transform[i][i] = 1;
    if (n == 1) return res;

    IntMat& b = res.basis;
    IntMat& u = res.transform;

    // all-integer Gram-Schmidt data: d[i+1] = Gram determinant of b_0..b_i
    std::vector<Int> d(n + 1);
    std::vector<std::vector<Int>> lam(n, std::vector<Int>(n, Int(0)));
    d[0] = 1;
    auto init_gso = [&]() {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j <= i; ++j) {
                Int t = dot(b[i], b[j]);
                for (size_t k = 0; k < j; ++k) t = (d[k + 1] * t - lam[i][k] * lam[j][k]) / d[k];
                if (j < i)
                    lam[i][j] = t;
                else {
                    d[i + 1] = t;
                    if (t <= 0) fail(Errc::Dependent, "input rows are linearly dependent");
                }
            }
        }
    };
    init_gso();

    auto red = [&](size_t k, size_t l) {
        if (2 * abs(lam[k][l]) <= d[l + 1]) return;
        Int q = round_div(lam[k][l], d[l + 1]);
        for (size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[l][i];
        for (size_t i = 0; i < n; ++i) u[k][i] -= q * u[l][i];
        lam[k][l] -= q * d[l + 1];
        for (size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    };

    auto swap_step = [&](size_t k) {
        std::swap(b[k], b[k - 1]);
        std::swap(u[k], u[k - 1]);
        for (size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Int lamk = lam[k][k - 1];
        Int bnew = (d[k - 1] * d[k + 1] + lamk * lamk) / d[k];
        for (size_t i = k + 1; i < n; ++i) {
            Int t = lam[i][k];
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lamk * t) / d[k];
            lam[i][k - 1] = (bnew * t + lamk * lam[i][k]) / d[k + 1];
        }
        d[k] = bnew;
    };

    size_t k = 1;
    while (k < n) {
        red(k, k - 1);
        // Lovasz with delta = 99/100
        if (100 * d[k + 1] * d[k - 1] < 99 * d[k] * d[k] - 100 * lam[k][k - 1] * lam[k][k - 1]) {
            swap_step(k);
            k = k > 1 ? k - 1 : 1;
        } else {
            for (size_t l = k - 1; l-- > 0;) red(k, l);
            ++k;
        }
    }
    return res;
}

IntegerKernelResult integer_kernel_numeric(const RealMat& L, const BigFloat& entryError,
                                           const Int& H, const BigFloat& tol) {
    size_t rows = L.size();
    size_t m = L[0].size();
    if (tol <= BigFloat(m) * entryError * to_bigfloat(H))
        fail(Errc::Precision, "tolerance below the attainable resolution");

    Int K;
    {
        BigFloat ratio = ceil(to_bigfloat(H) / tol);
        K = ratio.convert_to<Int>();
    }
    IntMat lattice(m, std::vector<Int>(m + rows, Int(0)));
    BigFloat Kf = to_bigfloat(K);
    for (size_t j = 0; j < m; ++j) {
        lattice[j][j] = 1;
        for (size_t r = 0; r < rows; ++r) {
            BigFloat scaled = round(Kf * L[r][j]);
            lattice[j][m + r] = scaled.convert_to<Int>();
        }
    }
    LLLResult red = lll_reduce(lattice);

    IntegerKernelResult out;
    out.heightBound = H;
    out.tolerance = tol;
    out.method = KernelMethod::LllNumeric;
    std::vector<std::vector<Rat>> picked;
    for (const auto& w : red.basis) {
        std::vector<Int> v(w.begin(), w.begin() + m);
        Int h(0);
        for (const auto& x : v)
            if (abs(x) > h) h = abs(x);
        if (h == 0 || h > H) continue;
        BigFloat residual(0);
        for (size_t r = 0; r < rows; ++r) {
            BigFloat s(0);
            for (size_t j = 0; j < m; ++j)
                if (v[j] != 0) s += L[r][j] * to_bigfloat(v[j]);
            if (abs(s) > residual) residual = abs(s);
        }
        if (residual > tol) continue;
        std::vector<Rat> q(v.begin(), v.end());
        picked.push_back(q);
        if (rational_rank(picked) < picked.size()) {
            picked.pop_back();
            continue;
        }
        out.basis.push_back(v);
        out.residuals.push_back(residual);
    }
    out.rank = static_cast<unsigned>(out.basis.size());
    return out;
}

unsigned rational_rank(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    unsigned rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t piv = row;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[row]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat f = rows[r][col] / rows[row][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

bool same_rational_rowspace(const std::vector<std::vector<Rat>>& a,
                            const std::vector<std::vector<Rat>>& b) {
    unsigned ra = rational_rank(a), rb = rational_rank(b);
    if (ra != rb) return false;
    std::vector<std::vector<Rat>> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rational_rank(both) == ra;
}

IntegerKernelResult integer_kernel_exact(const RatMat& L) {
    size_t rows = L.size(), m = L[0].size();
    // reduced row echelon form
    RatMat r = L;
    std::vector<long> pivot_col(rows, -1);
    size_t row = 0;
    for (size_t col = 0; col < m && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && r[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(r[piv], r[row]);
        Rat inv = 1 / r[row][col];
        for (size_t c = col; c < m; ++c) r[row][c] *= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == row || r[rr][col] == 0) continue;
            Rat f = r[rr][col];
            for (size_t c = col; c < m; ++c) r[rr][c] -= f * r[row][c];
        }
        pivot_col[row] = static_cast<long>(col);
        ++row;
    }
    std::vector<bool> is_pivot(m, false);
    for (size_t i = 0; i < row; ++i) is_pivot[static_cast<size_t>(pivot_col[i])] = true;

    IntegerKernelResult out;
    out.method = KernelMethod::Exact;
    out.heightBound = 0;
    out.tolerance = 0;
    for (size_t free_col = 0; free_col < m; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(m, Rat(0));
        v[free_col] = 1;
        for (size_t i = 0; i < row; ++i)
            v[static_cast<size_t>(pivot_col[i])] = -r[i][free_col];
        Int den(1);
        for (const auto& q : v) den = boost::multiprecision::lcm(den, denominator(q));
        std::vector<Int> iv;
        Int content(0);
        for (const auto& q : v) iv.push_back(numerator(q) * (den / denominator(q)));
        for (const auto& x : iv) content = boost::multiprecision::gcd(content, x);
        if (content > 1)
            for (auto& x : iv) x /= content;
        out.basis.push_back(std::move(iv));
        out.residuals.emplace_back(0);
    }
    out.rank = static_cast<unsigned>(out.basis.size());
    return out;
}

namespace {

// columns: vectorized images of the canonical basis of the domain space
template <typename Mat, typename Scalar>
Mat map_matrix(const Mat& J, bool alternating, bool conjugation) {
    size_t n = J.size();
    std::vector<std::pair<size_t, size_t>> dom;
    if (alternating) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) dom.emplace_back(i, j);
    } else {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) dom.emplace_back(i, j);
    }
    Mat L(n * n, typename Mat::value_type(dom.size(), Scalar(0)));
    for (size_t idx = 0; idx < dom.size(); ++idx) {
        auto [bi, bj] = dom[idx];
        Mat E(n, typename Mat::value_type(n, Scalar(0)));
        E[bi][bj] = 1;
        if (alternating) E[bj][bi] = Scalar(0) - Scalar(1);
        Mat out(n, typename Mat::value_type(n, Scalar(0)));
        if (conjugation) {
            // J^t E J - E
            for (size_t a = 0; a < n; ++a)
                for (size_t c = 0; c < n; ++c) {
                    Scalar s(0);
                    for (size_t r = 0; r < n; ++r)
                        for (size_t t = 0; t < n; ++t) s += J[r][a] * E[r][t] * J[t][c];
                    out[a][c] = s - E[a][c];
                }
        } else {
            // E J - J E
            for (size_t a = 0; a < n; ++a)
                for (size_t c = 0; c < n; ++c) {
                    Scalar s(0);
                    for (size_t t = 0; t < n; ++t) s += E[a][t] * J[t][c] - J[a][t] * E[t][c];
                    out[a][c] = s;
                }
        }
        for (size_t a = 0; a < n; ++a)
            for (size_t c = 0; c < n; ++c) L[a * n + c][idx] = out[a][c];
    }
    return L;
}

// embed a domain-space coefficient vector back into matrix entries
IntMat lift_basis(const IntMat& basis, size_t n, bool alternating) {
    IntMat lifted;
    for (const auto& v : basis) {
        std::vector<Int> mat(n * n, Int(0));
        size_t idx = 0;
        if (alternating) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    mat[i * n + j] = v[idx];
                    mat[j * n + i] = -v[idx];
                    ++idx;
                }
        } else {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) mat[i * n + j] = v[idx++];
        }
        lifted.push_back(std::move(mat));
    }
    return lifted;
}

} // namespace

IntegerKernelResult ns_rank_exact(const RatMat& J) {
    RatMat L = map_matrix<RatMat, Rat>(J, true, true);
    return integer_kernel_exact(L);
}

IntegerKernelResult end_rank_exact(const RatMat& J) {
    RatMat L = map_matrix<RatMat, Rat>(J, false, false);
    return integer_kernel_exact(L);
}

IntegerKernelResult ns_rank_numeric(const RatMat& J, const Int& H, const BigFloat& tol) {
    RealMat L = map_matrix<RealMat, BigFloat>(rat_to_real(J), true, true);
    return integer_kernel_numeric(L, pow2(-static_cast<long>(precision_bits()) + 8), H, tol);
}

IntegerKernelResult end_rank_numeric(const RatMat& J, const Int& H, const BigFloat& tol) {
    RealMat L = map_matrix<RealMat, BigFloat>(rat_to_real(J), false, false);
    return integer_kernel_numeric(L, pow2(-static_cast<long>(precision_bits()) + 8), H, tol);
}

IntegerKernelResult ns_rank(const ComplexStructure& cs, const Int& H, const BigFloat& tol) {
    if (cs.residual >= tol / 10)
        fail(Errc::Precision, "complex-structure residual too large for the tolerance");
    RealMat L = map_matrix<RealMat, BigFloat>(cs.J, true, true);
    size_t n = cs.J.size();
    BigFloat entryErr = cs.residual + BigFloat(n) * real_mat_max_norm(cs.J) *
                                          pow2(-static_cast<long>(precision_bits()) + 8);
    return integer_kernel_numeric(L, entryErr, H, tol);
}

IntegerKernelResult end_rank(const ComplexStructure& cs, const Int& H, const BigFloat& tol) {
    if (cs.residual >= tol / 10)
        fail(Errc::Precision, "complex-structure residual too large for the tolerance");
    RealMat L = map_matrix<RealMat, BigFloat>(cs.J, false, false);
    size_t n = cs.J.size();
    BigFloat entryErr = cs.residual + BigFloat(n) * real_mat_max_norm(cs.J) *
                                          pow2(-static_cast<long>(precision_bits()) + 8);
    return integer_kernel_numeric(L, entryErr, H, tol);
}

BigFloat commutation_residual(const RatMat& M, const RealMat& J) {
    RealMat Mr = rat_to_real(M);
    RealMat a = real_mat_mul(Mr, J);
    RealMat b = real_mat_mul(J, Mr);
    BigFloat m(0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (abs(a[i][j] - b[i][j]) > m) m = abs(a[i][j] - b[i][j]);
    return m;
}

std::string IntegerKernelResult::to_json() const {
    nlohmann::json j;
    j["rank"] = rank;
    j["method"] = method == KernelMethod::Exact ? "EXACT" : "LLL_NUMERIC";
    j["heightBound"] = heightBound.str();
    j["tolerance"] = tolerance.str(8);
    j["basis"] = nlohmann::json::array();
    for (const auto& v : basis) {
        nlohmann::json jv = nlohmann::json::array();
        for (const auto& x : v) jv.push_back(x.str());
        j["basis"].push_back(jv);
    }
    j["residuals"] = nlohmann::json::array();
    for (const auto& r : residuals) j["residuals"].push_back(r.str(8));
    return j.dump();
}

std::string InvariantReport::to_json() const {
    nlohmann::json j;
    j["nsRank"] = nlohmann::json::parse(nsRank.to_json());
    j["endRank"] = nlohmann::json::parse(endRank.to_json());
    j["companionResidual"] = companionResidual.str(8);
    return j.dump();
}

} // namespace imtori
