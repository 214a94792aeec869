#include "elastoscat/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "elastoscat/simd.hpp"

namespace elast {

double CMatrix::norm1() const {
    std::vector<double> col(cols_, 0.0);
    for (int i = 0; i < rows_; ++i) {
        const cd* r = row(i);
        for (int j = 0; j < cols_; ++j) col[j] += std::abs(r[j]);
    }
    return col.empty() ? 0.0 : *std::max_element(col.begin(), col.end());
}

LuFactor::LuFactor(CMatrix a) : lu_(std::move(a)), piv_(lu_.rows()) {
    const int n = lu_.rows();
    if (n != lu_.cols()) throw invalid_input("lu: matrix must be square");
    constexpr int kb = 32;

    for (int k0 = 0; k0 < n; k0 += kb) {
        const int kw = std::min(kb, n - k0);
        // panel factorization with partial pivoting, swaps applied full-width
        for (int k = k0; k < k0 + kw; ++k) {
            int p = k;
            double best = std::abs(lu_(k, k));
            for (int i = k + 1; i < n; ++i) {
                double v = std::abs(lu_(i, k));
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
            piv_[k] = p;
            if (best == 0.0) throw numerical_error("lu: matrix is singular");
            if (p != k)
                for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
            const cd inv = 1.0 / lu_(k, k);
            for (int i = k + 1; i < n; ++i) {
                lu_(i, k) *= inv;
                const cd lik = lu_(i, k);
                for (int j = k + 1; j < k0 + kw; ++j) lu_(i, j) -= lik * lu_(k, j);
            }
        }
        if (k0 + kw >= n) break;
        // U block row: solve unit-lower L11 X = A12 in place
        for (int k = k0; k < k0 + kw; ++k)
            for (int i = k + 1; i < k0 + kw; ++i) {
                const cd lik = lu_(i, k);
                if (lik != 0.0) {
                    const cd* uk = lu_.row(k) + k0 + kw;
                    cd* ui = lu_.row(i) + k0 + kw;
                    for (int j = 0; j < n - (k0 + kw); ++j) ui[j] -= lik * uk[j];
                }
            }
        // trailing update A22 -= L21 U12
        simd::zgemm_sub(lu_.row(k0 + kw) + k0, n, lu_.row(k0) + k0 + kw, n,
                        lu_.row(k0 + kw) + k0 + kw, n, n - (k0 + kw), n - (k0 + kw), kw);
    }
}

void LuFactor::solve_in_place(std::span<cd> b) const {
    const int n = size();
    if (static_cast<int>(b.size()) != n) throw invalid_input("lu solve: size mismatch");
    for (int k = 0; k < n; ++k)
        if (piv_[k] != k) std::swap(b[k], b[piv_[k]]);
    for (int i = 1; i < n; ++i) {
        cd s = b[i];
        const cd* r = lu_.row(i);
        for (int j = 0; j < i; ++j) s -= r[j] * b[j];
        b[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        cd s = b[i];
        const cd* r = lu_.row(i);
        for (int j = i + 1; j < n; ++j) s -= r[j] * b[j];
        b[i] = s / r[i];
    }
}

void LuFactor::solve_herm_in_place(std::span<cd> b) const {
    // A^H x = b with A = P^T L U: solve U^H t = b, L^H s = t, x = P^T-reversed
    const int n = size();
    if (static_cast<int>(b.size()) != n) throw invalid_input("lu solve: size mismatch");
    for (int i = 0; i < n; ++i) {
        cd s = b[i];
        for (int j = 0; j < i; ++j) s -= std::conj(lu_(j, i)) * b[j];
        b[i] = s / std::conj(lu_(i, i));
    }
    for (int i = n - 1; i >= 0; --i) {
        cd s = b[i];
        for (int j = i + 1; j < n; ++j) s -= std::conj(lu_(j, i)) * b[j];
        b[i] = s;
    }
    for (int k = n - 1; k >= 0; --k)
        if (piv_[k] != k) std::swap(b[k], b[piv_[k]]);
}

std::vector<cd> LuFactor::solve(std::span<const cd> b) const {
    std::vector<cd> x(b.begin(), b.end());
    solve_in_place(x);
    return x;
}

double LuFactor::cond1_estimate(double a_norm1) const {
    // Hager's estimator for ||A^{-1}||_1
    const int n = size();
    std::vector<cd> x(n, cd(1.0 / n, 0.0));
    double est = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
        solve_in_place(x);
        double e = 0.0;
        for (cd& v : x) e += std::abs(v);
        if (iter > 0 && e <= est) break;
        est = e;
        for (cd& v : x) v = (std::abs(v) > 0.0) ? v / std::abs(v) : cd(1.0, 0.0);
        solve_herm_in_place(x);
        int jmax = 0;
        double zmax = 0.0;
        for (int j = 0; j < n; ++j)
            if (std::abs(x[j]) > zmax) {
                zmax = std::abs(x[j]);
                jmax = j;
            }
        std::fill(x.begin(), x.end(), cd{});
        x[jmax] = 1.0;
    }
    return est * a_norm1;
}

}  // namespace elast
