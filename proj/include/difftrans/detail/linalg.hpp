#pragma once

// Minimal dense linear algebra over an exact field F (Rat or RatFunc):
// Gaussian elimination for determinants, inverses, and particular solutions
// of possibly underdetermined systems. Sizes here are tiny.

#include <optional>
#include <utility>
#include <vector>

#include "difftrans/error.hpp"

namespace difftrans::detail {

template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
Mat<F> mat_identity(std::size_t n) {
    Mat<F> m(n, std::vector<F>(n, F(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
    return m;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
    std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    Mat<F> r(n, std::vector<F>(c, F(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            F acc(0);
            for (std::size_t t = 0; t < k; ++t) acc += a[i][t] * b[t][j];
            r[i][j] = std::move(acc);
        }
    return r;
}

template <class F>
F mat_det(Mat<F> m) {
    const std::size_t n = m.size();
    F det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == F(0)) ++piv;
        if (piv == n) return F(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == F(0)) continue;
            F f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

template <class F>
Mat<F> mat_inverse(Mat<F> m) {
    const std::size_t n = m.size();
    Mat<F> inv = mat_identity<F>(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == F(0)) ++piv;
        if (piv == n) throw SingularMatrixError("matrix is singular");
        if (piv != col) {
            std::swap(m[piv], m[col]);
            std::swap(inv[piv], inv[col]);
        }
        F d = m[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] /= d;
            inv[col][c] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == F(0)) continue;
            F f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

// Particular solution of A z = v with free variables set to zero;
// std::nullopt when the system is inconsistent. A may be non-square.
template <class F>
std::optional<std::vector<F>> solve_linear(Mat<F> a, std::vector<F> v) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == F(0)) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(v[piv], v[r]);
        F d = a[r][c];
        for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] /= d;
        v[r] /= d;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || a[rr][c] == F(0)) continue;
            F f = a[rr][c];
            for (std::size_t cc = c; cc < cols; ++cc) a[rr][cc] -= f * a[r][cc];
            v[rr] -= f * v[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t rr = r; rr < rows; ++rr)
        if (!(v[rr] == F(0))) return std::nullopt;
    std::vector<F> z(cols, F(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) z[pivot_col[i]] = v[i];
    return z;
}

}  // namespace difftrans::detail
