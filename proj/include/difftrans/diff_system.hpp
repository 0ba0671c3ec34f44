#pragma once

// First-order linear shift difference systems rho(Y) = A Y with
// A in GL_n(Q(x)): iteration to step multiples, gauge transformation, the
// companion matrix of a scalar relation, and exact determinants.

#include <utility>
#include <vector>

#include "difftrans/detail/linalg.hpp"
#include "difftrans/error.hpp"
#include "difftrans/exp_const.hpp"
#include "difftrans/ratfunc.hpp"

namespace difftrans {

using Matrix = detail::Mat<RatFunc>;

inline Matrix matrix_shift(const Matrix& m, const Rat& tau) {
    Matrix r = m;
    for (auto& row : r)
        for (auto& e : row) e = e.shift(tau);
    return r;
}

class DiffSystem {
public:
    DiffSystem(StepH step, Matrix m) : step_(step), m_(std::move(m)) {
        const std::size_t n = m_.size();
        if (n == 0) throw DomainError("empty system");
        for (const auto& row : m_)
            if (row.size() != n) throw DomainError("system matrix must be square");
        if (detail::mat_det(m_).is_zero()) throw SingularMatrixError("system matrix must be invertible");
    }

    const StepH& step() const { return step_; }
    const Matrix& matrix() const { return m_; }
    std::size_t size() const { return m_.size(); }

    friend bool operator==(const DiffSystem& a, const DiffSystem& b) {
        return a.step_.h == b.step_.h && a.m_ == b.m_;
    }

private:
    StepH step_;
    Matrix m_;
};

// Scaled system (scale * A) where the scalar may be irrational (an exact
// ExpConst such as c^(-1/n)); the matrix part stays over Q(x).
struct ScaledSystem {
    ExpConst scale;
    DiffSystem system;
};

inline RatFunc system_det(const DiffSystem& a) { return detail::mat_det(a.matrix()); }

// A_[l] governing rho^l(Y) = A_[l] Y: the product rho^(l-1)(A) ... rho(A) A,
// carried with step l*h.
inline DiffSystem iterate_system(const DiffSystem& a, long ell) {
    if (ell < 1) throw DomainError("iteration order must be >= 1");
    const Rat& h = a.step().h;
    Matrix acc = a.matrix();
    for (long i = 1; i < ell; ++i) acc = detail::mat_mul(matrix_shift(a.matrix(), h * Rat(i)), acc);
    return DiffSystem(StepH(h * Rat(ell)), std::move(acc));
}

// B = rho(T) A T^{-1}; the system seen through the change of variables Z = T Y.
inline DiffSystem gauge_transform(const DiffSystem& a, const Matrix& t) {
    if (t.size() != a.size()) throw DomainError("gauge matrix size mismatch");
    for (const auto& row : t)
        if (row.size() != a.size()) throw DomainError("gauge matrix must be square");
    if (detail::mat_det(t).is_zero()) throw SingularMatrixError("gauge matrix must be invertible");
    Matrix tinv = detail::mat_inverse(t);
    Matrix rt = matrix_shift(t, a.step().h);
    return DiffSystem(a.step(), detail::mat_mul(detail::mat_mul(rt, a.matrix()), tinv));
}

// Companion system of  a0 f + a1 rho(f) + ... + an rho^n(f) = 0  acting on
// (f, rho f, ..., rho^(n-1) f)^T. Requires a0 != 0 (invertibility) and
// an != 0 (true order n).
inline DiffSystem companion_from_scalar(const std::vector<RatFunc>& coeffs, StepH s) {
    if (coeffs.size() < 2) throw DomainError("scalar relation needs order >= 1");
    const std::size_t n = coeffs.size() - 1;
    if (coeffs.front().is_zero() || coeffs.back().is_zero())
        throw DomainError("companion matrix needs nonzero trailing and leading coefficients");
    Matrix m(n, std::vector<RatFunc>(n, RatFunc()));
    for (std::size_t i = 0; i + 1 < n; ++i) m[i][i + 1] = RatFunc(1);
    for (std::size_t j = 0; j < n; ++j) m[n - 1][j] = -(coeffs[j] / coeffs[n]);
    return DiffSystem(s, std::move(m));
}

}  // namespace difftrans
