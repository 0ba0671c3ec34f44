#pragma once

// Rational telescoping: solve  mu * g(x+h) - g(x) = b(x)  for g in Q(x) or
// prove that no rational solution exists.
//
// The equation is normalized to step 1 by x = h t. A universal denominator U
// comes from the orbit structure of den(b): a pole gamma of g must have
// poles of b both somewhere to its right (at gamma, gamma+1, ...) and
// somewhere strictly to its left, with multiplicity bounded by either
// one-sided sum, so U = gcd( prod_k den(x+k), prod_k den(x-1-k) ) over a
// window as wide as the self-dispersion of den(b). Writing g = z/U leaves a
// polynomial equation for z whose degree is capped by leading-term analysis
// (including the mu = 1 indicial candidate); undetermined coefficients plus
// exact Gaussian elimination decide it. Both failure modes are conclusive:
// a right-hand side that U cannot clear, or an inconsistent linear system.

#include <algorithm>
#include <utility>
#include <variant>
#include <vector>

#include "difftrans/detail/linalg.hpp"
#include "difftrans/dispersion.hpp"
#include "difftrans/exp_const.hpp"
#include "difftrans/polynomial.hpp"
#include "difftrans/ratfunc.hpp"

namespace difftrans {

enum class TelescopeReason {
    DenominatorBoundExhausted,
    LinearSystemInconsistent,
};

inline const char* telescope_reason_str(TelescopeReason r) {
    return r == TelescopeReason::DenominatorBoundExhausted ? "denominator-bound-exhausted"
                                                           : "linear-system-inconsistent";
}

struct TelescopeFailure {
    ExpConst multiplier;
    RatFunc rhs;
    TelescopeReason reason;
};

using TelescopeResult = std::variant<RatFunc, TelescopeFailure>;

namespace detail {

// Solves m * y(t+1) - y(t) = b(t) over Q(t) at step 1, m rational nonzero.
inline std::variant<RatFunc, TelescopeReason> telescope_step1(const Rat& m, const RatFunc& b) {
    const Poly& e = b.den();

    // universal denominator
    long window = 0;
    if (e.degree() > 0) {
        for (const Int& j : dispersion_set(e, e, Rat(1)))
            if (j > 0) window = std::max(window, j.convert_to<long>());
    }
    Poly right(Rat(1)), left(Rat(1));
    for (long k = 0; k <= window; ++k) {
        right *= shift_poly(e, Rat(k));
        left *= shift_poly(e, Rat(-1 - k));
    }
    Poly u = poly_gcd(right, left);

    // clear denominators: m * p1 * z(t+1) - p2 * z(t) = r with z = y * u
    Poly mlcm = poly_lcm(u, shift_poly(u, Rat(1)));
    Poly p1 = mlcm / shift_poly(u, Rat(1));
    Poly p2 = mlcm / u;
    RatFunc rr = b * RatFunc(mlcm);
    if (!rr.is_polynomial()) return TelescopeReason::DenominatorBoundExhausted;
    Poly r = rr.num();

    const int delta = p1.degree();
    const int degr = r.degree();
    long dmax;
    if (m != 1) {
        dmax = degr - delta;
    } else {
        dmax = degr - delta + 1;
        if (delta >= 1) {
            // indicial candidate: coefficient of x^(delta+d-1) is z_d (d - D)
            Rat indicial = p2.coeff(static_cast<std::size_t>(delta - 1)) -
                           p1.coeff(static_cast<std::size_t>(delta - 1));
            if (is_integer(indicial) && indicial >= 0)
                dmax = std::max(dmax, num(indicial).convert_to<long>());
        }
    }
    if (dmax < 0) return TelescopeReason::LinearSystemInconsistent;

    // undetermined coefficients z_0 .. z_dmax
    const std::size_t cols = static_cast<std::size_t>(dmax) + 1;
    const std::size_t rows = static_cast<std::size_t>(delta) + cols;
    Mat<Rat> sys(rows, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t k = 0; k < cols; ++k) {
        Poly col = Poly(m) * p1 * shift_poly(Poly::monomial(Rat(1), k), Rat(1)) -
                   p2 * Poly::monomial(Rat(1), k);
        for (std::size_t i = 0; i < rows; ++i) sys[i][k] = col.coeff(i);
    }
    std::vector<Rat> rhs(rows, Rat(0));
    for (std::size_t i = 0; i < rows; ++i) rhs[i] = r.coeff(i);

    auto z = solve_linear(std::move(sys), std::move(rhs));
    if (!z) return TelescopeReason::LinearSystemInconsistent;
    return RatFunc(Poly(std::move(*z)), u);
}

}  // namespace detail

inline TelescopeResult rational_telescope(const ExpConst& mu, const RatFunc& b, const StepH& s) {
    if (b.is_zero()) return RatFunc();
    if (!mu.is_rational()) {
        // an irrational constant times a rational function is never rational,
        // so only g = 0 could solve, forcing b = 0
        return TelescopeFailure{mu, b, TelescopeReason::LinearSystemInconsistent};
    }
    const Rat m = mu.to_rational();

    auto r = detail::telescope_step1(m, b.scale_argument(s.h));
    if (std::holds_alternative<TelescopeReason>(r))
        return TelescopeFailure{mu, b, std::get<TelescopeReason>(r)};
    RatFunc g = std::get<RatFunc>(r).scale_argument(Rat(1) / s.h);
    if (RatFunc(m) * g.shift(s.h) - g != b) throw Error("internal: telescoper produced a non-solution");
    return g;
}

}  // namespace difftrans
