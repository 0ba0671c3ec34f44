#pragma once

// Independent validation of certificates and closed forms: exact symbolic
// identities plus a floating-point recurrence cross-check. Nothing here
// trusts the solver's internals; everything is re-derived from the defining
// relations.

#include <cmath>
#include <utility>
#include <vector>

#include "difftrans/certify.hpp"
#include "difftrans/exp_poly.hpp"
#include "difftrans/solve.hpp"

namespace difftrans {

// a * g == c * rho(g) as an exact identity. A certificate whose constant has
// fractional prime exponents can never match a rational a (the quotient
// a g / rho(g) is rational), so it is rejected outright.
inline bool verify_certificate(const RatFunc& a, const Certificate& cert, const StepH& s) {
    if (cert.g.is_zero()) return false;
    if (!cert.c.is_rational()) return false;
    return a * cert.g == RatFunc(cert.c.to_rational()) * cert.g.shift(s.h);
}

// rho(F) == a F + b checked per exponential unit: for each mu the coefficient
// identity  mu * F_mu(x+h) == a F_mu + b_mu  must hold in Q(x). For an
// irrational mu the two sides live in independent Q(x)-lines of Q(mu)(x), so
// the term verifies only if both F_mu and b_mu vanish (i.e. never appear).
inline bool verify_closed_form(const RatFunc& a, const ExpPoly& b, const ClosedForm& f,
                               const StepH& s) {
    std::vector<ExpConst> keys;
    for (const auto& [mu, coeff] : f.value.terms()) keys.push_back(mu);
    for (const auto& [mu, coeff] : b.terms()) keys.push_back(mu);
    for (const ExpConst& mu : keys) {
        RatFunc fmu = f.value.coeff(mu);
        RatFunc bmu = b.coeff(mu);
        if (!mu.is_rational()) return false;  // nonzero coefficient on an irrational line
        if (RatFunc(mu.to_rational()) * fmu.shift(s.h) != a * fmu + bmu) return false;
    }
    return true;
}

struct NumericReport {
    std::vector<std::pair<double, int>> sample_points;
    double max_relative_error = 0.0;
    bool passed = false;
};

namespace detail {

inline double exppoly_eval(const ExpPoly& f, double x, double h) {
    double v = 0;
    for (const auto& [mu, coeff] : f.terms()) {
        if (mu.sign() < 0) throw EvaluationError("negative multiplier is not numerically evaluable");
        // E_mu(x) = mu^(x/h)
        v += coeff.eval(x) * std::pow(mu.to_double(), x / h);
    }
    return v;
}

inline bool exppoly_has_pole(const ExpPoly& f, double x) {
    for (const auto& [mu, coeff] : f.terms())
        if (coeff.den().eval(x) == 0.0) return true;
    return false;
}

}  // namespace detail

// Iterates y_{k+1} = a(x0+kh) y_k + b(x0+kh) seeded with y_0 = F(x0) and
// compares against F along the orbit. Relative error uses max(|expected|, 1)
// to stay meaningful near zeros.
inline NumericReport numeric_crosscheck(const RatFunc& a, const ExpPoly& b, const ClosedForm& f,
                                        const StepH& s, double x0, int steps, double tol) {
    const double h = to_double(s.h);
    NumericReport report;
    report.sample_points.emplace_back(x0, steps);

    for (const auto& [mu, coeff] : f.value.terms())
        if (mu.sign() < 0) throw EvaluationError("negative multiplier in closed form");
    for (const auto& [mu, coeff] : b.terms())
        if (mu.sign() < 0) throw EvaluationError("negative multiplier in right-hand side");

    if (detail::exppoly_has_pole(f.value, x0))
        throw EvaluationError("pole on the sample orbit at step k=0");
    double y = detail::exppoly_eval(f.value, x0, h);
    double worst = 0.0;
    bool finite = true;
    for (int k = 0; k < steps; ++k) {
        double x = x0 + k * h;
        if (a.den().eval(x) == 0.0 || detail::exppoly_has_pole(b, x) ||
            detail::exppoly_has_pole(f.value, x0 + (k + 1) * h))
            throw EvaluationError("pole on the sample orbit at step k=" + std::to_string(k));
        double bx = detail::exppoly_eval(b, x, h);
        y = a.eval(x) * y + bx;
        double expected = detail::exppoly_eval(f.value, x0 + (k + 1) * h, h);
        double err = std::fabs(y - expected) / std::max(std::fabs(expected), 1.0);
        if (!std::isfinite(err) || !std::isfinite(y)) {
            finite = false;
            break;
        }
        worst = std::max(worst, err);
    }
    report.max_relative_error = worst;
    report.passed = finite && worst <= tol;
    return report;
}

}  // namespace difftrans
