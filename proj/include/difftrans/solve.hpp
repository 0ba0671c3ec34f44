#pragma once

// Order-1 decision pipeline for rho(y) = a y + b over the exponential ring:
//  (i)   certify a = c rho(g)/g; a witness excludes differentially algebraic
//        solutions outright,
//  (ii)  gauge y = E_c * g * yhat, turning the equation into
//        rho(yhat) = yhat + b' with b' = b / (c rho(g) E_c),
//  (iii) telescope every exponential component of b' independently:
//        nu rho(g_nu) - g_nu = b'_nu.
// All components solvable => DA with an explicit representative; any failure
// is a reproducible transcendence obstruction.

#include <utility>
#include <variant>

#include "difftrans/certify.hpp"
#include "difftrans/exp_poly.hpp"
#include "difftrans/telescope.hpp"

namespace difftrans {

class Verdict {
public:
    static Verdict da(ClosedForm form) { return Verdict(std::move(form)); }
    static Verdict dt(ObstructionWitness w) { return Verdict(std::move(w)); }
    static Verdict dt(TelescopeFailure f) { return Verdict(std::move(f)); }

    bool is_da() const { return std::holds_alternative<ClosedForm>(payload_); }
    bool is_dt() const { return !is_da(); }
    bool dt_by_witness() const { return std::holds_alternative<ObstructionWitness>(payload_); }

    const ClosedForm& form() const { return std::get<ClosedForm>(payload_); }
    const ObstructionWitness& witness() const { return std::get<ObstructionWitness>(payload_); }
    const TelescopeFailure& failure() const { return std::get<TelescopeFailure>(payload_); }

private:
    template <class T>
    explicit Verdict(T&& v) : payload_(std::forward<T>(v)) {}
    std::variant<ClosedForm, ObstructionWitness, TelescopeFailure> payload_;
};

inline Verdict solve_order1(const RatFunc& a, const ExpPoly& b, const StepH& s) {
    if (a.is_zero()) throw DomainError("equation rho(y) = a y + b requires a != 0");

    CertifyResult cr = coboundary_certify(a, s);
    if (std::holds_alternative<ObstructionWitness>(cr))
        return Verdict::dt(std::get<ObstructionWitness>(std::move(cr)));
    Certificate cert = std::get<Certificate>(std::move(cr));

    // our certificates always carry rational c (leading-coefficient quotient)
    const Rat c = cert.c.to_rational();
    const RatFunc& g = cert.g;
    RatFunc denom = RatFunc(c) * g.shift(s.h);  // c * rho(g)

    // b' = b / (c rho(g) E_c): divide coefficients and shift unit keys by c
    ExpPoly bprime = (b * denom.inverse()).mul_unit(cert.c.inverse());

    // homogeneous case: representative E_c * g (times an arbitrary periodic
    // constant, recorded by the modulo_periodic flag)
    if (bprime.is_zero()) return Verdict::da(ClosedForm{ExpPoly::unit(cert.c, g)});

    ExpPoly yhat;
    for (const auto& [nu, comp] : bprime.terms()) {
        TelescopeResult tr = rational_telescope(nu, comp, s);
        if (std::holds_alternative<TelescopeFailure>(tr))
            return Verdict::dt(std::get<TelescopeFailure>(std::move(tr)));
        yhat += ExpPoly::unit(nu, std::get<RatFunc>(tr));
    }

    // y = E_c * g * yhat
    ExpPoly y = (yhat * g).mul_unit(cert.c);
    return Verdict::da(ClosedForm{std::move(y)});
}

}  // namespace difftrans
