#pragma once

// Finite sums  f = sum_mu f_mu * E_mu  with rational-function coefficients
// and formal exponential units rho(E_mu) = mu * E_mu, E_mu * E_nu = E_{mu nu},
// E_1 = 1. This is the computable representative of the ring of x-rational
// combinations of exponentials; h-periodic constants have no finite exact
// representation, so closed forms carry them only as a "modulo periodic
// constants" marker.

#include <map>
#include <utility>

#include "difftrans/error.hpp"
#include "difftrans/exp_const.hpp"
#include "difftrans/ratfunc.hpp"

namespace difftrans {

class ExpPoly {
public:
    ExpPoly() = default;  // zero
    ExpPoly(const RatFunc& f) {
        if (!f.is_zero()) terms_[ExpConst::one()] = f;
    }
    ExpPoly(const Rat& c) : ExpPoly(RatFunc(c)) {}
    ExpPoly(int c) : ExpPoly(RatFunc(c)) {}

    static ExpPoly unit(const ExpConst& mu, const RatFunc& coeff = RatFunc(1)) {
        ExpPoly r;
        if (!coeff.is_zero()) r.terms_[mu] = coeff;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }

    const std::map<ExpConst, RatFunc>& terms() const { return terms_; }

    // coefficient of E_mu (zero if absent)
    RatFunc coeff(const ExpConst& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? RatFunc() : it->second;
    }

    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

    ExpPoly operator-() const {
        ExpPoly r = *this;
        for (auto& [mu, f] : r.terms_) f = -f;
        return r;
    }

    friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
        ExpPoly r = a;
        for (const auto& [mu, f] : b.terms_) {
            auto it = r.terms_.find(mu);
            if (it == r.terms_.end()) {
                r.terms_[mu] = f;
            } else {
                it->second += f;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
        ExpPoly r;
        for (const auto& [mu, f] : a.terms_)
            for (const auto& [nu, g] : b.terms_) {
                ExpConst key = mu * nu;
                auto it = r.terms_.find(key);
                if (it == r.terms_.end()) {
                    RatFunc prod = f * g;
                    if (!prod.is_zero()) r.terms_[key] = prod;
                } else {
                    it->second += f * g;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        return r;
    }

    friend ExpPoly operator*(const ExpPoly& a, const RatFunc& s) {
        ExpPoly r;
        if (s.is_zero()) return r;
        for (const auto& [mu, f] : a.terms_) r.terms_[mu] = f * s;
        return r;
    }
    friend ExpPoly operator*(const RatFunc& s, const ExpPoly& a) { return a * s; }

    ExpPoly& operator+=(const ExpPoly& o) { return *this = *this + o; }
    ExpPoly& operator-=(const ExpPoly& o) { return *this = *this - o; }
    ExpPoly& operator*=(const ExpPoly& o) { return *this = *this * o; }

    // multiply every unit key by mu (i.e. multiplication by E_mu)
    ExpPoly mul_unit(const ExpConst& mu) const {
        ExpPoly r;
        for (const auto& [key, f] : terms_) r.terms_[key * mu] = f;
        return r;
    }

    // rho^k applied termwise: f_mu(x) E_mu  ->  mu^k f_mu(x + k h) E_mu.
    // The scalar mu^k must be rational for the coefficient to stay in Q(x);
    // fractional prime exponents that survive the k-th power are rejected.
    ExpPoly rho(const StepH& s, long k = 1) const {
        ExpPoly r;
        Rat tau = s.h * Rat(k);
        for (const auto& [mu, f] : terms_) {
            ExpConst muk = mu.pow_int(k);
            if (!muk.is_rational())
                throw DomainError("rho would leave the rational-coefficient ring (irrational multiplier power)");
            r.terms_[mu] = f.shift(tau) * RatFunc(muk.to_rational());
        }
        return r;
    }

private:
    std::map<ExpConst, RatFunc> terms_;
};

// Closed-form solution representative; the flag records that the full
// solution set adds (homogeneous case: multiplies) arbitrary h-periodic
// constants that have no finite exact representation.
struct ClosedForm {
    ExpPoly value;
    bool modulo_periodic = true;
};

}  // namespace difftrans
