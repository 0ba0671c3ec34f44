#pragma once

// Formal multiplicative constants mu = sign * prod p^(e_p) with rational
// exponents over primes. They name the exponential units E_mu with
// rho(E_mu) = mu * E_mu; only mu itself is ever needed algebraically, the
// formal logarithm lambda = log(mu)/h exists purely for display. Rational
// exponents make n-th roots exact, so no algebraic-number arithmetic is
// required anywhere.

#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "difftrans/error.hpp"
#include "difftrans/factor.hpp"
#include "difftrans/rational.hpp"

namespace difftrans {

class ExpConst {
public:
    ExpConst() = default;  // the constant 1

    static ExpConst one() { return ExpConst(); }

    static ExpConst from_rational(const Rat& value) {
        if (value == 0) throw DomainError("exponential constant must be nonzero");
        ExpConst r;
        r.negative_ = value < 0;
        for (const auto& [p, e] : factor_integer(abs_int(num(value)))) r.exp_[p] += static_cast<long>(e);
        for (const auto& [p, e] : factor_integer(den(value))) r.exp_[p] -= static_cast<long>(e);
        r.prune();
        return r;
    }

    bool is_one() const { return !negative_ && exp_.empty(); }

    int sign() const { return negative_ ? -1 : 1; }

    // true iff the value lies in Q, i.e. all exponents are integers
    bool is_rational() const {
        for (const auto& [p, e] : exp_)
            if (!is_integer(e)) return false;
        return true;
    }

    Rat to_rational() const {
        if (!is_rational()) throw DomainError("constant has fractional prime exponents");
        Rat v = 1;
        for (const auto& [p, e] : exp_) {
            long k = static_cast<long>(num(e));
            v *= pow_rat(Rat(p), k);
        }
        return negative_ ? -v : v;
    }

    const std::map<Int, Rat>& exponents() const { return exp_; }

    friend ExpConst operator*(const ExpConst& a, const ExpConst& b) {
        ExpConst r = a;
        r.negative_ = a.negative_ != b.negative_;
        for (const auto& [p, e] : b.exp_) r.exp_[p] += e;
        r.prune();
        return r;
    }

    ExpConst inverse() const {
        ExpConst r = *this;
        for (auto& [p, e] : r.exp_) e = -e;
        return r;
    }

    friend ExpConst operator/(const ExpConst& a, const ExpConst& b) { return a * b.inverse(); }

    ExpConst pow_int(long k) const {
        ExpConst r;
        r.negative_ = negative_ && (k % 2 != 0);
        if (k == 0) return r;
        for (const auto& [p, e] : exp_) r.exp_[p] = e * Rat(k);
        r.prune();
        return r;
    }

    // mu^(a/b); the real b-th root of a negative constant exists only for odd b
    ExpConst pow(const Rat& e) const {
        ExpConst r;
        if (negative_) {
            if (den(e) % 2 == 0) throw DomainError("even root of a negative constant is not real");
            r.negative_ = (num(e) % 2) != 0;
        }
        if (e == 0) return r;
        for (const auto& [p, ex] : exp_) r.exp_[p] = ex * e;
        r.prune();
        return r;
    }

    // exact n-th root mu^(1/n), n >= 1
    ExpConst root(long n) const {
        if (n < 1) throw DomainError("root order must be positive");
        return pow(Rat(1, n));
    }

    double to_double() const {
        double lg = 0;
        for (const auto& [p, e] : exp_) lg += difftrans::to_double(e) * std::log(difftrans::to_double(Rat(p)));
        double v = std::exp(lg);
        return negative_ ? -v : v;
    }

    friend bool operator==(const ExpConst& a, const ExpConst& b) {
        return a.negative_ == b.negative_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const ExpConst& a, const ExpConst& b) { return !(a == b); }

    friend bool operator<(const ExpConst& a, const ExpConst& b) {
        if (a.negative_ != b.negative_) return !a.negative_;
        return a.exp_ < b.exp_;
    }

    // Canonical text: plain rational when possible, otherwise factored powers
    // sorted by prime ("2^(1/2)*3").
    std::string str() const {
        if (is_rational()) return rat_str(to_rational());
        std::string out = negative_ ? "-" : "";
        bool first = true;
        for (const auto& [p, e] : exp_) {
            if (!first) out += "*";
            first = false;
            out += p.str();
            if (e != 1) {
                if (is_integer(e)) {
                    out += "^" + rat_str(e);
                } else {
                    out += "^(" + rat_str(e) + ")";
                }
            }
        }
        return out;
    }

private:
    void prune() {
        for (auto it = exp_.begin(); it != exp_.end();) {
            if (it->second == 0)
                it = exp_.erase(it);
            else
                ++it;
        }
    }

    bool negative_ = false;
    std::map<Int, Rat> exp_;  // prime -> reduced nonzero exponent
};

inline double to_double(const ExpConst& c) { return c.to_double(); }

}  // namespace difftrans
