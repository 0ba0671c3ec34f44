#pragma once

#include <string>
#include <utility>

#include "difftrans/error.hpp"
#include "difftrans/polynomial.hpp"
#include "difftrans/rational.hpp"

namespace difftrans {

// Nonzero step of the shift operator rho: y(x) -> y(x + h).
struct StepH {
    Rat h;
    explicit StepH(const Rat& step) : h(step) {
        if (h == 0) throw StepError("step h must be nonzero");
    }
};

// Reduced rational function: gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() = default;  // zero
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(int c) : RatFunc(Rat(c)) {}
    RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {}
    RatFunc(Poly num, Poly den) { assign(std::move(num), std::move(den)); }

    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    Rat constant_value() const {
        if (!is_constant()) throw DomainError("rational function is not constant");
        return num_.coeff(0);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DomainError("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw DomainError("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    // f(x + tau)
    RatFunc shift(const Rat& tau) const {
        RatFunc r;
        r.num_ = shift_poly(num_, tau);
        r.den_ = shift_poly(den_, tau);
        r.normalize_monic();
        return r;
    }

    // rho^k with step s: f(x + k h)
    RatFunc rho(const StepH& s, long k = 1) const { return shift(s.h * Rat(k)); }

    // f(k * x), k != 0
    RatFunc scale_argument(const Rat& k) const { return RatFunc(scale_arg(num_, k), scale_arg(den_, k)); }

    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d == 0) throw EvaluationError("pole of rational function");
        return num_.eval(x) / d;
    }

    double eval(double x) const {
        double d = den_.eval(x);
        if (d == 0.0) throw EvaluationError("pole of rational function");
        return num_.eval(x) / d;
    }

    bool has_pole_at(const Rat& x) const { return den_.eval(x) == 0; }

private:
    void assign(Poly n, Poly d) {
        if (d.is_zero()) throw DomainError("division by the zero polynomial");
        if (n.is_zero()) {
            num_ = Poly();
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = poly_gcd(n, d);
        if (g.degree() > 0) {
            n = n / g;
            d = d / g;
        }
        num_ = std::move(n);
        den_ = std::move(d);
        normalize_monic();
    }

    void normalize_monic() {
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Rat l = den_.leading();
        if (l != 1) {
            Rat inv = Rat(1) / l;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly num_;
    Poly den_ = Poly(Rat(1));
};

inline std::string ratfunc_str(const RatFunc& f) {
    if (f.is_polynomial()) return poly_str(f.num());
    return "(" + poly_str(f.num()) + ")/(" + poly_str(f.den()) + ")";
}

}  // namespace difftrans
