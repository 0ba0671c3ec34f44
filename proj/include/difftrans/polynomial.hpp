#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "difftrans/detail/int_poly.hpp"
#include "difftrans/error.hpp"
#include "difftrans/rational.hpp"

namespace difftrans {

// Dense univariate polynomial over Q, coefficients ascending by degree.
// The zero polynomial is the empty coefficient list (degree -1).
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    Poly(int c) : Poly(Rat(c)) {}
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

    static Poly monomial(const Rat& c, std::size_t k) {
        if (c == 0) return Poly();
        std::vector<Rat> v(k + 1, Rat(0));
        v[k] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

    const Rat& leading() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (Rat& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const Rat& s) {
        if (s == 0) return Poly();
        Poly r = a;
        for (Rat& c : r.c_) c *= s;
        return r;
    }
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // Euclidean division over Q: returns (quotient, remainder).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DomainError("division by the zero polynomial");
        Poly q, r = a;
        const int db = b.degree();
        const Rat& lb = b.leading();
        std::vector<Rat> qc;
        if (r.degree() >= db) qc.assign(static_cast<std::size_t>(r.degree() - db) + 1, Rat(0));
        while (!r.is_zero() && r.degree() >= db) {
            Rat f = r.leading() / lb;
            int shift = r.degree() - db;
            qc[static_cast<std::size_t>(shift)] = f;
            std::vector<Rat> rc = r.c_;
            rc.pop_back();
            for (int i = 0; i < db; ++i) rc[static_cast<std::size_t>(i + shift)] -= f * b.c_[static_cast<std::size_t>(i)];
            r = Poly(std::move(rc));
        }
        q = Poly(std::move(qc));
        return {q, r};
    }

    friend Poly operator/(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw DomainError("inexact polynomial division");
        return q;
    }

    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / leading());
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return Poly(std::move(v));
    }

    Poly pow(unsigned long e) const {
        Poly r(Rat(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    double eval(double x) const {
        double r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + to_double(c_[i]);
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

// p(x + tau); degree and leading coefficient are preserved.
inline Poly shift_poly(const Poly& p, const Rat& tau) {
    if (p.is_constant() || tau == 0) return p;
    // Horner on p viewed in the variable (x + tau)
    Poly xt = Poly::x() + Poly(tau);
    Poly r(p.leading());
    for (int i = p.degree() - 1; i >= 0; --i) r = r * xt + Poly(p.coeff(static_cast<std::size_t>(i)));
    return r;
}

// p(k * x) for k != 0.
inline Poly scale_arg(const Poly& p, const Rat& k) {
    if (k == 0) throw DomainError("argument scaling by zero");
    std::vector<Rat> v(p.coeffs());
    Rat f = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] *= f;
        f *= k;
    }
    return Poly(std::move(v));
}

// Splits p into (content, primitive integer part); content > 0 and
// content * primitive == p, with the sign carried by the primitive part.
inline std::pair<Rat, detail::IPoly> to_integer_primitive(const Poly& p) {
    if (p.is_zero()) return {Rat(0), {}};
    Int l = 1;
    for (const Rat& c : p.coeffs()) l = lcm_int(l, den(c));
    detail::IPoly ip(p.coeffs().size());
    for (std::size_t i = 0; i < ip.size(); ++i) {
        const Rat& c = p.coeff(i);
        ip[i] = num(c) * (l / den(c));
    }
    Int g = detail::ip_content(ip);
    for (Int& c : ip) c /= g;
    return {Rat(g, l), ip};
}

inline Poly from_integer(const detail::IPoly& ip) {
    std::vector<Rat> v(ip.size());
    for (std::size_t i = 0; i < ip.size(); ++i) v[i] = Rat(ip[i]);
    return Poly(std::move(v));
}

// Monic greatest common divisor. Errors when both inputs are zero.
inline Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    auto [cp, ip] = to_integer_primitive(p);
    auto [cq, iq] = to_integer_primitive(q);
    (void)cp;
    (void)cq;
    return from_integer(detail::ip_gcd(ip, iq)).monic();
}

inline Poly poly_lcm(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    return ((p * q) / poly_gcd(p, q)).monic();
}

// Res_x(p, q), exact; zero iff p and q share a root in the algebraic closure.
inline Rat resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) throw DomainError("resultant of the zero polynomial");
    auto [cp, ip] = to_integer_primitive(p);
    auto [cq, iq] = to_integer_primitive(q);
    Rat scale = pow_rat(cp, q.degree()) * pow_rat(cq, p.degree());
    return scale * Rat(detail::ip_resultant(ip, iq));
}

// Squarefree part: p / gcd(p, p'), monic.
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    if (p.degree() == 0) return Poly(Rat(1));
    Poly g = poly_gcd(p, p.derivative());
    return (p / g).monic();
}

// Yun's algorithm: returns pairs (s_k, k) with p ~ prod s_k^k, each s_k monic
// squarefree, pairwise coprime, ordered by k ascending; trivial factors omitted.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    Poly f = p.monic();
    if (f.degree() == 0) return out;
    Poly df = f.derivative();
    Poly a = poly_gcd(f, df);
    Poly b = f / a;
    Poly c = df / a;
    Poly d = c - b.derivative();
    int k = 1;
    while (b.degree() > 0) {
        Poly s = poly_gcd(b, d);
        if (s.degree() > 0) out.emplace_back(s, k);
        b = b / s;
        c = d / s;
        d = c - b.derivative();
        ++k;
    }
    return out;
}

// Canonical text form: terms ascending by degree, exact rational coefficients.
inline std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        Rat c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += rat_str(mag);
        } else {
            if (mag != 1) out += rat_str(mag) + "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace difftrans
