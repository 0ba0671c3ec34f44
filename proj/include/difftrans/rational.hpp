#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>

#include "difftrans/error.hpp"

namespace difftrans {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: gcd(|num|, den) = 1, den >= 1, zero
// is 0/1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Int& n) { return n.sign(); }
inline int sign_of(const Rat& q) { return q.sign(); }

inline Int abs_int(const Int& n) { return boost::multiprecision::abs(n); }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw DomainError("zero raised to a negative power");
        return Rat(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r(pow_int(num(base), a), pow_int(den(base), a));
    if (e < 0) r = Rat(1) / r;
    return r;
}

inline std::string rat_str(const Rat& q) {
    std::string s = num(q).str();
    if (!is_integer(q)) s += "/" + den(q).str();
    return s;
}

// Parses "p", "-p", "p/q" into an exact rational; q > 0 enforced by reduction.
inline Rat parse_rat(const std::string& text) {
    std::size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool neg = false;
    if (i < n && (text[i] == '-' || text[i] == '+')) neg = (text[i++] == '-');
    skip_ws();
    auto read_digits = [&]() -> Int {
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected digits in rational literal", 1, static_cast<int>(i) + 1);
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return Int(text.substr(start, i - start));
    };
    Int p = read_digits();
    Int q = 1;
    skip_ws();
    if (i < n && text[i] == '/') {
        ++i;
        skip_ws();
        q = read_digits();
        if (q == 0) throw ParseError("zero denominator in rational literal", 1, static_cast<int>(i));
    }
    skip_ws();
    if (i != n) throw ParseError("trailing characters after rational literal", 1, static_cast<int>(i) + 1);
    Rat r(p, q);
    return neg ? -r : r;
}

inline double to_double(const Rat& q) { return static_cast<double>(q); }

}  // namespace difftrans
