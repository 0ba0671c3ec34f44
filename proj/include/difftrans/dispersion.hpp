#pragma once

// Dispersion of two polynomials with respect to a shift step h: the integer
// offsets j at which N(x) and D(x + j h) share a factor. Computed without
// factoring, from the integer roots of t -> Res_x(N(x), D(x + t h)); the
// resultant in t is recovered exactly by interpolation at integer nodes.

#include <vector>

#include "difftrans/error.hpp"
#include "difftrans/polynomial.hpp"
#include "difftrans/ratfunc.hpp"
#include "difftrans/roots.hpp"

namespace difftrans {

namespace detail {

// Newton interpolation through (nodes[i], values[i]); exact over Q.
inline Poly interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
    const std::size_t n = nodes.size();
    std::vector<Rat> dd = values;  // divided differences, built in place
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    }
    Poly result(dd.empty() ? Rat(0) : dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        result = result * (Poly::x() - Poly(nodes[i])) + Poly(dd[i]);
    }
    return result;
}

}  // namespace detail

// { j in Z : deg gcd(N(x), D(x + j h)) > 0 }, sorted ascending. Finite; both
// signs of j are reported. Errors: h = 0, or a zero input polynomial.
inline std::vector<Int> dispersion_set(const Poly& N, const Poly& D, const Rat& h) {
    if (h == 0) throw StepError("dispersion requires a nonzero step");
    if (N.is_zero() || D.is_zero()) throw DomainError("dispersion of the zero polynomial");
    if (N.degree() == 0 || D.degree() == 0) return {};

    // normalize to step 1: common roots of N(hx), D(h(x+j)) match offsets j
    Poly Nh = scale_arg(N, h).monic();
    Poly Dh = scale_arg(D, h).monic();

    const int m = Nh.degree(), n = Dh.degree();
    const int points = m * n + 1;
    std::vector<Rat> nodes, values;
    nodes.reserve(static_cast<std::size_t>(points));
    values.reserve(static_cast<std::size_t>(points));
    long t = 0;
    while (static_cast<int>(nodes.size()) < points) {
        nodes.emplace_back(t);
        values.push_back(resultant(Nh, shift_poly(Dh, Rat(t))));
        t = t > 0 ? -t : -t + 1;  // 0, 1, -1, 2, -2, ...
    }
    Poly R = detail::interpolate(nodes, values);
    if (R.is_zero()) throw Error("internal: dispersion resultant vanished identically");

    std::vector<Int> out;
    for (const Int& j : integer_roots(R)) {
        // exact confirmation on the original pair
        Poly shifted = shift_poly(D, h * Rat(j));
        if (poly_gcd(N, shifted).degree() > 0) out.push_back(j);
    }
    return out;
}

}  // namespace difftrans
