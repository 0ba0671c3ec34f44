#pragma once

// Exact root extraction over Z and Q without integer factorization of the
// coefficients: reduce to the squarefree part, read the roots off modulo a
// well-chosen word prime, Hensel-lift past the Cauchy bound, and confirm each
// candidate by exact evaluation. Sound and complete for any input size.

#include <algorithm>
#include <vector>

#include "difftrans/detail/int_poly.hpp"
#include "difftrans/error.hpp"
#include "difftrans/polynomial.hpp"
#include "difftrans/rational.hpp"

namespace difftrans {

namespace detail {

// Smallest power-of-two tower q^(2^k) exceeding `bound`, reached by quadratic
// Newton steps. S must be squarefree mod q with root r0 simple.
inline Int hensel_lift_root(const IPoly& s, const IPoly& ds, std::uint64_t q, std::uint64_t r0,
                            const Int& bound) {
    Int M(q);
    Int r(r0);
    auto inv_mod = [](Int a, const Int& m) {
        // extended Euclid; a invertible mod m by construction
        Int old_r = a % m, rr = m, old_s = 1, ss = 0;
        if (old_r < 0) old_r += m;
        while (rr != 0) {
            Int qt = old_r / rr;
            Int tmp = old_r - qt * rr;
            old_r = rr;
            rr = tmp;
            tmp = old_s - qt * ss;
            old_s = ss;
            ss = tmp;
        }
        old_s %= m;
        if (old_s < 0) old_s += m;
        return old_s;
    };
    auto eval_mod = [](const IPoly& p, const Int& x, const Int& m) {
        Int v = 0;
        for (std::size_t i = p.size(); i-- > 0;) {
            v = (v * x + p[i]) % m;
        }
        if (v < 0) v += m;
        return v;
    };
    while (M <= bound) {
        Int M2 = M * M;
        Int fr = eval_mod(s, r, M2);
        Int dfr = eval_mod(ds, r, M2);
        Int u = inv_mod(dfr, M2);
        r = (r - fr * u) % M2;
        if (r < 0) r += M2;
        M = M2;
    }
    // symmetric representative
    if (r > M / 2) r -= M;
    return r;
}

}  // namespace detail

// All integer roots of p, exact, without multiplicity, sorted ascending.
inline std::vector<Int> integer_roots(const Poly& p) {
    if (p.is_zero()) throw DomainError("roots of the zero polynomial");
    std::vector<Int> out;
    auto [content, ip] = to_integer_primitive(p);
    (void)content;
    // strip powers of x
    std::size_t low = 0;
    while (low < ip.size() && ip[low] == 0) ++low;
    if (low > 0) {
        out.push_back(Int(0));
        ip.erase(ip.begin(), ip.begin() + static_cast<long>(low));
    }
    if (detail::ip_deg(ip) <= 0) {
        std::sort(out.begin(), out.end());
        return out;
    }
    if (detail::ip_deg(ip) == 1) {
        // a1 x + a0 = 0
        if (ip[0] % ip[1] == 0) out.push_back(-ip[0] / ip[1]);
        std::sort(out.begin(), out.end());
        return out;
    }

    // squarefree part (monic over Q, re-integerized)
    Poly sq = squarefree_part(from_integer(ip));
    auto [c2, s] = to_integer_primitive(sq);
    (void)c2;
    detail::IPoly ds = detail::ip_derivative(s);

    // Cauchy bound: |root| <= 1 + max |s_i| / |s_n|
    Int lead = abs_int(s.back());
    Int mx = 0;
    for (const Int& c : s) mx = std::max(mx, abs_int(c));
    Int bound = 1 + mx / lead + 1;

    // prime with deg preserved and S squarefree mod q
    std::uint64_t q = 10000;
    while (true) {
        q = detail::next_prime_u64(q);
        if (s.back() % q == 0) continue;
        detail::MPoly sm = detail::mp_from_ipoly(s, q);
        detail::MPoly dm = detail::mp_derivative(sm, q);
        detail::MPoly g = detail::mp_gcd(sm, dm, q);
        if (g.size() == 1) break;
    }

    detail::MPoly sm = detail::mp_from_ipoly(s, q);
    for (std::uint64_t r0 = 0; r0 < q; ++r0) {
        if (detail::mp_eval(sm, r0, q) != 0) continue;
        Int cand = detail::hensel_lift_root(s, ds, q, r0, 2 * bound);
        if (detail::ip_eval(s, cand) == 0) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// All rational roots of p, exact, no duplicates, sorted ascending.
// Uses the monic transform y = lc * x so that every rational root becomes an
// integer root of an auxiliary monic polynomial.
inline std::vector<Rat> rational_roots(const Poly& p) {
    if (p.is_zero()) throw DomainError("roots of the zero polynomial");
    std::vector<Rat> out;
    if (p.degree() == 0) return out;

    Poly sq = squarefree_part(p);
    auto [c2, s] = to_integer_primitive(sq);
    (void)c2;
    int n = detail::ip_deg(s);
    Int lead = s.back();
    if (n == 1) {
        out.push_back(Rat(-s[0], s[1]));
        return out;
    }
    // T(y) = lead^(n-1) * S(y / lead): monic with integer coefficients
    // (coefficient of y^i is s_i * lead^(n-1-i); the top one is s_n/lead = 1)
    detail::IPoly t(s.size());
    t[static_cast<std::size_t>(n)] = 1;
    Int f = 1;
    for (int i = n - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i)] * f;
        f *= lead;
    }
    for (const Int& y : integer_roots(from_integer(t))) out.push_back(Rat(y, lead));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // every reported root must actually vanish (guards the transform)
    for (const Rat& r : out)
        if (p.eval(r) != 0) throw Error("internal: spurious rational root");
    return out;
}

}  // namespace difftrans
