#pragma once

// Dense integer-polynomial kernel backing the exact rational layer:
// primitive pseudo-remainder sequences, the subresultant resultant scheme,
// and a CRT/modular gcd for operands whose coefficients are too wide for
// plain remainder sequences. Coefficients are ascending, no trailing zeros.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "difftrans/error.hpp"
#include "difftrans/rational.hpp"

namespace difftrans::detail {

using IPoly = std::vector<Int>;

inline void ip_trim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int ip_deg(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool ip_is_zero(const IPoly& p) { return p.empty(); }

inline Int ip_content(const IPoly& p) {
    Int g = 0;
    for (const Int& c : p) {
        g = gcd_int(g, c);
        if (g == 1) break;
    }
    return g;  // 0 for the zero polynomial
}

// Divides out the content; keeps the sign of the leading coefficient.
inline IPoly ip_primitive(IPoly p) {
    Int g = ip_content(p);
    if (g == 0 || g == 1) return p;
    for (Int& c : p) c /= g;
    return p;
}

inline IPoly ip_neg(IPoly p) {
    for (Int& c : p) c = -c;
    return p;
}

inline IPoly ip_mul(const IPoly& a, const IPoly& b) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ip_trim(r);
    return r;
}

inline IPoly ip_scale(IPoly p, const Int& k) {
    if (k == 0) return {};
    for (Int& c : p) c *= k;
    return p;
}

inline IPoly ip_sub(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ip_trim(r);
    return r;
}

inline IPoly ip_derivative(const IPoly& p) {
    if (p.size() <= 1) return {};
    IPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
    ip_trim(r);
    return r;
}

inline Int ip_eval(const IPoly& p, const Int& x) {
    Int r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b. Requires deg a >= deg b >= 0.
inline IPoly ip_prem(IPoly a, const IPoly& b) {
    const int db = ip_deg(b);
    const Int lb = b.back();
    int e = ip_deg(a) - db + 1;
    while (!a.empty() && ip_deg(a) >= db) {
        const int da = ip_deg(a);
        const Int q = a.back();
        // a <- lb*a - q*x^(da-db)*b; the degree-da terms cancel exactly
        IPoly next(static_cast<std::size_t>(da), Int(0));
        for (int i = 0; i < da; ++i) next[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * lb;
        const int shift = da - db;
        for (int i = 0; i < db; ++i) next[static_cast<std::size_t>(i + shift)] -= q * b[static_cast<std::size_t>(i)];
        a = std::move(next);
        ip_trim(a);
        --e;
    }
    if (e > 0 && !a.empty()) {
        Int f = pow_int(lb, static_cast<unsigned long>(e));
        for (Int& c : a) c *= f;
    }
    return a;
}

// Gcd up to rational scaling (callers normalize); primitive PRS backend.
// Result is primitive with positive leading coefficient.
inline IPoly ip_gcd_prs(IPoly a, IPoly b) {
    ip_trim(a);
    ip_trim(b);
    if (a.empty()) std::swap(a, b);
    if (b.empty()) {
        if (a.empty()) return {};
        a = ip_primitive(a);
        if (a.back() < 0) a = ip_neg(a);
        return a;
    }
    a = ip_primitive(a);
    b = ip_primitive(b);
    if (ip_deg(a) < ip_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        IPoly r = ip_prem(a, b);
        a = std::move(b);
        b = ip_primitive(r);
    }
    if (ip_deg(a) == 0) return {Int(1)};
    if (a.back() < 0) a = ip_neg(a);
    return a;
}

// ---------------------------------------------------------------------------
// Subresultant resultant (fraction-free), Cohen's scheme.
// Returns Res_x(a, b) for nonzero integer polynomials.
// ---------------------------------------------------------------------------
inline Int ip_resultant(IPoly a, IPoly b) {
    ip_trim(a);
    ip_trim(b);
    if (a.empty() || b.empty()) throw DomainError("resultant of zero polynomial");
    int s = 1;
    if (ip_deg(a) < ip_deg(b)) {
        if ((ip_deg(a) & 1) && (ip_deg(b) & 1)) s = -s;
        std::swap(a, b);
    }
    if (ip_deg(a) == 0) return Int(1);  // two constants
    if (ip_deg(b) == 0) {
        Int r = pow_int(b[0], static_cast<unsigned long>(ip_deg(a)));
        return s < 0 ? -r : r;
    }
    Int ca = ip_content(a), cb = ip_content(b);
    a = ip_primitive(a);
    b = ip_primitive(b);
    Int t = pow_int(ca, static_cast<unsigned long>(ip_deg(b))) *
            pow_int(cb, static_cast<unsigned long>(ip_deg(a)));
    Int g = 1, h = 1;
    while (true) {
        int da = ip_deg(a), db = ip_deg(b);
        int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        IPoly r = ip_prem(a, b);
        a = std::move(b);
        // b <- r / (g*h^delta), exact division
        Int divisor = g * pow_int(h, static_cast<unsigned long>(delta));
        for (Int& c : r) c /= divisor;
        ip_trim(r);
        b = std::move(r);
        g = a.back();
        // h <- h^(1-delta) * g^delta
        if (delta > 0) {
            Int gh = pow_int(g, static_cast<unsigned long>(delta));
            if (delta > 1) gh /= pow_int(h, static_cast<unsigned long>(delta - 1));
            h = gh;
        }
        if (b.empty()) return Int(0);
        if (ip_deg(b) == 0) {
            Int res = pow_int(b[0], static_cast<unsigned long>(ip_deg(a)));
            if (ip_deg(a) > 1) res /= pow_int(h, static_cast<unsigned long>(ip_deg(a) - 1));
            res *= t;
            return s < 0 ? -res : res;
        }
    }
}

// ---------------------------------------------------------------------------
// Arithmetic mod a word-sized prime (p < 2^31, so products fit in 64 bits).
// ---------------------------------------------------------------------------
using MPoly = std::vector<std::uint64_t>;

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while (!(d & 1)) d >>= 1, ++r;
    auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t res = 1;
        b %= n;
        while (e) {
            if (e & 1) res = mulmod(res, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return res;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline std::uint64_t next_prime_u64(std::uint64_t n) {
    ++n;
    if (n <= 2) return 2;
    if (!(n & 1)) ++n;
    while (!is_prime_u64(n)) n += 2;
    return n;
}

inline std::uint64_t int_mod_u64(const Int& v, std::uint64_t p) {
    Int m = v % p;
    if (m < 0) m += p;
    return m.convert_to<std::uint64_t>();
}

inline void mp_trim(MPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline MPoly mp_from_ipoly(const IPoly& a, std::uint64_t p) {
    MPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = int_mod_u64(a[i], p);
    mp_trim(r);
    return r;
}

inline MPoly mp_derivative(const MPoly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    MPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
    mp_trim(r);
    return r;
}

inline std::uint64_t mp_eval(const MPoly& a, std::uint64_t x, std::uint64_t p) {
    std::uint64_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = (r * x + a[i]) % p;
    return r;
}

inline void mp_make_monic(MPoly& a, std::uint64_t p) {
    if (a.empty()) return;
    std::uint64_t inv = mod_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
}

inline MPoly mp_rem(MPoly a, const MPoly& b, std::uint64_t p) {
    // b monic
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        std::uint64_t q = a.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (int i = 0; i <= db; ++i) {
            std::uint64_t sub = q * b[i] % p;
            auto& c = a[i + shift];
            c = (c + p - sub) % p;
        }
        mp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline MPoly mp_gcd(MPoly a, MPoly b, std::uint64_t p) {
    mp_trim(a);
    mp_trim(b);
    while (!b.empty()) {
        mp_make_monic(b, p);
        MPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) mp_make_monic(a, p);
    return a;
}

// ---------------------------------------------------------------------------
// Modular (Brown-style) gcd over Z, with unconditional verification by exact
// division. Returns the primitive gcd with positive leading coefficient.
// ---------------------------------------------------------------------------

// Exact test: does the primitive polynomial d divide p (over Q)?
inline bool ip_divides(const IPoly& d, const IPoly& p) {
    if (p.empty()) return true;
    if (d.empty()) return false;
    if (ip_deg(d) > ip_deg(p)) return false;
    // long division over Q using rationals to sidestep non-monic leading coefficients
    std::vector<Rat> rem(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) rem[i] = Rat(p[i]);
    int dd = ip_deg(d);
    Rat lead(d.back());
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= dd) {
        Rat q = rem[dr] / lead;
        if (q != 0) {
            for (int i = 0; i <= dd; ++i) rem[dr - dd + i] -= q * Rat(d[i]);
        }
        --dr;
        while (dr >= 0 && rem[dr] == 0 && dr >= dd) --dr;
    }
    for (int i = 0; i < dd; ++i)
        if (rem[i] != 0) return false;
    return true;
}

inline IPoly ip_gcd_modular(IPoly a, IPoly b) {
    ip_trim(a);
    ip_trim(b);
    if (a.empty()) std::swap(a, b);
    if (b.empty()) {
        if (a.empty()) return {};
        a = ip_primitive(a);
        if (!a.empty() && a.back() < 0) a = ip_neg(a);
        return a;
    }
    a = ip_primitive(a);
    b = ip_primitive(b);
    if (a.back() < 0) a = ip_neg(a);
    if (b.back() < 0) b = ip_neg(b);
    Int gamma = gcd_int(a.back(), b.back());

    std::uint64_t p = (1ull << 30);
    int best_deg = std::min(ip_deg(a), ip_deg(b)) + 1;
    Int modulus = 0;
    IPoly accum;      // symmetric-representative candidate, scaled by gamma
    IPoly last_stable;
    for (int iter = 0; iter < 4096; ++iter) {
        p = next_prime_u64(p);
        if (a.back() % p == 0 || b.back() % p == 0) continue;
        MPoly ga = mp_from_ipoly(a, p), gb = mp_from_ipoly(b, p);
        MPoly g = mp_gcd(ga, gb, p);
        int d = static_cast<int>(g.size()) - 1;
        if (d == 0) return {Int(1)};  // proven coprime: mod-p gcd degree never undershoots
        if (d > best_deg) continue;   // bad prime
        if (d < best_deg) {
            best_deg = d;
            modulus = 0;
            accum.clear();
            last_stable.clear();
        }
        // impose leading coefficient gamma
        std::uint64_t scale = int_mod_u64(gamma, p) * mod_inv(g.back(), p) % p;
        IPoly img(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) img[i] = Int(g[i] * scale % p);
        if (modulus == 0) {
            accum = img;
            modulus = p;
        } else {
            // CRT-combine coefficientwise
            Int pI(p);
            Int minv = Int(mod_inv(int_mod_u64(modulus, p), p));
            if (accum.size() < img.size()) accum.resize(img.size(), Int(0));
            for (std::size_t i = 0; i < accum.size(); ++i) {
                Int cur = accum[i] % modulus;
                if (cur < 0) cur += modulus;
                Int target = i < img.size() ? img[i] : Int(0);
                Int diff = (target - cur) % pI;
                if (diff < 0) diff += pI;
                accum[i] = cur + modulus * ((diff * minv) % pI);
            }
            modulus *= pI;
        }
        // symmetric representatives
        IPoly cand(accum.size());
        Int half = modulus / 2;
        for (std::size_t i = 0; i < accum.size(); ++i) {
            Int c = accum[i] % modulus;
            if (c < 0) c += modulus;
            if (c > half) c -= modulus;
            cand[i] = c;
        }
        ip_trim(cand);
        if (!cand.empty() && cand == last_stable) {
            IPoly pp = ip_primitive(cand);
            if (!pp.empty() && pp.back() < 0) pp = ip_neg(pp);
            if (ip_divides(pp, a) && ip_divides(pp, b)) return pp;
        }
        last_stable = cand;
    }
    throw Error("modular gcd did not stabilize");
}

// Width heuristic deciding between the PRS and modular gcd backends.
inline std::size_t ip_max_bits(const IPoly& p) {
    std::size_t m = 0;
    for (const Int& c : p) m = std::max(m, static_cast<std::size_t>(boost::multiprecision::msb(c == 0 ? Int(1) : abs_int(c)) + 1));
    return m;
}

inline IPoly ip_gcd(const IPoly& a, const IPoly& b) {
    bool big = ip_max_bits(a) + ip_max_bits(b) > 512 || std::min(ip_deg(a), ip_deg(b)) > 24;
    return big ? ip_gcd_modular(a, b) : ip_gcd_prs(a, b);
}

}  // namespace difftrans::detail
