#pragma once

// Integer factorization for the formal-constant layer: trial division over a
// small sieve, then deterministic Miller-Rabin plus Brent's rho for what is
// left. Inputs here are the leading-coefficient constants of desk-scale
// instances, far below cryptographic sizes.

#include <map>
#include <vector>

#include "difftrans/detail/int_poly.hpp"
#include "difftrans/error.hpp"
#include "difftrans/rational.hpp"

namespace difftrans {

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        const std::uint32_t limit = 100000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    Int d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    auto powmod = [&](Int b, Int e) {
        Int res = 1;
        b %= n;
        while (e > 0) {
            if ((e & 1) == 1) res = res * b % n;
            b = b * b % n;
            e >>= 1;
        }
        return res;
    };
    // deterministic for n < 3.3 * 10^24; on larger inputs this is a strong
    // probable-prime test with fixed witness set
    for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        Int x = powmod(Int(a), d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; n odd composite, not a prime power of a
// sieve prime. Deterministic restart schedule.
inline Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return Int(2);
    for (unsigned long c = 1;; ++c) {
        Int y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
        const long m = 128;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int count = std::min(Int(m), Int(r - k));
                for (Int i = 0; i < count; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x > y ? x - y : y - x;
                    q = q * diff % n;
                }
                g = gcd_int(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int diff = x > ys ? x - ys : ys - x;
                g = gcd_int(diff, n);
            }
        }
        if (g != n) return g;
        // cycle degenerated; retry with the next polynomial
    }
}

inline void factor_rec(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace detail

// Prime factorization of n >= 1 as {prime -> exponent}.
inline std::map<Int, unsigned> factor_integer(Int n) {
    if (n < 1) throw DomainError("factorization requires a positive integer");
    std::map<Int, unsigned> out;
    for (std::uint32_t p : detail::small_primes()) {
        if (Int(p) * p > n) break;
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
        if (n == 1) break;
    }
    if (n > 1) detail::factor_rec(n, out);
    return out;
}

}  // namespace difftrans
