#pragma once

// Coboundary certifier: decide whether a in Q(x)* can be written as
// a = c * rho(g)/g with c a constant and g rational, returning either the
// explicit pair (c, g) or an obstruction witness.
//
// Write a = c0 * N/D with N, D monic coprime; c0 is then the only possible
// constant (rho(g)/g of a monic-normalized g has leading-coefficient
// quotient 1). N/D is a coboundary iff iterated shift-cancellation
// terminates at N = D = 1: at every dispersion offset j remove
// u = gcd(N(x), D(x + j h)) from both sides and push the telescoped block of
// shifted copies of u into g. Each step strictly reduces deg N + deg D, and
// no factorization is ever needed - only shift-offset structure matters.

#include <algorithm>
#include <utility>
#include <variant>
#include <vector>

#include "difftrans/diff_system.hpp"
#include "difftrans/dispersion.hpp"
#include "difftrans/exp_const.hpp"
#include "difftrans/polynomial.hpp"
#include "difftrans/ratfunc.hpp"

namespace difftrans {

struct Certificate {
    ExpConst c;
    RatFunc g;  // monic numerator and denominator; constants live in c
};

// One offending factor-orbit of the residual. `block` is monic squarefree and
// closed under the shifts present in the residual; every irreducible factor
// of it generates an orbit whose exponents all have the sign of
// `exponent_sum`. The sum itself counts residual roots of the block's orbit
// with multiplicity (for orbits of linear factors this is exactly the orbit
// exponent sum).
struct OrbitNote {
    Poly block;
    Int exponent_sum;
};

struct ObstructionWitness {
    RatFunc residual;  // fully shift-cancelled monic kernel, != 1
    OrbitNote orbit;
};

using CertifyResult = std::variant<Certificate, ObstructionWitness>;

namespace detail {

// Shift-closure of `seed` inside the squarefree polynomial w: the product of
// all irreducible factors of w lying in the orbit of some factor of seed.
inline Poly orbit_closure(Poly seed, const Poly& w, const Rat& h) {
    std::vector<Int> offsets = dispersion_set(w, w, h);
    Poly o = seed.monic();
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Int& j : offsets) {
            if (j == 0) continue;
            Rat tau = h * Rat(j);
            Poly u = poly_gcd(w, shift_poly(o, tau));
            if (u.degree() == 0) continue;
            Poly fresh = u / poly_gcd(u, o);
            if (fresh.degree() > 0) {
                o = (o * fresh).monic();
                grew = true;
            }
        }
    }
    return o;
}

// On a fully saturated residual no orbit straddles numerator and denominator,
// so the closure of a fixed-multiplicity squarefree piece stays on its side
// and its exponent sum cannot cancel.
inline OrbitNote make_orbit_note(const Poly& n, const Poly& d, const Rat& h) {
    const bool from_num = n.degree() > 0;
    const Poly& p = from_num ? n : d;
    auto layers = squarefree_decomposition(p);
    Poly seed = layers.front().first;
    Poly w = squarefree_part(p);
    Poly block = orbit_closure(seed, w, h);
    Int sum = 0;
    for (const auto& [s, k] : layers) sum += Int(k) * poly_gcd(block, s).degree();
    return OrbitNote{block, from_num ? sum : -sum};
}

}  // namespace detail

inline CertifyResult coboundary_certify(const RatFunc& a, const StepH& s) {
    if (a.is_zero()) throw DomainError("coboundary certification requires a nonzero input");
    const Rat& h = s.h;
    Rat c0 = a.num().leading();  // den is monic by the RatFunc invariant
    Poly n = a.num().monic();
    Poly d = a.den();
    RatFunc g(1);

    std::vector<Int> offsets = dispersion_set(n, d, h);
    // deterministic cancellation order: decreasing |j|, positive first at ties
    std::sort(offsets.begin(), offsets.end(), [](const Int& x, const Int& y) {
        Int ax = abs_int(x), ay = abs_int(y);
        if (ax != ay) return ax > ay;
        return x > y;
    });

    for (const Int& joff : offsets) {
        if (joff == 0) continue;  // unreachable: N, D start coprime
        if (abs_int(joff) > 100000)
            throw ResourceError("certificate factor block too large to materialize");
        const long j = joff.convert_to<long>();
        while (true) {
            Poly u = poly_gcd(n, shift_poly(d, h * Rat(j)));
            if (u.degree() == 0) break;
            n = n / u;
            d = d / shift_poly(u, -h * Rat(j));
            if (j > 0) {
                Poly w(Rat(1));
                for (long i = 1; i <= j; ++i) w *= shift_poly(u, -h * Rat(i));
                g *= RatFunc(w);
            } else {
                Poly w(Rat(1));
                for (long i = 0; i < -j; ++i) w *= shift_poly(u, h * Rat(i));
                g /= RatFunc(w);
            }
        }
    }

    if (n.is_one() && d.is_one()) return Certificate{ExpConst::from_rational(c0), g};
    return ObstructionWitness{RatFunc(n, d), detail::make_orbit_note(n, d, h)};
}

using RescaleResult = std::variant<std::pair<Certificate, ScaledSystem>, ObstructionWitness>;

// det(A) = c rho(g)/g criterion; on success rescales to B = c^(-1/n) A with
// det(B) = rho(g)/g. The scalar is exact (rational prime exponents).
inline RescaleResult det_criterion_rescale(const DiffSystem& a) {
    CertifyResult r = coboundary_certify(system_det(a), a.step());
    if (std::holds_alternative<ObstructionWitness>(r))
        return std::get<ObstructionWitness>(std::move(r));
    Certificate cert = std::get<Certificate>(std::move(r));
    long n = static_cast<long>(a.size());
    ExpConst scale = cert.c.pow(Rat(-1, n));
    return std::make_pair(std::move(cert), ScaledSystem{scale, a});
}

}  // namespace difftrans
