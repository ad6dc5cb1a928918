#pragma once

// Rank-2 Beauville-Bogomolov arithmetic on the Hilbert scheme of n points of
// a K3 surface. Divisor classes live in the span of the surface polarization
// h (with h^2 = 2p-2 on the surface) and the half-exceptional class delta
// (delta^2 = -2(n-1)); curve classes live in the dual span of h and
// r = delta/(2n-2). Everything is exact 64-bit with checked intermediates.

#include "hk/checked.hpp"
#include "hk/rational.hpp"

namespace hk {

inline i64 exceptional_square(i64 n) {
    if (n < 2) throw domain_error("exceptional_square: need n >= 2");
    return -2 * (n - 1);
}

// lambda * h - mu * delta, primitive, on the n-point Hilbert scheme of a
// genus-p polarized K3
struct Polarization {
    i64 n;
    i64 p;
    i64 lambda;
    i64 mu;

    Polarization(i64 n_, i64 p_, i64 lambda_, i64 mu_)
        : n(n_), p(p_), lambda(lambda_), mu(mu_) {
        if (n < 2) throw domain_error("Polarization: need n >= 2");
        if (p < 1) throw domain_error("Polarization: need p >= 1");
        if (lambda < 1) throw domain_error("Polarization: need lambda >= 1");
        if (mu < 0) throw domain_error("Polarization: need mu >= 0");
        if (gcd64(lambda, mu) != 1) throw domain_error("Polarization: class is not primitive");
    }
};

// a * h - b * r in the dual lattice; a = 0 is allowed (multiples of r)
struct CurveClass {
    i64 n;
    i64 p;
    i64 a;
    i64 b;

    CurveClass(i64 n_, i64 p_, i64 a_, i64 b_) : n(n_), p(p_), a(a_), b(b_) {
        if (n < 2) throw domain_error("CurveClass: need n >= 2");
        if (p < 1) throw domain_error("CurveClass: need p >= 1");
        if (a < 0) throw domain_error("CurveClass: need a >= 0");
        if (gcd64(a, b) != 1) throw domain_error("CurveClass: class is not primitive");
    }
};

inline i64 bb_square(const Polarization& h) {
    // lambda^2 (2p-2) - mu^2 (2n-2)
    i64 hs = mul64(mul64(h.lambda, h.lambda), sub64(mul64(2, h.p), 2));
    i64 ds = mul64(mul64(h.mu, h.mu), sub64(mul64(2, h.n), 2));
    return sub64(hs, ds);
}

inline Rational bb_square(const CurveClass& c) {
    // a^2 (2p-2) - b^2 / (2n-2)
    i64 hs = mul64(mul64(c.a, c.a), sub64(mul64(2, c.p), 2));
    return Rational(hs) - Rational(mul64(c.b, c.b), sub64(mul64(2, c.n), 2));
}

// gcd of the pairing ideal q(h, -) over the full degree-2 lattice; with
// gcd(lambda, mu) = 1 this collapses to gcd(lambda, 2n-2), a divisor of 2n-2
inline i64 divisibility(const Polarization& h) {
    return gcd64(h.lambda, sub64(mul64(2, h.n), 2));
}

// intersection number of a divisor with a curve class on the same manifold:
// h pairs to 2p-2 with itself and delta pairs to 1 with r
inline i64 pair(const Polarization& h, const CurveClass& c) {
    if (h.n != c.n || h.p != c.p)
        throw domain_error("pair: classes live on different manifolds");
    i64 hh = mul64(mul64(h.lambda, c.a), sub64(mul64(2, h.p), 2));
    return sub64(hh, mul64(h.mu, c.b));
}

// primitive generator of the ray paired integrally against every divisor:
// dual_curve(h) . h' is integral for all h', and the map divides out the
// divisibility t
inline CurveClass dual_curve(const Polarization& h) {
    i64 t = divisibility(h);
    i64 two_n_2 = sub64(mul64(2, h.n), 2);
    return CurveClass(h.n, h.p, h.lambda / t, mul64(h.mu, two_n_2 / t));
}

// inverse of dual_curve on curve classes with a >= 1, b >= 0: recovers the
// unique primitive divisor class whose dual ray this is
inline Polarization primitive_divisor(const CurveClass& c) {
    if (c.a < 1) throw domain_error("primitive_divisor: need a >= 1");
    if (c.b < 0) throw domain_error("primitive_divisor: need b >= 0");
    i64 two_n_2 = sub64(mul64(2, c.n), 2);
    i64 e = gcd64(c.b, two_n_2);
    i64 t = two_n_2 / e;
    return Polarization(c.n, c.p, mul64(c.a, t), c.b / e);
}

}  // namespace hk
