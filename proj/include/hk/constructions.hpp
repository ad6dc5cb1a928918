#pragma once

// Discriminant-group bookkeeping behind the orbit invariants. A primitive
// divisor class h of square 2d and divisibility t determines a gluing
// homomorphism from Z/2d into the discriminant group Z/2d + Z/(2n-2) of the
// orthogonal sum (h) + h^perp; the image of 1 pins down the orbit together
// with the square. The same data is also packaged as a rank-0 Mukai-style
// triple, which is the curve-side dual in different clothes.

#include "hk/orbits.hpp"

namespace hk {

// multiplicative order of x in Z/m
inline i64 element_order(i64 x, i64 m) {
    if (m < 1) throw domain_error("element_order: need positive modulus");
    return m / gcd64(mod_norm(x, m), m);
}

struct GlueVector {
    i64 n;
    i64 square;    // 2d, the square of the divisor class
    i64 order;     // order of the glue element, equal to the divisibility
    i64 comp_deg;  // component in Z/2d, equal to 2d/t
    i64 comp_exc;  // component in Z/(2n-2), equal to mu*(2n-2)/t mod 2n-2

    friend bool operator==(const GlueVector&, const GlueVector&) = default;
};

inline GlueVector glue(const Polarization& h) {
    i64 sq = bb_square(h);
    if (sq <= 0) throw domain_error("glue: need a class of positive square");
    i64 t = divisibility(h);
    i64 two_n_2 = sub64(mul64(2, h.n), 2);
    i64 cd = mod_norm(sq / t, sq);
    i64 ce = mod_norm(mul64(h.mu, two_n_2 / t), two_n_2);
    // both components have order exactly t, the first because 2d/t generates
    // the unique subgroup of index t, the second because gcd(mu, t) = 1
    if (element_order(cd, sq) != t || element_order(ce, two_n_2) != t)
        throw consistency_error("glue: component orders disagree with divisibility");
    return GlueVector{h.n, sq, t, cd, ce};
}

inline OrbitInvariants invariants_from_glue(const GlueVector& gv) {
    i64 two_n_2 = sub64(mul64(2, gv.n), 2);
    i64 t = gv.order;
    if (t < 1 || two_n_2 % t != 0)
        throw domain_error("invariants_from_glue: order must divide 2n-2");
    i64 e = two_n_2 / t;
    if (gv.comp_exc % e != 0)
        throw domain_error("invariants_from_glue: exceptional component not a multiple of (2n-2)/t");
    i64 r = fold_residue(gv.comp_exc / e, t);
    if (gv.square % t != 0 || gv.comp_deg != mod_norm(gv.square / t, gv.square))
        throw domain_error("invariants_from_glue: degree component disagrees with order");
    return OrbitInvariants(gv.n, gv.square, t, r);
}

// rank-0 Mukai-style triple (0, ell, s) attached to the divisor class; the
// entries are integral because t divides both lambda and mu*(2n-2)
struct MukaiTriple {
    i64 rank;  // always 0 here
    i64 ell;   // lambda / t
    i64 s;     // mu * (2n-2) / t

    friend bool operator==(const MukaiTriple&, const MukaiTriple&) = default;
};

inline MukaiTriple mukai_triple(const Polarization& h) {
    i64 t = divisibility(h);
    i64 two_n_2 = sub64(mul64(2, h.n), 2);
    return MukaiTriple{0, h.lambda / t, mul64(h.mu, two_n_2 / t)};
}

}  // namespace hk
