#pragma once

// Monodromy-orbit invariants and normal forms. A primitive divisor class is
// determined up to the monodromy action by its square, its divisibility t,
// and the residue of mu modulo t taken up to sign. Each orbit therefore has
// a canonical representative t*h - mu'*delta (divisor side) and a canonical
// dual h - mu*r (curve side) with mu folded into [0, n-1], or into
// [2n-2, 3n-3] when the shifted window is requested.

#include <algorithm>

#include "hk/lattice.hpp"

namespace hk {

// representative of +-x mod m inside [0, m/2]
inline i64 fold_residue(i64 x, i64 m) {
    if (m < 1) throw domain_error("fold_residue: need positive modulus");
    i64 r = mod_norm(x, m);
    return std::min(r, m - r);
}

struct OrbitInvariants {
    i64 n;
    i64 square;   // Beauville-Bogomolov square of the divisor class
    i64 div;      // divisibility t, a divisor of 2n-2
    i64 residue;  // mu mod t folded under negation, in [0, t/2], coprime to t

    OrbitInvariants(i64 n_, i64 square_, i64 div_, i64 residue_)
        : n(n_), square(square_), div(div_), residue(residue_) {
        if (n < 2) throw domain_error("OrbitInvariants: need n >= 2");
        i64 two_n_2 = sub64(mul64(2, n), 2);
        if (div < 1 || two_n_2 % div != 0)
            throw domain_error("OrbitInvariants: divisibility must divide 2n-2");
        if (residue < 0 || 2 * residue > div)
            throw domain_error("OrbitInvariants: residue not folded into [0, div/2]");
        if (gcd64(residue, div) != 1)
            throw domain_error("OrbitInvariants: residue not coprime to divisibility");
        // square + residue^2 (2n-2) = lambda^2 (2p-2) for any representative,
        // so it must vanish mod 2 div^2; this also forces the square even
        i64 twotsq = mul64(2, mul64(div, div));
        i64 rsq = mul64(mul64(residue, residue), two_n_2);
        if (mod_norm(add64(square, rsq), twotsq) != 0)
            throw domain_error("OrbitInvariants: square incompatible with divisibility and residue");
    }

    friend bool operator==(const OrbitInvariants&, const OrbitInvariants&) = default;
};

inline OrbitInvariants invariants(const Polarization& h) {
    i64 t = divisibility(h);
    return OrbitInvariants(h.n, bb_square(h), t, fold_residue(h.mu, t));
}

inline OrbitInvariants invariants(const CurveClass& c) {
    return invariants(primitive_divisor(c));
}

inline bool same_orbit(const OrbitInvariants& x, const OrbitInvariants& y) { return x == y; }
inline bool same_orbit(const Polarization& x, const Polarization& y) {
    return invariants(x) == invariants(y);
}
inline bool same_orbit(const CurveClass& x, const CurveClass& y) {
    return invariants(x) == invariants(y);
}

enum class Window { standard, shifted };

// canonical divisor-side representative t*h - mu*delta of genus p
struct DivisorNormalForm {
    i64 n;
    i64 p;
    i64 t;
    i64 mu;  // equals the folded residue

    friend bool operator==(const DivisorNormalForm&, const DivisorNormalForm&) = default;
};

// canonical curve-side representative h - mu*r of genus p; mu = 2g - eps
struct CurveNormalForm {
    i64 n;
    i64 p;
    i64 mu;
    i64 g;
    i64 eps;
    Window window;

    friend bool operator==(const CurveNormalForm&, const CurveNormalForm&) = default;
};

inline DivisorNormalForm divisor_normal_form(const OrbitInvariants& inv) {
    i64 two_n_2 = sub64(mul64(2, inv.n), 2);
    i64 rsq = mul64(mul64(inv.residue, inv.residue), two_n_2);
    i64 twop2 = add64(inv.square, rsq) / mul64(inv.div, inv.div);
    if (twop2 < 0)
        throw domain_error("divisor_normal_form: orbit has no representative with p >= 1");
    return DivisorNormalForm{inv.n, twop2 / 2 + 1, inv.div, inv.residue};
}

// canonical representative as an actual class
inline Polarization realize(const OrbitInvariants& inv) {
    DivisorNormalForm nf = divisor_normal_form(inv);
    return Polarization(nf.n, nf.p, nf.t, nf.mu);
}

// replace mu by mu + (2n-2); the genus moves along so that the square of the
// class is unchanged
inline CurveNormalForm shift_window(const CurveNormalForm& nf) {
    if (nf.window == Window::shifted)
        throw domain_error("shift_window: already in the shifted window");
    i64 two_n_2 = sub64(mul64(2, nf.n), 2);
    i64 mu = add64(nf.mu, two_n_2);
    i64 p = add64(nf.p, add64(nf.mu, nf.n - 1));
    i64 g = (mu + 1) / 2;
    return CurveNormalForm{nf.n, p, mu, g, 2 * g - mu, Window::shifted};
}

inline CurveNormalForm curve_normal_form(const OrbitInvariants& inv,
                                         Window window = Window::standard) {
    DivisorNormalForm d = divisor_normal_form(inv);
    i64 two_n_2 = sub64(mul64(2, inv.n), 2);
    i64 mu = mul64(d.mu, two_n_2 / d.t);  // folded residue mod 2n-2 of the dual, <= n-1
    i64 g = (mu + 1) / 2;
    CurveNormalForm nf{inv.n, d.p, mu, g, 2 * g - mu, Window::standard};
    return window == Window::standard ? nf : shift_window(nf);
}

inline CurveNormalForm curve_normal_form(const Polarization& h,
                                         Window window = Window::standard) {
    return curve_normal_form(invariants(h), window);
}

inline CurveNormalForm curve_normal_form(const CurveClass& c,
                                         Window window = Window::standard) {
    return curve_normal_form(invariants(c), window);
}

// square of the canonical curve representative; equal to the square of the
// dual of any class in the orbit, and window-independent
inline Rational curve_square(const CurveNormalForm& nf) {
    i64 hs = sub64(mul64(2, nf.p), 2);
    return Rational(hs) - Rational(mul64(nf.mu, nf.mu), sub64(mul64(2, nf.n), 2));
}

}  // namespace hk
