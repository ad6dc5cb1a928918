#pragma once

// When the primitive class h - mu*r fails the genus test (p < g), a multiple
// m*(h - mu*r) may still move in a family of the required kind. The target
// genus of the m-th multiple is mg - floor(m*eps/2), and feasibility of a
// given m reduces to two integer inequalities: a window bound keeping the
// target genus on the manifold and a quadratic bound keeping it within reach
// of the surface linear system. The same conditions, solved for m over the
// reals, give the closed-form interval bounds reported alongside.

#include <optional>

#include "hk/orbits.hpp"
#include "hk/surd.hpp"

namespace hk {

namespace detail {
inline void check_class_shape(i64 n, i64 p, i64 g, i64 eps) {
    if (n < 2) throw domain_error("multiple class: need n >= 2");
    if (p < 1) throw domain_error("multiple class: need p >= 1");
    if (eps != 0 && eps != 1) throw domain_error("multiple class: eps must be 0 or 1");
    if (2 * g - eps < 1) throw domain_error("multiple class: need mu = 2g - eps >= 1");
}
}  // namespace detail

// the obstructed classes whose multiples are worth scanning: in the standard
// window, genus-obstructed, and of positive square
inline bool exception_conditions(i64 n, i64 p, i64 g, i64 eps) {
    detail::check_class_shape(n, p, g, eps);
    i64 mu = 2 * g - eps;
    if (mu > n - 1) return false;
    if (g < p + 1) return false;
    return mul64(sub64(mul64(2, p), 2), sub64(mul64(2, n), 2)) > mul64(mu, mu);
}

inline i64 target_genus(i64 m, i64 g, i64 eps) {
    if (m < 1) throw domain_error("target_genus: need m >= 1");
    return sub64(mul64(m, g), mul64(m, eps) / 2);
}

// literal feasibility of the m-th multiple: target genus fits on the
// manifold and is reachable from the genus-p surface system
inline bool direct_feasible(i64 n, i64 p, i64 g, i64 eps, i64 m) {
    detail::check_class_shape(n, p, g, eps);
    i64 gm = target_genus(m, g, eps);
    if (add64(gm, 1) > n) return false;
    return gm <= add64(mul64(mul64(m, m), p - 1), 1);
}

// the same two inequalities with the parity of m*eps resolved, as exact
// integer arithmetic; agrees with direct_feasible for every m >= 1
inline bool effective_member(i64 n, i64 p, i64 g, i64 eps, i64 m) {
    detail::check_class_shape(n, p, g, eps);
    if (m < 1) throw domain_error("effective_member: need m >= 1");
    i64 A = 2 * g - eps;
    i64 mA = mul64(m, A);
    i64 quad = sub64(mul64(2, mul64(mul64(m, m), p - 1)), mA);
    if (mul64(m, eps) % 2 == 0) {
        return mA <= mul64(2, n - 1) && add64(quad, 2) >= 0;
    }
    return mA <= sub64(mul64(2, n), 3) && add64(quad, 1) >= 0;
}

// closed-form interval endpoints for the two parity families; a missing
// lower endpoint means the quadratic has no real root and every m in the
// window is feasible on that side
struct MultiplierBounds {
    std::optional<MBound> even_min;
    Rational even_max;
    std::optional<MBound> odd_min;
    Rational odd_max;
};

inline MultiplierBounds multiplier_bounds(i64 n, i64 p, i64 g, i64 eps) {
    detail::check_class_shape(n, p, g, eps);
    if (p < 2) throw domain_error("multiplier_bounds: need p >= 2");
    i64 A = 2 * g - eps;
    MultiplierBounds out{std::nullopt, Rational(mul64(2, n - 1), A), std::nullopt,
                         Rational(sub64(mul64(2, n), 3), A)};
    i64 Asq = mul64(A, A);
    i64 be = sub64(Asq, mul64(16, p - 1));
    if (be >= 0) out.even_min = MBound(A, be, mul64(4, p - 1));
    i64 bo = sub64(Asq, mul64(8, p - 1));
    if (bo >= 0) out.odd_min = MBound(A, bo, mul64(4, p - 1));
    return out;
}

// smallest m >= 2 whose multiple passes, scanning the whole window; nullopt
// means no multiple of any order works at this n
inline std::optional<i64> find_m(i64 n, i64 p, i64 g, i64 eps) {
    if (!exception_conditions(n, p, g, eps))
        throw domain_error("find_m: class is not an in-window positive-square exception");
    i64 A = 2 * g - eps;
    for (i64 m = 2; mul64(m, A) <= mul64(2, n - 1); ++m) {
        bool eff = effective_member(n, p, g, eps, m);
        if (eff != direct_feasible(n, p, g, eps, m))
            throw consistency_error("find_m: interval and direct feasibility disagree");
        if (eff) return m;
    }
    return std::nullopt;
}

struct MinimalN {
    i64 n;
    i64 m;
};

// first n at which the class (p, g, eps) is an exception and some multiple
// passes; the exception region in n is an up-set, so this is the table entry
inline MinimalN minimal_n(i64 p, i64 g, i64 eps, i64 n_limit = 1000) {
    for (i64 n = 2; n <= n_limit; ++n) {
        if (!exception_conditions(n, p, g, eps)) continue;
        if (auto m = find_m(n, p, g, eps)) return MinimalN{n, *m};
    }
    throw domain_error("minimal_n: no feasible multiple up to the n limit");
}

// once a multiple works it keeps working: for n' >= g + 1 + n the window has
// grown enough that the witness multiple stays feasible
inline i64 persistence_bound(i64 n, i64 g) { return add64(add64(g, 1), n); }

// test family used by the asymptotic verification suite: g grows like
// (n-1)/3 and p like (n-1)/9, which drives both multiplier windows toward
// the interval (2, 3) as n grows
struct PinchClass {
    i64 p;
    i64 g;
};

inline PinchClass pinch_family(i64 n) {
    if (n < 10) throw domain_error("pinch_family: need n >= 10");
    i64 g = ceil_div(n - 1, 3);
    i64 p = add64(ceil_div(n - 1, 9), 2);
    return PinchClass{p, g};
}

}  // namespace hk
