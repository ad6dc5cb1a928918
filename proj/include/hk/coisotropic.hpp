#pragma once

// Coisotropic subvariety data attached to obstructed classes. A genus-g
// curve family on the n-point Hilbert scheme with surface genus p and
// Euler-characteristic offset chi = g - n + 3 sweeps a coisotropic
// subvariety when chi sits in the admissible range; its codimension and the
// dimension of the isotropic leaves' base follow by linear bookkeeping.
// Obstructed classes in the standard window feed in through the shifted
// window, which is where the codimension-2 family lives.

#include "hk/checked.hpp"

namespace hk {

struct even_coefficient_error : domain_error {
    explicit even_coefficient_error(const std::string& what) : domain_error(what) {}
};

struct range_error : domain_error {
    explicit range_error(const std::string& what) : domain_error(what) {}
};

struct CoisotropicData {
    i64 n;
    i64 p;
    i64 g;
    i64 chi;       // g - n + 3
    bool applicable;
    i64 codim;     // chi - 2(p-g) - 1, meaningful when applicable
    i64 base_dim;  // 2(n + 1 + 2(p-g) - chi), meaningful when applicable

    friend bool operator==(const CoisotropicData&, const CoisotropicData&) = default;
};

inline CoisotropicData coisotropic_data(i64 n, i64 p, i64 g) {
    if (n < 2) throw domain_error("coisotropic_data: need n >= 2");
    i64 chi = add64(sub64(g, n), 3);
    i64 gap = sub64(p, g);
    bool ok = add64(mul64(2, gap), 2) <= chi && chi <= add64(add64(gap, n), 1);
    i64 codim = sub64(chi, add64(mul64(2, gap), 1));
    i64 base_dim = mul64(2, sub64(add64(add64(n, 1), mul64(2, gap)), chi));
    return CoisotropicData{n, p, g, chi, ok, codim, base_dim};
}

// route an obstructed standard-window class (surface genus pi, floor genus
// gamma, parity eps) through the shifted window: the swept family has
// surface genus pi + n - 1 + 2 gamma - eps and curve genus n - 1 + 2 gamma -
// eps, and its codimension comes out as 2 gamma - eps - 2 pi + 1 >= 2
inline CoisotropicData shift_to_coisotropic(i64 n, i64 pi, i64 gamma, i64 eps) {
    if (eps != 0 && eps != 1) throw domain_error("shift_to_coisotropic: eps must be 0 or 1");
    if (pi < 1) throw domain_error("shift_to_coisotropic: need pi >= 1");
    if (pi >= gamma) throw domain_error("shift_to_coisotropic: need pi < gamma");
    if (sub64(mul64(2, gamma), eps) > n - 1)
        throw domain_error("shift_to_coisotropic: class leaves the standard window");
    i64 mu = sub64(mul64(2, gamma), eps);
    i64 g = add64(n - 1, mu);
    i64 p = add64(pi, g);
    CoisotropicData data = coisotropic_data(n, p, g);
    if (data.chi != add64(mul64(2, gamma), 2 - eps))
        throw consistency_error("shift_to_coisotropic: chi mismatch");
    if (data.codim != add64(sub64(mu, mul64(2, pi)), 1))
        throw consistency_error("shift_to_coisotropic: codimension mismatch");
    if (!data.applicable || data.codim < 2)
        throw consistency_error("shift_to_coisotropic: shifted class not admissible");
    return data;
}

// the codimension-2 series: pi = g - 1, gamma = g, eps = 1, valid for
// 2 < g <= n/2
inline CoisotropicData codim2_family(i64 n, i64 g) {
    if (g <= 2 || 2 * g > n) throw range_error("codim2_family: need 2 < g <= n/2");
    CoisotropicData data = shift_to_coisotropic(n, g - 1, g, 1);
    if (data.codim != 2) throw consistency_error("codim2_family: codimension is not 2");
    return data;
}

// entry point by class coefficient: the class h - mu*r joins the series only
// for odd mu, and even coefficients are reported as such rather than as a
// range failure
inline CoisotropicData codim2_from_class(i64 n, i64 mu) {
    if (mu < 1) throw domain_error("codim2_from_class: need mu >= 1");
    if (mu % 2 == 0)
        throw even_coefficient_error("codim2_from_class: even coefficient has eps = 0");
    return codim2_family(n, (mu + 1) / 2);
}

}  // namespace hk
