#include <catch2/catch_amalgamated.hpp>

#include "hk/orbits.hpp"

using namespace hk;

TEST_CASE("fold_residue") {
    REQUIRE(fold_residue(9, 20) == 9);
    REQUIRE(fold_residue(11, 20) == 9);
    REQUIRE(fold_residue(19, 20) == 1);
    REQUIRE(fold_residue(-3, 20) == 3);
    REQUIRE(fold_residue(10, 20) == 10);
    REQUIRE(fold_residue(0, 1) == 0);
    REQUIRE_THROWS_AS(fold_residue(1, 0), domain_error);
}

TEST_CASE("invariants validate their congruence") {
    REQUIRE_NOTHROW(OrbitInvariants(11, 780, 20, 1));
    REQUIRE_NOTHROW(OrbitInvariants(11, 780, 20, 9));
    // residue must be folded and coprime to the divisibility
    REQUIRE_THROWS_AS(OrbitInvariants(11, 780, 20, 11), domain_error);
    REQUIRE_THROWS_AS(OrbitInvariants(11, 780, 20, 6), domain_error);
    // divisibility must divide 2n-2
    REQUIRE_THROWS_AS(OrbitInvariants(11, 780, 7, 1), domain_error);
    // square + residue^2 (2n-2) must vanish mod 2 t^2
    REQUIRE_THROWS_AS(OrbitInvariants(11, 782, 20, 1), domain_error);
    REQUIRE_THROWS_AS(OrbitInvariants(11, 780, 20, 3), domain_error);
}

TEST_CASE("the two degree-780 classes are inequivalent") {
    Polarization first(11, 2, 20, 1);
    Polarization second(11, 4, 20, 9);
    OrbitInvariants i1 = invariants(first);
    OrbitInvariants i2 = invariants(second);
    REQUIRE(i1 == OrbitInvariants(11, 780, 20, 1));
    REQUIRE(i2 == OrbitInvariants(11, 780, 20, 9));
    REQUIRE_FALSE(same_orbit(first, second));
    REQUIRE(same_orbit(first, first));
    // the dual curve classes separate the same way
    REQUIRE_FALSE(same_orbit(dual_curve(first), dual_curve(second)));
    REQUIRE(invariants(dual_curve(second)) == i2);
}

TEST_CASE("folding reaches the canonical residue") {
    // mu = 11 folds to 9 mod 20; the genus keeps the square at 780
    REQUIRE(bb_square(Polarization(11, 5, 20, 11)) == 780);
    REQUIRE(same_orbit(Polarization(11, 5, 20, 11), Polarization(11, 4, 20, 9)));
    REQUIRE(bb_square(Polarization(11, 11, 20, 19)) == 780);
    REQUIRE(same_orbit(Polarization(11, 11, 20, 19), Polarization(11, 2, 20, 1)));
}

TEST_CASE("divisor normal forms") {
    DivisorNormalForm d1 = divisor_normal_form(OrbitInvariants(11, 780, 20, 1));
    REQUIRE(d1 == DivisorNormalForm{11, 2, 20, 1});
    DivisorNormalForm d2 = divisor_normal_form(OrbitInvariants(11, 780, 20, 9));
    REQUIRE(d2 == DivisorNormalForm{11, 4, 20, 9});
    // an orbit of very negative square has no representative with p >= 1
    REQUIRE_THROWS_AS(divisor_normal_form(OrbitInvariants(2, -10, 2, 1)), domain_error);
}

TEST_CASE("curve normal forms") {
    CurveNormalForm c1 = curve_normal_form(Polarization(11, 2, 20, 1));
    REQUIRE(c1 == CurveNormalForm{11, 2, 1, 1, 1, Window::standard});
    CurveNormalForm c2 = curve_normal_form(Polarization(11, 4, 20, 9));
    REQUIRE(c2 == CurveNormalForm{11, 4, 9, 5, 1, Window::standard});
    REQUIRE(curve_square(c2) == Rational(39, 20));
    // the dual class gives the same normal form
    REQUIRE(curve_normal_form(CurveClass(11, 4, 1, 9)) == c2);
    // mu stays within [0, n-1] in the standard window
    REQUIRE(c2.mu <= 11 - 1);
}

TEST_CASE("window shift") {
    CurveNormalForm nf{8, 2, 5, 3, 1, Window::standard};
    CurveNormalForm sh = shift_window(nf);
    REQUIRE(sh == CurveNormalForm{8, 14, 19, 10, 1, Window::shifted});
    REQUIRE_THROWS_AS(shift_window(sh), domain_error);

    CurveNormalForm sh2 = curve_normal_form(Polarization(11, 4, 20, 9), Window::shifted);
    REQUIRE(sh2 == CurveNormalForm{11, 23, 29, 15, 1, Window::shifted});
    REQUIRE(curve_square(sh2) == Rational(39, 20));
}

TEST_CASE("shifting the window preserves the curve square") {
    for (i64 n : {2, 3, 8, 11, 14}) {
        for (i64 mu = 0; mu <= n - 1; ++mu) {
            for (i64 p = 1; p <= 5; ++p) {
                i64 g = (mu + 1) / 2;
                CurveNormalForm nf{n, p, mu, g, 2 * g - mu, Window::standard};
                CurveNormalForm sh = shift_window(nf);
                REQUIRE(curve_square(sh) == curve_square(nf));
                REQUIRE(sh.mu == mu + 2 * n - 2);
                REQUIRE(2 * sh.g - sh.eps == sh.mu);
            }
        }
    }
}

TEST_CASE("realize inverts the invariants") {
    for (i64 n : {2, 3, 5, 11}) {
        i64 two_n_2 = 2 * n - 2;
        for (i64 t = 1; t <= two_n_2; ++t) {
            if (two_n_2 % t != 0) continue;
            for (i64 r = 0; 2 * r <= t; ++r) {
                if (std::gcd(r, t) != 1) continue;
                for (i64 sq = 2; sq <= 200; sq += 2) {
                    if ((sq + r * r * two_n_2) % (2 * t * t) != 0) continue;
                    OrbitInvariants inv(n, sq, t, r);
                    Polarization h = realize(inv);
                    REQUIRE(invariants(h) == inv);
                    REQUIRE(bb_square(h) == sq);
                    REQUIRE(divisibility(h) == t);
                }
            }
        }
    }
}
