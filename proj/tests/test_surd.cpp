#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include "hk/surd.hpp"

using namespace hk;
using boost::multiprecision::cpp_int;

namespace {

// independent sign oracle for (a + sqrt(b))/c - p/q via scaled integer
// square roots; exact zeros are decided by perfect-square checks and
// anything else is far from zero by algebraic separation
int oracle_vs_rational(i64 a, i64 b, i64 c, i64 p, i64 q) {
    cpp_int X = cpp_int(q) * a - cpp_int(p) * c;
    cpp_int S = cpp_int(q) * q * b;
    if (X <= 0 && X * X == S) return 0;
    cpp_int scale = cpp_int(1) << 128;
    cpp_int W = X * scale + sqrt(cpp_int(S * scale * scale));
    REQUIRE((W > 4 || W < -4));
    return W > 0 ? 1 : -1;
}

int oracle_vs_mbound(i64 a1, i64 b1, i64 c1, i64 a2, i64 b2, i64 c2) {
    cpp_int X = cpp_int(a1) * c2 - cpp_int(a2) * c1;
    cpp_int P = cpp_int(b1) * c2 * c2;
    cpp_int Q = cpp_int(b2) * c1 * c1;
    cpp_int rp = sqrt(P), rq = sqrt(Q);
    if (P == Q && X == 0) return 0;
    if (rp * rp == P && rq * rq == Q && X + rp - rq == 0) return 0;
    cpp_int scale = cpp_int(1) << 128;
    cpp_int W = X * scale + sqrt(cpp_int(P * scale * scale)) - sqrt(cpp_int(Q * scale * scale));
    REQUIRE((W > 8 || W < -8));
    return W > 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("construction guards") {
    REQUIRE_THROWS_AS(MBound(1, -1, 2), domain_error);
    REQUIRE_THROWS_AS(MBound(1, 4, 0), domain_error);
    REQUIRE_THROWS_AS(MBound(1, 4, -2), domain_error);
}

TEST_CASE("exact ties against rationals") {
    REQUIRE(MBound(5, 9, 4) == Rational(2));  // (5 + 3) / 4
    REQUIRE(MBound(2, 0, 6) == Rational(1, 3));
    REQUIRE(MBound(-7, 4, 2) == Rational(-5, 2));
    REQUIRE_FALSE(MBound(5, 8, 4) == Rational(2));
}

TEST_CASE("strict comparisons against rationals") {
    MBound even_min(10, 68, 8);  // the n=14 lower endpoint, about 2.2808
    REQUIRE(even_min > Rational(2));
    REQUIRE(even_min < Rational(3));
    REQUIRE(even_min < Rational(23, 10));
    REQUIRE(even_min > Rational(22, 10));
    REQUIRE(Rational(2) < even_min);
    REQUIRE(Rational(3) > even_min);
}

TEST_CASE("comparisons between surds") {
    REQUIRE(MBound(10, 68, 8) < MBound(10, 84, 8));
    REQUIRE(MBound(10, 84, 8) > MBound(10, 68, 8));
    REQUIRE(MBound(2, 9, 1).compare(MBound(0, 25, 1)) == 0);   // 2 + 3 = 5
    REQUIRE(MBound(-1, 9, 1).compare(MBound(0, 4, 1)) == 0);   // -1 + 3 = 2
    REQUIRE(MBound(1, 2, 1).compare(MBound(0, 6, 1)) == -1);   // 2.414 < 2.449
}

TEST_CASE("small-operand comparison regression") {
    // this exact pair once threw a spurious overflow when the checked
    // multiply was compiled with gcc's __int128 overflow builtin at -O3
    REQUIRE(MBound(51, 503, 43).compare(MBound(-428, 985, 36)) == 1);
    REQUIRE(MBound(-428, 985, 36).compare(MBound(51, 503, 43)) == -1);
}

TEST_CASE("display forms") {
    REQUIRE(MBound(10, 68, 8).str() == "(10+sqrt(68))/8");
    REQUIRE(MBound(4, 0, 2).str() == "2");
    REQUIRE(std::abs(MBound(10, 68, 8).approx() - 2.28078) < 1e-4);
}

TEST_CASE("random comparisons agree with a big-integer oracle") {
    std::mt19937_64 rng(20260819);
    std::uniform_int_distribution<i64> da(-999, 999);
    std::uniform_int_distribution<i64> db(0, 999);
    std::uniform_int_distribution<i64> dc(1, 99);
    std::uniform_int_distribution<i64> sq(0, 40);
    for (int i = 0; i < 10000; ++i) {
        i64 a = da(rng), c = dc(rng);
        // mix perfect squares in so the tie paths get exercised
        i64 b = i % 3 == 0 ? sq(rng) * sq(rng) : db(rng);
        MBound x(a, b, c);
        i64 p = da(rng), q = dc(rng);
        REQUIRE(x.compare(Rational(p, q)) == oracle_vs_rational(a, b, c, p, q));
        i64 a2 = da(rng), c2 = dc(rng);
        i64 b2 = i % 5 == 0 ? sq(rng) * sq(rng) : db(rng);
        REQUIRE(x.compare(MBound(a2, b2, c2)) == oracle_vs_mbound(a, b, c, a2, b2, c2));
    }
}
