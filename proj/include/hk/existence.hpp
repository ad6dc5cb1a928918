#pragma once

// Existence decisions for uniruled members of a linear system. The primitive
// criterion compares the surface genus p against the floor genus g of the
// canonical curve representative h - mu*r (mu = 2g - eps): a ruled divisor
// exists in the orbit iff p >= g. Independently, the decomposition oracle
// searches for n-1 pairs (d_i, r_i) with 4 d_i >= r_i^2 realizing the curve
// square as -2 + sum 2 d_i - s^2/(2n-2) with s = sum r_i in the residue
// class of the class coefficient mod 2n-2; the two tests agree on every
// class but are computed along entirely different routes.

#include <algorithm>
#include <optional>
#include <vector>

#include "hk/orbits.hpp"

namespace hk {

struct integrality_error : domain_error {
    explicit integrality_error(const std::string& what) : domain_error(what) {}
};

inline bool has_ruled_divisor(const CurveNormalForm& nf) {
    if (nf.window != Window::standard)
        throw domain_error("has_ruled_divisor: decision is made on the standard window");
    return nf.p >= nf.g;
}

// curve squares at least n-1 always pass the genus test: 2p-2 >= n-1 +
// mu^2/(2n-2) forces 2p >= mu + eps because the gap n + mu^2/(2n-2) - mu - eps
// has negative discriminant as a quadratic in mu
inline bool sufficient_square(i64 n, const Rational& curve_sq) {
    return curve_sq >= Rational(n - 1);
}

// divisor-square threshold implied by sufficient_square under the worst
// divisibility t = 2n-2: every orbit with square >= 4(n-1)^3 passes
inline i64 component_bound(i64 n) {
    if (n < 2) throw domain_error("component_bound: need n >= 2");
    i64 m = n - 1;
    return mul64(4, mul64(m, mul64(m, m)));
}

// true when some obstructed in-window class (g > p >= 1, mu <= n) has a
// strictly positive curve square; no such class exists for n <= 7
inline bool positive_square_exception_exists(i64 n) {
    if (n < 2) throw domain_error("positive_square_exception_exists: need n >= 2");
    for (i64 mu = 1; mu <= n; ++mu) {
        i64 g = (mu + 1) / 2;
        for (i64 p = 1; p < g; ++p) {
            Rational sq = Rational(2 * p - 2) - Rational(mu * mu, 2 * n - 2);
            if (sq.sign() > 0) return true;
        }
    }
    return false;
}

struct DecompPair {
    i64 d;
    i64 r;
};

struct DecompWitness {
    i64 s;
    std::vector<DecompPair> pairs;
};

struct DecompResult {
    bool feasible = false;
    std::optional<DecompWitness> witness;
    i64 scanned = 0;  // candidate values of s examined
};

// Feasibility oracle for one fixed n, reusable across classes. The search
// space for fixed s collapses to a partition question: each pair costs at
// least ceil(r^2/4) in d, so s is realizable within budget D(s) iff the
// cheapest way to write s as at most n-1 nonnegative parts r_i, paying
// ceil(r_i^2/4) per part, stays within D(s). Mixed-sign part systems never
// beat same-sign ones (merging a positive and a negative part into their sum
// frees a slot and cannot raise the cost, by subadditivity of the ceilings),
// so only nonnegative parts are tabulated.
class DecompOracle {
  public:
    // the table costs about (n-1) * max_s^2 / 2 steps to fill; refuse
    // combinations that would take more than a few seconds
    static bool tractable(i64 n, i64 k_range) {
        if (n < 2 || k_range < 1) return false;
        i128 w = add128(mul128(3, n - 1), add128(mul128(k_range, 2 * n - 2), 1));
        return mul128(n - 1, mul128(w, w)) <= 8000000000LL;
    }

    explicit DecompOracle(i64 n, i64 k_range = 3) : n_(n), k_(k_range) {
        if (n < 2) throw domain_error("DecompOracle: need n >= 2");
        if (k_range < 1) throw domain_error("DecompOracle: need k_range >= 1");
        if (!tractable(n, k_range))
            throw domain_error("DecompOracle: table too large for this n and k_range");
        i64 two_n_2 = 2 * n - 2;
        // largest s any window can reach: shifted fold <= 3n-3, plus k periods
        max_s_ = narrow64(add128(mul128(3, n - 1), mul128(k_, two_n_2)));
        build_table();
    }

    i64 n() const { return n_; }
    i64 k_range() const { return k_; }

    // cheapest total ceil(r^2/4) over writing s as at most n-1 nonnegative
    // parts; INT64_MAX when s is out of tabulated range
    i64 min_cost(i64 s) const {
        if (s < 0) s = -s;
        if (s > max_s_) return INT64_MAX;
        return cost_.back()[static_cast<size_t>(s)];
    }

    DecompResult decide(const Rational& curve_sq, i64 disc,
                        Window window = Window::standard) const {
        i64 two_n_2 = 2 * n_ - 2;
        i64 s0 = fold_residue(disc, two_n_2);
        if (window == Window::shifted) s0 += two_n_2;

        DecompResult res;
        for (i64 s : window_candidates(s0)) {
            ++res.scanned;
            Rational budget = (curve_sq + 2 + Rational(mul64(s, s), two_n_2)) / 2;
            if (!budget.is_integer())
                throw integrality_error("decide: budget (square + 2 + s^2/(2n-2))/2 is not an integer");
            i64 D = budget.as_integer();
            if (D < 0) continue;
            if (min_cost(s) <= D) {
                res.feasible = true;
                res.witness = build_witness(s, D, curve_sq, disc);
                return res;
            }
        }
        return res;
    }

  private:
    i64 n_, k_, max_s_;
    std::vector<std::vector<i64>> cost_;  // cost_[k][u]: u as at most k parts

    static i64 pair_cost(i64 r) { return (r * r + 3) / 4; }  // ceil(r^2/4)

    void build_table() {
        size_t parts = static_cast<size_t>(n_ - 1);
        size_t width = static_cast<size_t>(max_s_) + 1;
        cost_.assign(parts + 1, std::vector<i64>(width, INT64_MAX));
        cost_[0][0] = 0;
        for (size_t k = 1; k <= parts; ++k) {
            for (size_t u = 0; u < width; ++u) {
                i64 best = INT64_MAX;
                for (size_t r = 0; r <= u; ++r) {
                    i64 prev = cost_[k - 1][u - r];
                    if (prev == INT64_MAX) continue;
                    best = std::min(best, prev + pair_cost(static_cast<i64>(r)));
                }
                cost_[k][u] = best;
            }
        }
    }

    // values of s >= 0 in the residue class +-disc mod 2n-2 with
    // |s - s0| <= k*(2n-2), ordered by distance from s0 and then by value,
    // so a reported witness prefers the window center
    std::vector<i64> window_candidates(i64 s0) const {
        i64 two_n_2 = 2 * n_ - 2;
        i64 lo = s0 - k_ * two_n_2;
        i64 hi = s0 + k_ * two_n_2;
        std::vector<i64> out;
        i64 base = mod_norm(s0, two_n_2);
        for (i64 start : {base, two_n_2 - base}) {
            for (i64 s = mod_norm(start, two_n_2); s <= hi; s += two_n_2) {
                if (s < lo || s < 0) continue;
                out.push_back(s);
            }
        }
        std::sort(out.begin(), out.end(), [&](i64 x, i64 y) {
            i64 dx = x > s0 ? x - s0 : s0 - x;
            i64 dy = y > s0 ? y - s0 : s0 - y;
            return dx != dy ? dx < dy : x < y;
        });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    DecompWitness build_witness(i64 s, i64 D, const Rational& curve_sq, i64 disc) const {
        // backtrack through the table, one part per level
        DecompWitness w;
        w.s = s;
        size_t parts = static_cast<size_t>(n_ - 1);
        i64 u = s;
        for (size_t k = parts; k >= 1; --k) {
            i64 target = cost_[k][static_cast<size_t>(u)];
            for (i64 r = 0; r <= u; ++r) {
                i64 prev = cost_[k - 1][static_cast<size_t>(u - r)];
                if (prev != INT64_MAX && prev + pair_cost(r) == target) {
                    w.pairs.push_back(DecompPair{pair_cost(r), r});
                    u -= r;
                    break;
                }
            }
        }
        if (u != 0) throw consistency_error("build_witness: backtrack failed to exhaust s");
        // park the unused budget on the first pair; 4d >= r^2 only improves
        i64 used = 0;
        for (const auto& pr : w.pairs) used = add64(used, pr.d);
        w.pairs.front().d = add64(w.pairs.front().d, sub64(D, used));
        verify_witness(w, curve_sq, disc);
        return w;
    }

    void verify_witness(const DecompWitness& w, const Rational& curve_sq, i64 disc) const {
        i64 two_n_2 = 2 * n_ - 2;
        if (w.pairs.size() != static_cast<size_t>(n_ - 1))
            throw consistency_error("verify_witness: wrong number of pairs");
        i64 s = 0;
        Rational total(-2);
        for (const auto& pr : w.pairs) {
            if (pr.d < 0 || mul64(4, pr.d) < mul64(pr.r, pr.r))
                throw consistency_error("verify_witness: pair violates 4d >= r^2");
            s = add64(s, pr.r);
            total = total + Rational(mul64(2, pr.d));
        }
        if (s != w.s) throw consistency_error("verify_witness: parts do not sum to s");
        if (mod_norm(sub64(s, disc), two_n_2) != 0 && mod_norm(add64(s, disc), two_n_2) != 0)
            throw consistency_error("verify_witness: s not congruent to +-disc mod 2n-2");
        total = total - Rational(mul64(s, s), two_n_2);
        if (total != curve_sq)
            throw consistency_error("verify_witness: pairs do not reproduce the square");
    }
};

// convenience wrapper for one-off decisions
inline DecompResult decompose(const CurveNormalForm& nf, i64 k_range = 3) {
    DecompOracle oracle(nf.n, k_range);
    return oracle.decide(curve_square(nf), nf.mu, nf.window);
}

}  // namespace hk
