#pragma once

// End-to-end classification: orbit invariants, both normal forms, the
// existence verdict, the decomposition certificate, multiplier data for
// obstructed classes, and the coisotropic shift. Also the orbit enumerator
// and the reference table of minimal parameters.

#include <memory>
#include <string>
#include <vector>

#include "hk/coisotropic.hpp"
#include "hk/constructions.hpp"
#include "hk/existence.hpp"
#include "hk/multiples.hpp"

namespace hk {

enum class Existence { primitive_divisor, multiple_divisor, no_known_divisor };

inline const char* existence_name(Existence e) {
    switch (e) {
        case Existence::primitive_divisor: return "primitive_divisor";
        case Existence::multiple_divisor: return "multiple_divisor";
        case Existence::no_known_divisor: return "no_known_divisor";
    }
    throw domain_error("existence_name: unknown verdict");
}

struct ClassifyOptions {
    Window window = Window::standard;
    i64 k_range = 3;
};

struct Report {
    OrbitInvariants inv;
    DivisorNormalForm divisor_nf;
    CurveNormalForm curve_nf;      // in the requested window
    CurveNormalForm curve_nf_std;  // standard window; all decisions read this
    Rational curve_sq;
    Existence verdict;
    std::optional<i64> multiplier;           // smallest feasible m when multiple_divisor
    std::optional<MultiplierBounds> bounds;  // present when the primitive class is obstructed
    bool decomp_ran = false;
    DecompResult decomp;
    std::optional<CoisotropicData> coisotropic;  // present when obstructed
    std::vector<std::string> notes;
};

inline Report classify(const OrbitInvariants& inv, const ClassifyOptions& opts = {},
                       const DecompOracle* shared_oracle = nullptr) {
    if (inv.square <= 0)
        throw domain_error("classify: need a class of positive square");
    if (shared_oracle != nullptr && shared_oracle->n() != inv.n)
        throw domain_error("classify: shared oracle was built for a different n");
    Report rep{inv,
               divisor_normal_form(inv),
               curve_normal_form(inv, opts.window),
               curve_normal_form(inv, Window::standard),
               Rational(0),
               Existence::primitive_divisor,
               std::nullopt,
               std::nullopt,
               false,
               DecompResult{},
               std::nullopt,
               {}};
    const CurveNormalForm& nf = rep.curve_nf_std;
    rep.curve_sq = curve_square(nf);

    if (has_ruled_divisor(nf)) {
        rep.verdict = Existence::primitive_divisor;
        rep.notes.push_back("ruled divisor exists: p >= g for the canonical curve representative");
    } else {
        // obstructed classes of positive square in the standard window are
        // exactly the find_m preconditions, so no extra guard is needed
        rep.bounds = multiplier_bounds(nf.n, nf.p, nf.g, nf.eps);
        if (auto m = find_m(nf.n, nf.p, nf.g, nf.eps)) {
            rep.verdict = Existence::multiple_divisor;
            rep.multiplier = m;
            rep.notes.push_back("primitive class is obstructed (p < g); multiple m = " +
                                std::to_string(*m) + " carries a ruled divisor");
        } else {
            rep.verdict = Existence::no_known_divisor;
            rep.notes.push_back(
                "no ruled divisor known: the genus test fails and no multiple passes the "
                "window bounds");
        }
        rep.coisotropic = shift_to_coisotropic(nf.n, nf.p, nf.g, nf.eps);
    }

    if (shared_oracle != nullptr || DecompOracle::tractable(nf.n, opts.k_range)) {
        std::unique_ptr<DecompOracle> local;
        const DecompOracle* oracle = shared_oracle;
        if (oracle == nullptr) {
            local = std::make_unique<DecompOracle>(nf.n, opts.k_range);
            oracle = local.get();
        }
        rep.decomp = oracle->decide(rep.curve_sq, nf.mu, opts.window);
        rep.decomp_ran = true;
        bool expect = rep.verdict == Existence::primitive_divisor;
        if (rep.decomp.feasible != expect)
            throw consistency_error("classify: decomposition oracle disagrees with genus test");
        if (!rep.decomp.feasible)
            rep.notes.push_back("decomposition search exhausted |s - s0| <= " +
                                std::to_string(oracle->k_range()) +
                                "*(2n-2) without a certificate");
    } else {
        rep.notes.push_back("decomposition search skipped: table too large for this n");
    }
    rep.notes.push_back("orbit comparisons by (square, divisibility, folded residue) are "
                        "complete for primitive classes");
    return rep;
}

inline Report classify(const Polarization& h, const ClassifyOptions& opts = {},
                       const DecompOracle* shared_oracle = nullptr) {
    return classify(invariants(h), opts, shared_oracle);
}

inline Report classify(const CurveClass& c, const ClassifyOptions& opts = {},
                       const DecompOracle* shared_oracle = nullptr) {
    return classify(invariants(c), opts, shared_oracle);
}

struct EnumerateResult {
    i64 n = 0;
    i64 max_degree = 0;
    std::vector<Report> orbits;  // ascending by (square, divisibility, residue)
    i64 n_primitive = 0;
    i64 n_multiple = 0;
    i64 n_no_known = 0;
    i64 bound = 0;                    // component_bound(n)
    i64 max_obstructed_square = -1;  // largest obstructed square seen, -1 if none
};

// all orbits of primitive classes with positive square up to max_degree
inline EnumerateResult enumerate_orbits(i64 n, i64 max_degree, const ClassifyOptions& opts = {}) {
    if (n < 2) throw domain_error("enumerate_orbits: need n >= 2");
    if (max_degree < 2) throw domain_error("enumerate_orbits: need max_degree >= 2");
    EnumerateResult out;
    out.n = n;
    out.max_degree = max_degree;
    out.bound = component_bound(n);

    std::unique_ptr<DecompOracle> oracle;
    if (DecompOracle::tractable(n, opts.k_range))
        oracle = std::make_unique<DecompOracle>(n, opts.k_range);

    i64 two_n_2 = 2 * n - 2;
    for (i64 sq = 2; sq <= max_degree; sq += 2) {
        for (i64 t = 1; t <= two_n_2; ++t) {
            if (two_n_2 % t != 0) continue;
            for (i64 r = 0; 2 * r <= t; ++r) {
                if (gcd64(r, t) != 1) continue;
                i64 rsq = mul64(mul64(r, r), two_n_2);
                if (mod_norm(add64(sq, rsq), mul64(2, mul64(t, t))) != 0) continue;
                Report rep = classify(OrbitInvariants(n, sq, t, r), opts, oracle.get());
                switch (rep.verdict) {
                    case Existence::primitive_divisor: ++out.n_primitive; break;
                    case Existence::multiple_divisor: ++out.n_multiple; break;
                    case Existence::no_known_divisor: ++out.n_no_known; break;
                }
                if (rep.verdict != Existence::primitive_divisor)
                    out.max_obstructed_square = std::max(out.max_obstructed_square, sq);
                out.orbits.push_back(std::move(rep));
            }
        }
    }
    return out;
}

// reference list of obstructed classes h - mu*r with the smallest n at which
// some multiple moves, and that multiple
struct TableRow {
    i64 mu;
    i64 p;
    i64 g;
    i64 eps;
    i64 m;
    i64 n_min;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline std::vector<TableRow> reference_table() {
    return {
        {5, 2, 3, 1, 2, 8},  {7, 3, 4, 1, 2, 8},  {8, 3, 4, 0, 2, 10}, {9, 4, 5, 1, 2, 10},
        {10, 4, 5, 0, 2, 11}, {6, 2, 3, 0, 3, 11}, {9, 3, 5, 1, 2, 12}, {11, 4, 6, 1, 2, 12},
        {11, 5, 6, 1, 2, 12}, {12, 5, 6, 0, 2, 13},
    };
}

// recompute a table row from scratch given the class coefficient and surface
// genus
inline TableRow computed_row(i64 mu, i64 p) {
    i64 g = (mu + 1) / 2;
    i64 eps = 2 * g - mu;
    MinimalN found = minimal_n(p, g, eps);
    return TableRow{mu, p, g, eps, found.m, found.n};
}

}  // namespace hk
