// hkorbits: classify polarization orbits on Hilbert schemes of points of K3
// surfaces, enumerate them by degree, print the reference table, and run the
// verification suites. Exit codes: 0 success, 1 failed verification or
// internal inconsistency, 2 invalid input.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hk/json_io.hpp"

namespace {

hk::Window parse_window(const std::string& s) {
    if (s == "standard" || s == "cor2.6") return hk::Window::standard;
    if (s == "shifted" || s == "prop5.9") return hk::Window::shifted;
    throw hk::domain_error("unknown window: " + s);
}

void print_report(const hk::Report& rep, bool quiet) {
    std::cout << "verdict: " << hk::existence_name(rep.verdict);
    if (rep.multiplier) std::cout << " (m = " << *rep.multiplier << ")";
    std::cout << "\n";
    if (quiet) return;
    const hk::OrbitInvariants& inv = rep.inv;
    std::cout << "invariants: n=" << inv.n << " square=" << inv.square << " div=" << inv.div
              << " residue=" << inv.residue << "\n";
    const hk::DivisorNormalForm& d = rep.divisor_nf;
    std::cout << "divisor normal form: " << d.t << "*h - " << d.mu << "*delta, surface genus "
              << d.p << "\n";
    const hk::CurveNormalForm& c = rep.curve_nf;
    std::cout << "curve normal form [" << hk::window_name(c.window) << "]: h - " << c.mu
              << "*r, surface genus " << c.p << " (g=" << c.g << ", eps=" << c.eps << ")\n";
    std::cout << "curve square: " << rep.curve_sq << "\n";
    if (rep.bounds) {
        const hk::MultiplierBounds& mb = *rep.bounds;
        std::cout << "multiplier window (even family): ["
                  << (mb.even_min ? mb.even_min->str() : std::string("-inf")) << ", "
                  << mb.even_max << "]\n";
        std::cout << "multiplier window (odd family):  ["
                  << (mb.odd_min ? mb.odd_min->str() : std::string("-inf")) << ", "
                  << mb.odd_max << "]\n";
    }
    if (rep.decomp_ran) {
        if (rep.decomp.feasible && rep.decomp.witness) {
            const hk::DecompWitness& w = *rep.decomp.witness;
            std::cout << "decomposition: s=" << w.s << ", pairs (d,r):";
            int zeros = 0;
            for (const hk::DecompPair& pr : w.pairs) {
                if (pr.d == 0 && pr.r == 0) {
                    ++zeros;
                    continue;
                }
                std::cout << " (" << pr.d << "," << pr.r << ")";
            }
            if (zeros > 0) std::cout << " + " << zeros << " zero pairs";
            std::cout << "\n";
        } else {
            std::cout << "decomposition: infeasible in window (" << rep.decomp.scanned
                      << " values of s scanned)\n";
        }
    }
    if (rep.coisotropic) {
        const hk::CoisotropicData& cd = *rep.coisotropic;
        std::cout << "coisotropic shift: p=" << cd.p << " g=" << cd.g << " chi=" << cd.chi
                  << " codim=" << cd.codim << " base_dim=" << cd.base_dim << "\n";
    }
    for (const std::string& note : rep.notes) std::cout << "note: " << note << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarization orbits on Hilbert schemes of points of K3 surfaces"};
    app.require_subcommand(1);

    std::string window_str = "standard";
    hk::i64 k_range = 3;
    bool json = false, quiet = false;

    auto add_common = [&](CLI::App* cmd, bool with_window) {
        if (with_window)
            cmd->add_option("--window", window_str,
                            "normal-form window: standard (alias cor2.6) or shifted (alias "
                            "prop5.9)")
                ->check(CLI::IsMember({"standard", "shifted", "cor2.6", "prop5.9"}));
        cmd->add_option("--k-range", k_range,
                        "half-width of the decomposition search window, in periods of 2n-2")
            ->envname("HK_ORBITS_KRANGE")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--json", json, "emit JSON instead of text");
        cmd->add_flag("--quiet", quiet, "suppress everything but the outcome");
    };

    // classify
    hk::i64 n = 0, p = 0, lambda = 0, mu = 0, a = 0, b = 0, square = 0, div = 0, residue = 0;
    CLI::App* cls = app.add_subcommand("classify", "classify one class or one orbit");
    cls->add_option("--n", n, "number of points")->required();
    auto* op = cls->add_option("--p", p, "surface genus (class input)");
    auto* ol = cls->add_option("--lambda", lambda, "coefficient of h (divisor input)");
    auto* om = cls->add_option("--mu", mu, "coefficient of -delta (divisor input)");
    auto* oa = cls->add_option("--a", a, "coefficient of h (curve input)");
    auto* ob = cls->add_option("--b", b, "coefficient of -r (curve input)");
    auto* os = cls->add_option("--square", square, "divisor square (invariants input)");
    auto* od = cls->add_option("--div", div, "divisibility (invariants input)");
    auto* orr = cls->add_option("--residue", residue, "folded residue (invariants input)");
    add_common(cls, true);

    // enumerate
    hk::i64 max_degree = 0;
    CLI::App* enu = app.add_subcommand("enumerate", "enumerate orbits up to a degree bound");
    enu->add_option("--n", n, "number of points")->required();
    enu->add_option("--max-degree", max_degree, "largest divisor square to enumerate")
        ->required();
    add_common(enu, true);

    // table
    CLI::App* tab = app.add_subcommand("table", "print the reference table of minimal n");
    add_common(tab, false);

    // verify
    std::string suite = "all";
    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", suite,
                    "prop52 | small_n | table | n14 | asymptotic | coisotropic | all");
    add_common(ver, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        hk::ClassifyOptions opts{parse_window(window_str), k_range};

        if (cls->parsed()) {
            bool divisor_in = ol->count() || om->count();
            bool curve_in = oa->count() || ob->count();
            bool inv_in = os->count() || od->count() || orr->count();
            if (divisor_in + curve_in + inv_in != 1)
                throw hk::domain_error(
                    "provide exactly one input form: --p/--lambda/--mu, --p/--a/--b, or "
                    "--square/--div/--residue");
            hk::Report rep = [&] {
                if (divisor_in) {
                    if (!op->count() || !ol->count() || !om->count())
                        throw hk::domain_error("divisor input needs --p, --lambda and --mu");
                    return hk::classify(hk::Polarization(n, p, lambda, mu), opts);
                }
                if (curve_in) {
                    if (!op->count() || !oa->count() || !ob->count())
                        throw hk::domain_error("curve input needs --p, --a and --b");
                    return hk::classify(hk::CurveClass(n, p, a, b), opts);
                }
                if (!os->count() || !od->count() || !orr->count())
                    throw hk::domain_error("invariants input needs --square, --div and --residue");
                return hk::classify(hk::OrbitInvariants(n, square, div, residue), opts);
            }();
            if (json)
                std::cout << hk::emit(rep).dump(2) << "\n";
            else
                print_report(rep, quiet);
            return 0;
        }

        if (enu->parsed()) {
            hk::EnumerateResult er = hk::enumerate_orbits(n, max_degree, opts);
            if (json) {
                std::cout << hk::emit(er).dump(2) << "\n";
                return 0;
            }
            if (!quiet) {
                for (const hk::Report& rep : er.orbits) {
                    std::cout << "square=" << rep.inv.square << " div=" << rep.inv.div
                              << " residue=" << rep.inv.residue << " -> "
                              << hk::existence_name(rep.verdict);
                    if (rep.multiplier) std::cout << " (m=" << *rep.multiplier << ")";
                    std::cout << "\n";
                }
            }
            std::cout << "orbits: " << er.orbits.size() << " (" << er.n_primitive
                      << " primitive, " << er.n_multiple << " multiple, " << er.n_no_known
                      << " open)\n";
            std::cout << "component bound: " << er.bound
                      << "; largest obstructed square seen: " << er.max_obstructed_square
                      << "\n";
            return 0;
        }

        if (tab->parsed()) {
            if (json) {
                std::cout << hk::emit(hk::reference_table()).dump(2) << "\n";
                return 0;
            }
            std::cout << "class        p  g  eps  m  minimal n\n";
            for (const hk::TableRow& row : hk::reference_table()) {
                std::ostringstream name;
                name << "h - " << row.mu << "r";
                size_t pad = name.str().size() < 13 ? 13 - name.str().size() : 1;
                std::cout << name.str() << std::string(pad, ' ') << row.p << "  " << row.g
                          << "  " << row.eps << "    " << row.m << "  " << row.n_min << "\n";
            }
            return 0;
        }

        // verify
        std::vector<hk::SuiteResult> results = hk::run_suites(suite);
        bool all_ok = true;
        for (const hk::SuiteResult& sr : results) {
            all_ok = all_ok && sr.passed;
            if (json) continue;
            std::cout << "suite " << sr.name << ": " << (sr.passed ? "passed" : "FAILED")
                      << "\n";
            if (!quiet)
                for (const std::string& line : sr.lines) std::cout << line << "\n";
        }
        if (json) std::cout << hk::emit(results).dump(2) << "\n";
        return all_ok ? 0 : 1;
    } catch (const hk::consistency_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const hk::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const hk::overflow_error& e) {
        std::cerr << "arithmetic overflow: " << e.what() << "\n";
        return 2;
    }
}
