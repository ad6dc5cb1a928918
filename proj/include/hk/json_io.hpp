#pragma once

// JSON serialization for every public structure. Keys are snake_case;
// rationals go out as {"num","den"} and interval endpoints as {"a","b","c"}
// meaning (a + sqrt(b)) / c. nlohmann::json keeps object keys sorted, so
// dumps are deterministic. The value-like types also parse back, and parsing
// re-runs the constructors, so malformed data is rejected the same way as
// malformed input.

#include <json.hpp>

#include "hk/classify.hpp"
#include "hk/verify.hpp"

namespace hk {

inline void to_json(nlohmann::json& j, const Rational& r) {
    j = nlohmann::json{{"num", r.num()}, {"den", r.den()}};
}

inline void from_json(const nlohmann::json& j, Rational& r) {
    r = Rational(j.at("num").get<i64>(), j.at("den").get<i64>());
}

inline void to_json(nlohmann::json& j, const MBound& m) {
    j = nlohmann::json{{"a", m.a()}, {"b", m.b()}, {"c", m.c()}};
}

inline void from_json(const nlohmann::json& j, MBound& m) {
    m = MBound(j.at("a").get<i64>(), j.at("b").get<i64>(), j.at("c").get<i64>());
}

inline void to_json(nlohmann::json& j, const OrbitInvariants& inv) {
    j = nlohmann::json{
        {"n", inv.n}, {"square", inv.square}, {"div", inv.div}, {"residue", inv.residue}};
}

inline void from_json(const nlohmann::json& j, OrbitInvariants& inv) {
    inv = OrbitInvariants(j.at("n").get<i64>(), j.at("square").get<i64>(),
                          j.at("div").get<i64>(), j.at("residue").get<i64>());
}

inline void to_json(nlohmann::json& j, const DivisorNormalForm& nf) {
    j = nlohmann::json{{"n", nf.n}, {"p", nf.p}, {"t", nf.t}, {"mu", nf.mu}};
}

inline void from_json(const nlohmann::json& j, DivisorNormalForm& nf) {
    nf = DivisorNormalForm{j.at("n").get<i64>(), j.at("p").get<i64>(), j.at("t").get<i64>(),
                           j.at("mu").get<i64>()};
}

inline const char* window_name(Window w) {
    return w == Window::standard ? "standard" : "shifted";
}

inline Window window_from_name(const std::string& s) {
    if (s == "standard") return Window::standard;
    if (s == "shifted") return Window::shifted;
    throw domain_error("window_from_name: unknown window: " + s);
}

inline void to_json(nlohmann::json& j, const CurveNormalForm& nf) {
    j = nlohmann::json{{"n", nf.n},     {"p", nf.p},     {"mu", nf.mu},
                       {"g", nf.g},     {"eps", nf.eps}, {"window", window_name(nf.window)}};
}

inline void from_json(const nlohmann::json& j, CurveNormalForm& nf) {
    nf = CurveNormalForm{j.at("n").get<i64>(),   j.at("p").get<i64>(), j.at("mu").get<i64>(),
                         j.at("g").get<i64>(),   j.at("eps").get<i64>(),
                         window_from_name(j.at("window").get<std::string>())};
}

inline void to_json(nlohmann::json& j, const GlueVector& gv) {
    j = nlohmann::json{{"n", gv.n},
                       {"square", gv.square},
                       {"order", gv.order},
                       {"comp_deg", gv.comp_deg},
                       {"comp_exc", gv.comp_exc}};
}

inline void to_json(nlohmann::json& j, const MukaiTriple& mt) {
    j = nlohmann::json{{"rank", mt.rank}, {"ell", mt.ell}, {"s", mt.s}};
}

inline void to_json(nlohmann::json& j, const MultiplierBounds& mb) {
    j = nlohmann::json{{"even_max", mb.even_max}, {"odd_max", mb.odd_max}};
    j["even_min"] = mb.even_min ? nlohmann::json(*mb.even_min) : nlohmann::json(nullptr);
    j["odd_min"] = mb.odd_min ? nlohmann::json(*mb.odd_min) : nlohmann::json(nullptr);
}

inline void to_json(nlohmann::json& j, const DecompPair& pr) {
    j = nlohmann::json{{"d", pr.d}, {"r", pr.r}};
}

inline void to_json(nlohmann::json& j, const DecompWitness& w) {
    j = nlohmann::json{{"s", w.s}, {"pairs", w.pairs}};
}

inline void to_json(nlohmann::json& j, const DecompResult& dr) {
    j = nlohmann::json{{"feasible", dr.feasible}, {"scanned", dr.scanned}};
    j["witness"] = dr.witness ? nlohmann::json(*dr.witness) : nlohmann::json(nullptr);
}

inline void to_json(nlohmann::json& j, const CoisotropicData& cd) {
    j = nlohmann::json{{"n", cd.n},           {"p", cd.p},
                       {"g", cd.g},           {"chi", cd.chi},
                       {"applicable", cd.applicable}, {"codim", cd.codim},
                       {"base_dim", cd.base_dim}};
}

inline void to_json(nlohmann::json& j, const TableRow& row) {
    j = nlohmann::json{{"mu", row.mu}, {"p", row.p},         {"g", row.g},
                       {"eps", row.eps}, {"m", row.m}, {"n_min", row.n_min}};
}

inline void from_json(const nlohmann::json& j, TableRow& row) {
    row = TableRow{j.at("mu").get<i64>(), j.at("p").get<i64>(), j.at("g").get<i64>(),
                   j.at("eps").get<i64>(), j.at("m").get<i64>(), j.at("n_min").get<i64>()};
}

inline void to_json(nlohmann::json& j, const Report& rep) {
    j = nlohmann::json{{"invariants", rep.inv},
                       {"divisor_normal_form", rep.divisor_nf},
                       {"curve_normal_form", rep.curve_nf},
                       {"curve_normal_form_standard", rep.curve_nf_std},
                       {"curve_square", rep.curve_sq},
                       {"verdict", existence_name(rep.verdict)},
                       {"decomp_ran", rep.decomp_ran},
                       {"decomp", rep.decomp},
                       {"notes", rep.notes}};
    j["multiplier"] = rep.multiplier ? nlohmann::json(*rep.multiplier) : nlohmann::json(nullptr);
    j["bounds"] = rep.bounds ? nlohmann::json(*rep.bounds) : nlohmann::json(nullptr);
    j["coisotropic"] =
        rep.coisotropic ? nlohmann::json(*rep.coisotropic) : nlohmann::json(nullptr);
}

inline void to_json(nlohmann::json& j, const EnumerateResult& er) {
    j = nlohmann::json{{"n", er.n},
                       {"max_degree", er.max_degree},
                       {"orbits", er.orbits},
                       {"n_primitive", er.n_primitive},
                       {"n_multiple", er.n_multiple},
                       {"n_no_known", er.n_no_known},
                       {"bound", er.bound},
                       {"max_obstructed_square", er.max_obstructed_square}};
}

inline void to_json(nlohmann::json& j, const SuiteResult& sr) {
    j = nlohmann::json{{"name", sr.name}, {"passed", sr.passed}, {"lines", sr.lines}};
}

constexpr int schema_version = 1;

// top-level emitter: wraps a payload with the schema version
template <class T>
nlohmann::json emit(const T& payload) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["payload"] = payload;
    return j;
}

}  // namespace hk
