#ifndef STRONGDIM_SERIALIZE_HPP
#define STRONGDIM_SERIALIZE_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "strongdim/cover.hpp"
#include "strongdim/formulas.hpp"
#include "strongdim/graph6.hpp"
#include "strongdim/harness/conjecture.hpp"
#include "strongdim/harness/verify.hpp"
#include "strongdim/metrics.hpp"
#include "strongdim/products.hpp"

// JSON forms of the library's reports, via nlohmann::json.

namespace strongdim {

using json = nlohmann::json;

inline json to_json_value(const VertexSet& s) { return json(s.ids()); }

inline json to_json_value(const DimReport& r) {
    return {{"value", r.value},
            {"basis", r.basis.ids()},
            {"method", r.method},
            {"elapsed_ms", r.elapsed_ms},
            {"branch_nodes", r.branch_nodes}};
}

inline json to_json_value(const FormulaResult& f) {
    json fired = json::array();
    for (const auto& b : f.fired) fired.push_back({{"case", to_string(b.which)}, {"value", b.value}});
    json j{{"case", to_string(f.which)}, {"lower", f.lower}, {"checks", f.checks}, {"fired", fired}};
    j["upper"] = f.upper ? json(*f.upper) : json(nullptr);
    j["exact"] = f.exact();
    return j;
}

inline json to_json_value(const ProductMap& p) {
    json coords = json::array();
    for (std::size_t id = 0; id < p.graph().order(); ++id) {
        auto [x, a] = p.coords(static_cast<Vertex>(id));
        coords.push_back({x, a});
    }
    json roots = json::array();
    for (std::size_t x = 0; x < p.g_order(); ++x) roots.push_back(p.root(static_cast<Vertex>(x)));
    return {{"graph6", serialize_graph6(p.graph())},
            {"order", p.graph().order()},
            {"size", p.graph().size()},
            {"g_order", p.g_order()},
            {"copy_orders", p.copy_orders()},
            {"roots", roots},
            {"coords", coords}};
}

/// Sidecar for an exported SR graph: dense SR id i is host vertex host[i].
inline json sr_sidecar(const SRGraph& sr) {
    return {{"graph6", serialize_graph6(sr.dense())},
            {"host_order", sr.host_order()},
            {"host", sr.vertices().ids()},
            {"edges", sr.edges()},
            {"perfect_matching", sr_is_perfect_matching(sr)}};
}

inline json to_json_value(const RootContext& c) {
    return {{"root", c.root},
            {"max_distant", c.max_distant.ids()},
            {"isolated", c.isolated.ids()},
            {"partners", c.partners.ids()},
            {"canonical", c.canonical}};
}

// ---- harness reports ----

namespace harness {

inline json to_json_value(const VerifyReport& r) {
    json fired = json::array();
    for (const auto& [c, v] : r.fired) fired.push_back({{"case", c}, {"value", v}});
    json checks = json::array();
    for (const auto& [name, ok] : r.side_checks) checks.push_back({{"check", name}, {"ok", ok}});
    json j{{"theorem", r.theorem},
           {"index", r.index},
           {"seed", r.seed},
           {"descriptor", r.descriptor},
           {"g", r.g6_g},
           {"h", r.g6_h},
           {"root", r.root},
           {"corona", r.corona},
           {"formula_case", r.formula_case},
           {"formula_lower", r.formula_lower},
           {"fired", fired},
           {"solver", r.solver_value},
           {"checks", checks},
           {"pass", r.pass},
           {"elapsed_ms", r.elapsed_ms}};
    j["formula_upper"] = r.formula_upper ? json(*r.formula_upper) : json(nullptr);
    j["oracle"] = r.oracle_value ? json(*r.oracle_value) : json(nullptr);
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

/// Parses one report; `pass` is recomputed from the stored values, never trusted.
inline VerifyReport verify_report_from_json(const json& j) {
    try {
        VerifyReport r;
        r.theorem = j.at("theorem").get<std::string>();
        r.index = j.at("index").get<std::size_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.descriptor = j.at("descriptor").get<std::string>();
        r.g6_g = j.at("g").get<std::string>();
        r.g6_h = j.at("h").get<std::string>();
        r.root = j.at("root").get<Vertex>();
        r.corona = j.at("corona").get<bool>();
        r.formula_case = j.at("formula_case").get<std::string>();
        r.formula_lower = j.at("formula_lower").get<std::int64_t>();
        if (!j.at("formula_upper").is_null()) r.formula_upper = j.at("formula_upper").get<std::int64_t>();
        for (const auto& b : j.at("fired")) r.fired.emplace_back(b.at("case").get<std::string>(), b.at("value").get<std::int64_t>());
        r.solver_value = j.at("solver").get<std::int64_t>();
        if (!j.at("oracle").is_null()) r.oracle_value = j.at("oracle").get<std::int64_t>();
        for (const auto& c : j.at("checks")) r.side_checks.emplace_back(c.at("check").get<std::string>(), c.at("ok").get<bool>());
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
        if (j.contains("error")) r.error = j.at("error").get<std::string>();
        r.pass = recompute_pass(r);
        return r;
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed verify report: ") + e.what(), 0);
    }
}

inline void write_json_lines(std::ostream& os, const std::vector<VerifyReport>& rs) {
    for (const auto& r : rs) os << to_json_value(r).dump() << '\n';
}

inline std::vector<VerifyReport> read_json_lines(std::istream& is) {
    std::vector<VerifyReport> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw parse_error(std::string("bad JSON line: ") + e.what(), e.byte);
        }
        out.push_back(verify_report_from_json(j));
    }
    return out;
}

inline json summary_json(const VerifyRun& run) {
    return {{"summary", true},
            {"theorem", run.theorem},
            {"seed", run.seed},
            {"instances", run.reports.size()},
            {"filtered", run.filtered},
            {"failures", run.failures()}};
}

inline json to_json_value(const ConjectureFinding& f) {
    return {{"sample", f.sample},
            {"graph6", f.g6},
            {"root", f.root},
            {"max_distant", f.max_distant.ids()},
            {"isolated", f.isolated.ids()},
            {"partners", f.partners.ids()}};
}

inline ConjectureFinding conjecture_finding_from_json(const json& j) {
    try {
        ConjectureFinding f;
        f.sample = j.at("sample").get<std::size_t>();
        f.g6 = j.at("graph6").get<std::string>();
        f.root = j.at("root").get<Vertex>();
        const auto n = parse_graph6(f.g6).order();
        f.max_distant = VertexSet::over(n, j.at("max_distant").get<std::vector<Vertex>>());
        f.isolated = VertexSet::over(n, j.at("isolated").get<std::vector<Vertex>>());
        f.partners = VertexSet::over(n, j.at("partners").get<std::vector<Vertex>>());
        return f;
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed conjecture finding: ") + e.what(), 0);
    }
}

inline json summary_json(const ConjectureReport& r) {
    return {{"summary", true},
            {"mode", to_string(r.options.mode)},
            {"seed", r.options.seed},
            {"orders", {r.options.min_order, r.options.max_order}},
            {"samples", r.samples},
            {"filtered_not_matching", r.filtered_not_matching},
            {"filtered_boundary_roots", r.filtered_boundary_roots},
            {"graphs_without_inner_root", r.graphs_without_inner_root},
            {"roots_checked", r.roots_checked},
            {"findings", r.findings.size()}};
}

/// Findings one per line, then the summary line.
inline void write_json_lines(std::ostream& os, const ConjectureReport& r) {
    for (const auto& f : r.findings) os << to_json_value(f).dump() << '\n';
    os << summary_json(r).dump() << '\n';
}

}  // namespace harness

}  // namespace strongdim

#endif
