#ifndef STRONGDIM_TOOLS_CLI_APP_HPP
#define STRONGDIM_TOOLS_CLI_APP_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strongdim/serialize.hpp"
#include "strongdim/strongdim.hpp"

namespace strongdim::cli {

enum Exit : int { ok = 0, check_failed = 1, usage = 2 };

/// Everything the parsed command line selects.
struct CliConfig {
    std::string format = "json";
    std::uint64_t budget = 0;  ///< 0: environment or default
    std::string graph;         ///< positional graph6 for dims/srg/boundary
    std::string g, h;
    Vertex root = 0;
    bool corona = false;
    std::size_t t = 5, p = 1, r = 1, n = 2;
    std::string theorem;
    std::string family_root = "y";
    std::uint64_t seed = 1;
    std::string grid;
    std::size_t workers = 1;
    std::string orders = "3..9";
    std::size_t samples = 10000;
    std::string mode = "matching";
    std::string report;
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

namespace detail {

inline std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t k = 0;
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    return s.substr(k);
}

/// graph6 given inline, as a file path, or "-" for stdin (first non-empty line).
inline Graph read_graph(const std::string& arg, std::istream& in) {
    std::string text;
    if (arg == "-") {
        std::getline(in, text);
    } else if (std::filesystem::is_regular_file(arg)) {
        std::ifstream f(arg);
        std::getline(f, text);
    } else {
        text = arg;
    }
    return parse_graph6(trim(text));
}

inline std::string join(const VertexSet& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    return os.str();
}

inline std::string range_text(const FormulaResult& f) {
    if (f.exact()) return std::to_string(f.lower);
    return "[" + std::to_string(f.lower) + ", " + (f.upper ? std::to_string(*f.upper) : std::string("inf")) + "]";
}

inline void require_format(const std::string& fmt, std::initializer_list<const char*> allowed, const char* cmd) {
    for (auto a : allowed)
        if (fmt == a) return;
    std::string list;
    for (auto a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw invalid_input(std::string(cmd) + " supports formats: " + list);
}

inline std::pair<std::size_t, std::size_t> parse_orders(const std::string& s) {
    auto g = harness::GridSpec::parse("o=" + s);
    auto [a, b] = g.range("o", 0, 0);
    if (a < 2) throw invalid_input("orders must be >= 2");
    return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

// ---- commands ----

inline int cmd_dims(const CliConfig& c, const SolveOptions& so, Streams io) {
    require_format(c.format, {"json", "text"}, "dims");
    auto g = read_graph(c.graph, io.in);
    auto rep = strong_dimension(g, so);
    if (c.format == "json") {
        io.out << to_json_value(rep).dump() << '\n';
    } else {
        io.out << "dim_s: " << rep.value << "\nbasis: " << join(rep.basis) << "\nmethod: " << rep.method
               << "\nbranch_nodes: " << rep.branch_nodes << "\nelapsed_ms: " << rep.elapsed_ms << '\n';
    }
    return ok;
}

inline int cmd_srg(const CliConfig& c, Streams io) {
    require_format(c.format, {"json", "text", "dot", "graph6"}, "srg");
    auto g = read_graph(c.graph, io.in);
    auto sr = strong_resolving_graph(bfs_distances(g), g);
    if (c.format == "json") {
        io.out << sr_sidecar(sr).dump() << '\n';
    } else if (c.format == "graph6") {
        io.out << serialize_graph6(sr.dense()) << '\n';
    } else if (c.format == "dot") {
        // dense ids, labelled with the host vertex they stand for
        std::vector<std::string> labels;
        for (Vertex v : sr.vertices()) labels.push_back(g.label(v));
        auto dense = sr.dense();
        Graph shown(dense.order(), dense.edges(), std::move(labels));
        io.out << serialize_dot(shown);
    } else {
        io.out << "vertices: " << join(sr.vertices()) << "\nedges:";
        for (auto [u, v] : sr.edges()) io.out << ' ' << u << '-' << v;
        io.out << "\nperfect_matching: " << (sr_is_perfect_matching(sr) ? "yes" : "no") << '\n';
    }
    return ok;
}

inline int cmd_boundary(const CliConfig& c, Streams io) {
    require_format(c.format, {"json", "text", "dot"}, "boundary");
    auto g = read_graph(c.graph, io.in);
    auto bd = boundary(bfs_distances(g), g);
    auto sg = simplicial(g);
    if (c.format == "json") {
        io.out << json{{"boundary", bd.ids()}, {"simplicial", sg.ids()}}.dump() << '\n';
    } else if (c.format == "dot") {
        io.out << serialize_dot(g, bd);
    } else {
        io.out << "boundary: " << join(bd) << "\nsimplicial: " << join(sg) << '\n';
    }
    return ok;
}

inline int cmd_product(const CliConfig& c, Streams io) {
    require_format(c.format, {"json", "text", "dot", "graph6"}, "product");
    auto g = read_graph(c.g, io.in);
    auto h = read_graph(c.h, io.in);
    auto prod = c.corona ? corona_product(g, h) : rooted_product(g, h, c.root);
    if (c.format == "json") {
        auto j = to_json_value(prod);
        j["kind"] = c.corona ? "corona" : "rooted";
        if (!c.corona) j["root"] = c.root;
        io.out << j.dump() << '\n';
    } else if (c.format == "graph6") {
        io.out << serialize_graph6(prod.graph()) << '\n';
    } else if (c.format == "dot") {
        io.out << serialize_dot(prod.graph());
    } else {
        io.out << "graph6: " << serialize_graph6(prod.graph()) << "\norder: " << prod.graph().order()
               << "\nsize: " << prod.graph().size() << "\ncoords:";
        for (std::size_t id = 0; id < prod.graph().order(); ++id) {
            auto [x, a] = prod.coords(static_cast<Vertex>(id));
            io.out << ' ' << id << "=(" << x << ',' << a << ')';
        }
        io.out << '\n';
    }
    return ok;
}

inline int cmd_family(const CliConfig& c, Streams io) {
    require_format(c.format, {"json", "text", "dot", "graph6"}, "family");
    FamilyFSpec spec{c.t, c.p, c.r};
    auto fam = family_F(spec);
    if (c.format == "graph6") {
        io.out << serialize_graph6(fam.graph) << '\n';
    } else if (c.format == "dot") {
        io.out << serialize_dot(fam.graph);
    } else if (c.format == "json") {
        const auto& m = fam.marks;
        io.out << json{{"t", spec.t},
                       {"p", spec.p},
                       {"r", spec.r},
                       {"graph6", serialize_graph6(fam.graph)},
                       {"labels", fam.graph.labels()},
                       {"marks", {{"y", m.y}, {"x_t", m.x_t}, {"x_1", m.x_1}, {"x_t_minus_1", m.x_t_minus_1}}},
                       {"strong_dimension", spec.strong_dimension()}}
                      .dump()
               << '\n';
    } else {
        io.out << "graph6: " << serialize_graph6(fam.graph) << "\norder: " << fam.graph.order()
               << "\ny: " << fam.marks.y << "\nx_t: " << fam.marks.x_t
               << "\nstrong_dimension: " << spec.strong_dimension() << '\n';
    }
    return ok;
}

inline int cmd_formula(const CliConfig& c, const SolveOptions& so, Streams io) {
    require_format(c.format, {"json", "text"}, "formula");
    auto G = [&] { return read_graph(c.g, io.in); };
    auto H = [&] { return read_graph(c.h, io.in); };
    FormulaResult f;
    const auto& id = c.theorem;
    if (id == "cycle") f = dim_cycle_rooted(c.r, c.t);
    else if (id == "antipodal") f = dim_antipodal(c.n, H());
    else if (id == "simplicial") f = dim_simplicial_boundary(G(), H(), c.root);
    else if (id == "matching_sr") f = dim_matching_sr(G(), H(), c.root);
    else if (id == "corona") f = dim_corona(c.r, H(), so);
    else if (id == "universal") f = dim_universal_root(G(), H(), c.root, so);
    else if (id == "bounds") f = bounds_general(G(), H(), c.root, so);
    else if (id == "pendant") f = bound_pendant(c.n, H(), c.root, so);
    else if (id == "family") {
        FamilyFSpec spec{c.t, c.p, c.r};
        if (c.family_root == "none") f = family_F_strong_dimension(spec);
        else if (c.family_root == "y") f = family_F_product_value(c.n, spec, FamilyRoot::y);
        else if (c.family_root == "x_t") f = family_F_product_value(c.n, spec, FamilyRoot::x_t);
        else throw invalid_input("--family-root must be y, x_t or none");
    } else {
        throw invalid_input("unknown formula '" + id + "'");
    }
    if (c.format == "json") {
        io.out << to_json_value(f).dump() << '\n';
    } else {
        io.out << "case: " << to_string(f.which) << "\nvalue: " << range_text(f) << '\n';
        for (const auto& b : f.fired) io.out << "fired: " << to_string(b.which) << " = " << b.value << '\n';
        for (const auto& ch : f.checks) io.out << "check: " << ch << '\n';
    }
    return ok;
}

inline void summary_table(std::ostream& os, const harness::VerifyRun& run) {
    os << std::left << std::setw(6) << "index" << std::setw(44) << "instance" << std::setw(10) << "formula"
       << std::setw(8) << "solver" << std::setw(8) << "oracle" << "result\n";
    for (const auto& r : run.reports) {
        std::string formula = r.formula_upper && *r.formula_upper == r.formula_lower
                                  ? std::to_string(r.formula_lower)
                                  : std::to_string(r.formula_lower) + ".." +
                                        (r.formula_upper ? std::to_string(*r.formula_upper) : std::string("inf"));
        os << std::setw(6) << r.index << std::setw(44) << r.descriptor << std::setw(10) << formula << std::setw(8)
           << r.solver_value << std::setw(8) << (r.oracle_value ? std::to_string(*r.oracle_value) : "-")
           << (r.pass ? "pass" : "FAIL") << (r.error.empty() ? "" : " (" + r.error + ")") << '\n';
    }
    os << run.theorem << ": " << run.reports.size() - run.failures() << "/" << run.reports.size()
       << " passed, " << run.filtered << " candidates filtered, seed " << run.seed << '\n';
}

inline int cmd_verify(const CliConfig& c, const SolveOptions& so, Streams io) {
    require_format(c.format, {"json", "text"}, "verify");
    harness::VerifyOptions o;
    o.seed = c.seed;
    o.grid = harness::GridSpec::parse(c.grid);
    o.workers = c.workers;
    o.solve = so;
    auto run = harness::verify_run(c.theorem, o);
    if (c.format == "json") {
        harness::write_json_lines(io.out, run.reports);
        io.out << harness::summary_json(run).dump() << '\n';
    } else {
        summary_table(io.out, run);
    }
    return run.failures() == 0 ? ok : check_failed;
}

inline int cmd_recheck(const CliConfig& c, Streams io) {
    std::ifstream f;
    std::istream* src = &io.in;
    if (c.report != "-") {
        f.open(c.report);
        if (!f) throw invalid_input("cannot open report '" + c.report + "'");
        src = &f;
    }
    // summary lines carry no instance data; keep only instance lines
    std::stringstream instances;
    std::string line;
    while (std::getline(*src, line)) {
        if (line.empty()) continue;
        if (line.find("\"summary\":true") != std::string::npos) continue;
        instances << line << '\n';
    }
    auto reports = harness::read_json_lines(instances);
    std::size_t failed = 0;
    for (const auto& r : reports) failed += !r.pass;
    io.out << json{{"instances", reports.size()}, {"failures", failed}}.dump() << '\n';
    return failed == 0 ? ok : check_failed;
}

inline int cmd_conjecture(const CliConfig& c, Streams io) {
    require_format(c.format, {"json", "text"}, "conjecture");
    harness::ConjectureOptions o;
    std::tie(o.min_order, o.max_order) = parse_orders(c.orders);
    o.samples = c.samples;
    o.seed = c.seed;
    o.mode = harness::parse_conjecture_mode(c.mode);
    o.workers = c.workers;
    auto rep = harness::conjecture_search(o);
    if (c.format == "json") {
        harness::write_json_lines(io.out, rep);
    } else {
        for (const auto& f : rep.findings)
            io.out << "finding: sample " << f.sample << " graph6 " << f.g6 << " root " << f.root << " M={"
                   << join(f.max_distant) << "} i={" << join(f.isolated) << "} i'={" << join(f.partners) << "}\n";
        io.out << "samples: " << rep.samples << ", not matching-SR: " << rep.filtered_not_matching
               << ", boundary roots skipped: " << rep.filtered_boundary_roots
               << ", roots checked: " << rep.roots_checked << ", findings: " << rep.findings.size() << '\n';
    }
    return ok;
}

}  // namespace detail

/// Runs the CLI on already-split arguments (without the program name).
inline int run(const std::vector<std::string>& args, Streams io) {
    CliConfig c;
    CLI::App app{"strongdim: strong metric dimension of graphs and rooted/corona products"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", c.format, "Output format: json, text, dot or graph6")
        ->check(CLI::IsMember({"json", "text", "dot", "graph6"}));
    app.add_option("--budget", c.budget, "Solver branch-node budget (overrides STRONGDIM_BUDGET)")
        ->check(CLI::PositiveNumber);

    auto graph_cmd = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("graph", c.graph, "graph6 string, file path, or - for stdin")->required();
        return s;
    };
    auto* dims = graph_cmd("dims", "Strong metric dimension and a basis");
    auto* srg = graph_cmd("srg", "Strong resolving graph");
    auto* bnd = graph_cmd("boundary", "Boundary and simplicial vertices");

    auto* prod = app.add_subcommand("product", "Rooted or corona product");
    prod->add_option("--g", c.g, "graph6 of G")->required();
    prod->add_option("--h", c.h, "graph6 of H")->required();
    prod->add_option("--root", c.root, "Root vertex of H");
    prod->add_flag("--corona", c.corona, "Build the corona product instead");

    auto* fam = app.add_subcommand("family", "Family F graph H_{t,p,r}");
    fam->add_option("--t", c.t, "Odd cycle length, at least 5")->required();
    fam->add_option("--p", c.p, "Pendants at x_{t/2}")->required();
    fam->add_option("--r", c.r, "Pendants at x_{t/2+1}")->required();

    auto* form = app.add_subcommand("formula", "Evaluate a closed formula or bound");
    form->add_option("id", c.theorem, "cycle, antipodal, simplicial, matching_sr, corona, universal, bounds, pendant, family")
        ->required();
    form->add_option("--g", c.g, "graph6 of G");
    form->add_option("--h", c.h, "graph6 of H");
    form->add_option("--root", c.root, "Root vertex of H");
    form->add_option("--n", c.n, "Order of G");
    form->add_option("--r", c.r, "Order of G (cycle, corona) or family r");
    form->add_option("--t", c.t, "Cycle length or family t");
    form->add_option("--p", c.p, "Family p");
    form->add_option("--family-root", c.family_root, "y, x_t, or none for dim_s(H_{t,p,r})");

    auto* ver = app.add_subcommand("verify", "Check a theorem on its grid against the solver");
    ver->add_option("id", c.theorem, "Theorem id")->required()->check(CLI::IsMember(harness::theorem_ids()));
    ver->add_option("--seed", c.seed, "Seed for randomized instances");
    ver->add_option("--grid", c.grid, "Grid, e.g. r=2..4,t=3..7");
    ver->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);

    auto* rec = app.add_subcommand("recheck", "Reload a JSON-lines verify report and recompute every verdict");
    rec->add_option("report", c.report, "Report file or - for stdin")->required();

    auto* conj = app.add_subcommand("conjecture", "Search for roots outside the boundary with nonempty i(v)");
    conj->add_option("--orders", c.orders, "Order range, e.g. 3..9");
    conj->add_option("--samples", c.samples, "Number of random graphs");
    conj->add_option("--seed", c.seed, "Seed");
    conj->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
    conj->add_option("--mode", c.mode, "matching or all")->check(CLI::IsMember({"matching", "all"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        io.out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        io.err << "strongdim: " << e.what() << '\n';
        return usage;
    }

    SolveOptions so;
    try {
        so.budget = c.budget > 0 ? c.budget : branch_budget_from_env();
        if (*dims) return detail::cmd_dims(c, so, io);
        if (*srg) return detail::cmd_srg(c, io);
        if (*bnd) return detail::cmd_boundary(c, io);
        if (*prod) return detail::cmd_product(c, io);
        if (*fam) return detail::cmd_family(c, io);
        if (*form) return detail::cmd_formula(c, so, io);
        if (*ver) return detail::cmd_verify(c, so, io);
        if (*rec) return detail::cmd_recheck(c, io);
        if (*conj) return detail::cmd_conjecture(c, io);
    } catch (const std::exception& e) {
        io.err << "strongdim: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace strongdim::cli

#endif
