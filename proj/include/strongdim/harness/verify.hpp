#ifndef STRONGDIM_HARNESS_VERIFY_HPP
#define STRONGDIM_HARNESS_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "strongdim/cover.hpp"
#include "strongdim/formulas.hpp"
#include "strongdim/generators.hpp"
#include "strongdim/graph6.hpp"
#include "strongdim/harness/oracle.hpp"
#include "strongdim/metrics.hpp"
#include "strongdim/products.hpp"

namespace strongdim::harness {

/// Per-instance seed; independent of worker count and evaluation order.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Runs f(i) for i in [0, count) on up to `workers` threads; results stay in index order.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, std::size_t workers, F f) {
    std::vector<T> out(count);
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) out[i] = f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

// ---- Lemma checks on product bases ----

struct CopyCheck {
    Vertex copy = 0;
    std::size_t count = 0;        ///< |B_x|
    bool covers_max_distant = false;  ///< B_x contains {x} x M(v)
    bool general_ok = false;      ///< |B_x| >= dim_s(H) - 1
    bool covered_ok = true;       ///< |B_x| >= dim_s(H) when B_x contains {x} x M(v)
    bool no_basis_ok = true;      ///< |B_x| >= dim_s(H) when v lies in no basis of H
    bool ok() const { return general_ok && covered_ok && no_basis_ok; }
};

struct DivideLemmaReport {
    std::size_t dim_h = 0;
    bool root_in_some_basis = false;
    std::vector<CopyCheck> copies;
    bool ok() const {
        return std::all_of(copies.begin(), copies.end(), [](const CopyCheck& c) { return c.ok(); });
    }
};

/// Per-copy lower bounds on |B_x| for a basis B of G o_v H laid out as rooted_product(g, h, v).
inline DivideLemmaReport check_divide_lemma(const Graph& g, const Graph& h, Vertex v, const DimReport& report,
                                            const SolveOptions& opt = {}) {
    auto prod = rooted_product(g, h, v);
    DivideLemmaReport rep;
    rep.dim_h = strong_dimension(h, opt).value;
    rep.root_in_some_basis = v_in_some_basis(h, v, opt);
    auto dh = bfs_distances(h);
    auto m = max_distant_set(dh, h, v);
    const auto need = static_cast<std::int64_t>(rep.dim_h);
    for (std::size_t x = 0; x < g.order(); ++x) {
        CopyCheck c;
        c.copy = static_cast<Vertex>(x);
        auto part = prod.copy_part(report.basis, c.copy);
        c.count = part.size();
        c.covers_max_distant = std::all_of(m.begin(), m.end(), [&](Vertex a) {
            return std::binary_search(part.begin(), part.end(), prod.id(c.copy, a));
        });
        const auto cnt = static_cast<std::int64_t>(c.count);
        c.general_ok = cnt >= need - 1;
        if (c.covers_max_distant) c.covered_ok = cnt >= need;
        if (!rep.root_in_some_basis) c.no_basis_ok = cnt >= need;
        rep.copies.push_back(c);
    }
    return rep;
}

/// Boundary and simplicial sets of G o_v H against V(G) x (S(H) - {v}) / V(G) x S(H).
inline bool check_product_sets(const Graph& g, const Graph& h, Vertex v) {
    auto prod = rooted_product(g, h, v);
    auto dp = bfs_distances(prod.graph());
    auto dh = bfs_distances(h);
    auto expect = [&](const VertexSet& in_h) {
        std::vector<Vertex> ids;
        for (std::size_t x = 0; x < g.order(); ++x)
            for (Vertex a : in_h)
                if (!(in_h.contains(v) && a == v)) ids.push_back(prod.id(static_cast<Vertex>(x), a));
        return VertexSet::collect(prod.graph().order(), ids);
    };
    return boundary(dp, prod.graph()) == expect(boundary(dh, h)) && simplicial(prod.graph()) == expect(simplicial(h));
}

// ---- theorem grids ----

struct VerifyReport {
    std::string theorem;
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::string descriptor;
    std::string g6_g;
    std::string g6_h;
    Vertex root = 0;
    bool corona = false;
    std::string formula_case;
    std::int64_t formula_lower = 0;
    std::optional<std::int64_t> formula_upper;
    std::vector<std::pair<std::string, std::int64_t>> fired;
    std::int64_t solver_value = 0;
    std::optional<std::int64_t> oracle_value;
    std::vector<std::pair<std::string, bool>> side_checks;  ///< e.g. Lemma bounds on the solver basis
    bool pass = false;
    double elapsed_ms = 0;
    std::string error;  ///< set when the instance could not be evaluated
};

/// pass recomputed from the stored values alone.
inline bool recompute_pass(const VerifyReport& r) {
    if (!r.error.empty()) return false;
    const auto x = r.solver_value;
    if (x < r.formula_lower) return false;
    if (r.formula_upper && x > *r.formula_upper) return false;
    for (const auto& [_, v] : r.fired)
        if (v != x) return false;
    if (r.oracle_value && *r.oracle_value != x) return false;
    for (const auto& [_, ok] : r.side_checks)
        if (!ok) return false;
    return true;
}

/// Key/range grid such as "r=2..4,t=3..7" or "samples=200".
class GridSpec {
  public:
    GridSpec() = default;

    static GridSpec parse(const std::string& text) {
        GridSpec g;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) throw invalid_input("grid entry '" + item + "' is not key=range");
            auto key = item.substr(0, eq), val = item.substr(eq + 1);
            auto dots = val.find("..");
            try {
                std::size_t used = 0;
                if (dots == std::string::npos) {
                    long a = std::stol(val, &used);
                    if (used != val.size()) throw std::invalid_argument(val);
                    g.ranges_[key] = {a, a};
                } else {
                    auto lo = val.substr(0, dots), hi = val.substr(dots + 2);
                    long a = std::stol(lo, &used);
                    if (used != lo.size()) throw std::invalid_argument(val);
                    long b = std::stol(hi, &used);
                    if (used != hi.size()) throw std::invalid_argument(val);
                    if (b < a) throw invalid_input("empty range in grid entry '" + item + "'");
                    g.ranges_[key] = {a, b};
                }
            } catch (const std::logic_error&) {
                throw invalid_input("grid entry '" + item + "' has a malformed range");
            }
        }
        return g;
    }

    std::pair<long, long> range(const std::string& key, long lo, long hi) const {
        auto it = ranges_.find(key);
        return it == ranges_.end() ? std::pair{lo, hi} : it->second;
    }
    long value(const std::string& key, long dflt) const {
        auto it = ranges_.find(key);
        return it == ranges_.end() ? dflt : it->second.first;
    }
    bool has(const std::string& key) const { return ranges_.count(key) > 0; }

  private:
    std::map<std::string, std::pair<long, long>> ranges_;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    GridSpec grid;
    std::size_t workers = 1;
    std::size_t oracle_order = default_oracle_order;
    SolveOptions solve;
};

/// One prepared instance: the product to solve and the formula to compare.
struct PreparedInstance {
    std::string descriptor;
    Graph g;
    Graph h;
    Vertex root = 0;
    bool corona = false;
    std::uint64_t seed = 0;
    bool lemma_checks = false;       ///< also run the per-copy basis bounds
    bool standalone = false;         ///< compare dim_s(h) itself (g unused)
    std::function<FormulaResult()> formula;
};

inline const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"cycle", "antipodal", "simplicial", "matching_sr", "family",
                                              "bounds", "pendant", "corona", "universal"};
    return ids;
}

namespace detail {

using strongdim::detail::below;
using strongdim::detail::unit;

inline Graph graph_of_order(std::size_t n, std::mt19937_64& rng) {
    return n == 1 ? Graph(1) : random_connected(n, 0.3 + 0.5 * unit(rng), rng());
}

/// Random graph, possibly disconnected.
inline Graph loose_graph(std::size_t n, std::mt19937_64& rng) {
    const double p = 0.15 + 0.7 * unit(rng);
    std::vector<Edge> es;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (unit(rng) < p) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

inline long pick(std::mt19937_64& rng, std::pair<long, long> r) {
    return r.first + static_cast<long>(below(rng, static_cast<std::uint64_t>(r.second - r.first + 1)));
}

struct Prepared {
    std::vector<PreparedInstance> instances;
    std::size_t filtered = 0;  ///< candidates rejected for failing the theorem's hypotheses
};

inline Prepared prepare(const std::string& theorem, const VerifyOptions& o) {
    Prepared prep;
    auto& out = prep.instances;
    auto& filtered = prep.filtered;
    const auto& grid = o.grid;
    auto add = [&](std::string desc, Graph g, Graph h, Vertex v, std::function<FormulaResult()> f) {
        PreparedInstance p;
        p.descriptor = std::move(desc);
        p.g = std::move(g);
        p.h = std::move(h);
        p.root = v;
        p.seed = o.seed;
        p.formula = std::move(f);
        out.push_back(std::move(p));
        return &out.back();
    };

    if (theorem == "cycle") {
        auto [r0, r1] = grid.range("r", 2, 4);
        auto [t0, t1] = grid.range("t", 3, 7);
        std::size_t idx = 0;
        for (long r = r0; r <= r1; ++r)
            for (long t = t0; t <= t1; ++t) {
                std::vector<std::pair<std::string, Graph>> gs{{"P" + std::to_string(r), path(r)}};
                if (r >= 3) gs.emplace_back("C" + std::to_string(r), cycle(r));
                gs.emplace_back("random" + std::to_string(r),
                                random_connected(r, 0.5, instance_seed(o.seed, idx++)));
                for (auto& [name, g] : gs)
                    add(name + " o C" + std::to_string(t), g, cycle(t), 0,
                        [r, t] { return dim_cycle_rooted(r, t); });
            }
    } else if (theorem == "antipodal") {
        std::vector<std::pair<std::string, Graph>> hs{
            {"C4", cycle(4)}, {"C6", cycle(6)}, {"C8", cycle(8)}, {"Q3", hypercube(3)}};
        std::vector<std::pair<std::string, Graph>> gs{{"P2", path(2)}, {"P3", path(3)}, {"C5", cycle(5)}};
        for (auto& [hn, h] : hs)
            for (auto& [gn, g] : gs) {
                const std::size_t n = g.order();
                add(gn + " o " + hn, g, h, 0, [n, h = h] { return dim_antipodal(n, h); });
            }
    } else if (theorem == "simplicial") {
        std::vector<std::pair<std::string, Graph>> hs{{"K3", complete(3)}, {"K4", complete(4)}, {"K1,3", star(3)}};
        auto [tn0, tn1] = grid.range("tree", 6, 7);
        for (long k = tn0; k <= tn1; ++k)
            hs.emplace_back("T" + std::to_string(k), random_tree(k, instance_seed(o.seed, k)));
        std::vector<std::pair<std::string, Graph>> gs{{"P2", path(2)}, {"P3", path(3)}, {"K3", complete(3)}};
        for (auto& [hn, h] : hs) {
            auto bd = boundary(bfs_distances(h), h);
            std::vector<Vertex> roots{bd[0]};
            for (std::size_t v = 0; v < h.order(); ++v)
                if (!bd.contains(static_cast<Vertex>(v))) {
                    roots.push_back(static_cast<Vertex>(v));
                    break;
                }
            for (auto& [gn, g] : gs)
                for (Vertex v : roots)
                    add(gn + " o_" + std::to_string(v) + " " + hn, g, h, v,
                        [g = g, h = h, v] { return dim_simplicial_boundary(g, h, v); });
        }
    } else if (theorem == "matching_sr") {
        const long samples = grid.value("samples", 40);
        auto hr = grid.range("h", 4, 8);
        for (long i = 0; i < samples; ++i) {
            std::mt19937_64 rng(instance_seed(o.seed, i));
            Graph h;
            for (int attempt = 0;; ++attempt) {
                h = attempt < 20000 ? graph_of_order(pick(rng, hr), rng) : cycle(2 * (2 + i % 3));
                if (sr_is_perfect_matching(strong_resolving_graph(bfs_distances(h), h))) break;
                ++filtered;
            }
            Graph g = graph_of_order(pick(rng, {2, 3}), rng);
            auto v = static_cast<Vertex>(below(rng, h.order()));
            add("matching-SR sample " + std::to_string(i), g, h, v,
                [g, h, v] { return dim_matching_sr(g, h, v); });
        }
    } else if (theorem == "family") {
        auto [ta, tb] = grid.range("t", 5, 9);
        auto [pa, pb] = grid.range("p", 1, 3);
        auto [ra, rb] = grid.range("r", 1, 3);
        auto [na, nb] = grid.range("n", 2, 3);
        for (long t = ta; t <= tb; ++t) {
            if (t % 2 == 0) continue;
            for (long p = pa; p <= pb; ++p)
                for (long r = ra; r <= rb; ++r) {
                    FamilyFSpec spec{static_cast<std::size_t>(t), static_cast<std::size_t>(p),
                                     static_cast<std::size_t>(r)};
                    auto fam = family_F(spec);
                    const std::string hn = "H" + std::to_string(t) + "," + std::to_string(p) + "," + std::to_string(r);
                    auto* s = add(hn, Graph(1), fam.graph, 0, [spec] { return family_F_strong_dimension(spec); });
                    s->standalone = true;
                    for (long n = na; n <= nb; ++n) {
                        const auto N = static_cast<std::size_t>(n);
                        add("P" + std::to_string(n) + " o_y " + hn, path(N), fam.graph, fam.marks.y,
                            [N, spec] { return family_F_product_value(N, spec, FamilyRoot::y); });
                        add("P" + std::to_string(n) + " o_xt " + hn, path(N), fam.graph, fam.marks.x_t,
                            [N, spec] { return family_F_product_value(N, spec, FamilyRoot::x_t); });
                    }
                }
        }
    } else if (theorem == "bounds") {
        const long samples = grid.value("samples", 200);
        auto gr = grid.range("g", 2, 4);
        auto hr = grid.range("h", 2, 7);
        for (long i = 0; i < samples; ++i) {
            std::mt19937_64 rng(instance_seed(o.seed, i));
            Graph g = graph_of_order(pick(rng, gr), rng);
            Graph h = graph_of_order(pick(rng, hr), rng);
            auto v = static_cast<Vertex>(below(rng, h.order()));
            auto* s = add("bounds sample " + std::to_string(i), g, h, v,
                          [g, h, v, so = o.solve] { return bounds_general(g, h, v, so); });
            s->lemma_checks = true;
        }
    } else if (theorem == "pendant") {
        auto [na, nb] = grid.range("n", 2, 3);
        for (std::size_t t : {5, 7})
            for (std::size_t p : {1, 2}) {
                FamilyFSpec spec{t, p, 1};
                auto fam = family_F(spec);
                for (long n = na; n <= nb; ++n) {
                    const auto N = static_cast<std::size_t>(n);
                    add("P" + std::to_string(n) + " o_xt H" + std::to_string(t) + "," + std::to_string(p) + ",1",
                        path(N), fam.graph, fam.marks.x_t,
                        [N, h = fam.graph, v = fam.marks.x_t, so = o.solve] { return bound_pendant(N, h, v, so); });
                }
            }
        const long samples = grid.value("samples", 20);
        std::size_t found = 0;
        for (long i = 0; found < static_cast<std::size_t>(samples) && i < 200 * samples; ++i) {
            std::mt19937_64 rng(instance_seed(o.seed, i));
            Graph h = graph_of_order(pick(rng, {4, 8}), rng);
            auto v = static_cast<Vertex>(below(rng, h.order()));
            try {
                bound_pendant(2, h, v, o.solve);
            } catch (const refusal&) {
                ++filtered;
                continue;
            }
            Graph g = graph_of_order(pick(rng, {2, 3}), rng);
            const std::size_t n = g.order();
            add("pendant sample " + std::to_string(i), g, h, v,
                [n, h, v, so = o.solve] { return bound_pendant(n, h, v, so); });
            ++found;
        }
    } else if (theorem == "corona" || theorem == "universal") {
        const long samples = grid.value("samples", 50);
        auto hr = grid.range("h", 1, 6);
        auto gr = grid.range("g", theorem == "corona" ? 1 : 2, 4);
        const long min_branches = grid.value("min_branches", 2);
        for (long i = 0; i < samples; ++i) {
            std::mt19937_64 rng(instance_seed(o.seed, i));
            for (int attempt = 0; attempt < 100000; ++attempt) {
                Graph g = graph_of_order(pick(rng, gr), rng);
                Graph base = loose_graph(pick(rng, hr), rng);
                try {
                    if (theorem == "corona") {
                        auto r = dim_corona(g.order(), base, o.solve);
                        if (static_cast<long>(r.fired.size()) < min_branches) {
                            ++filtered;
                            continue;
                        }
                        auto* s = add("corona sample " + std::to_string(i), g, base, 0,
                                      [r = g.order(), base, so = o.solve] { return dim_corona(r, base, so); });
                        s->corona = true;
                    } else {
                        Graph h = join_k1(base).first;
                        auto r = dim_universal_root(g, h, 0, o.solve);
                        if (static_cast<long>(r.fired.size()) < min_branches) {
                            ++filtered;
                            continue;
                        }
                        add("universal-root sample " + std::to_string(i), g, h, 0,
                            [g, h, so = o.solve] { return dim_universal_root(g, h, 0, so); });
                    }
                    break;
                } catch (const refusal&) {
                    ++filtered;
                }
            }
        }
    } else {
        throw invalid_input("unknown theorem id '" + theorem + "'");
    }
    return prep;
}

inline VerifyReport evaluate(const std::string& theorem, std::size_t index, const PreparedInstance& p,
                             const VerifyOptions& o) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.theorem = theorem;
    rep.index = index;
    rep.seed = p.seed;
    rep.descriptor = p.descriptor;
    rep.g6_g = serialize_graph6(p.g);
    rep.g6_h = serialize_graph6(p.h);
    rep.root = p.root;
    rep.corona = p.corona;
    try {
        auto f = p.formula();
        rep.formula_case = std::string(to_string(f.which));
        rep.formula_lower = f.lower;
        rep.formula_upper = f.upper;
        for (const auto& b : f.fired) rep.fired.emplace_back(std::string(to_string(b.which)), b.value);

        Graph product;
        if (p.standalone)
            product = p.h;
        else if (p.corona)
            product = corona_product(p.g, p.h).graph();
        else
            product = rooted_product(p.g, p.h, p.root).graph();
        auto solved = strong_dimension(product, o.solve);
        rep.solver_value = static_cast<std::int64_t>(solved.value);
        rep.side_checks.emplace_back("solver basis is a strong metric generator",
                                     is_strong_metric_generator(product, solved.basis));
        if (product.order() <= o.oracle_order)
            rep.oracle_value = static_cast<std::int64_t>(oracle_strong_dimension(product, o.oracle_order).value);
        if (p.lemma_checks) {
            auto lemma = check_divide_lemma(p.g, p.h, p.root, solved, o.solve);
            rep.side_checks.emplace_back("per-copy basis bounds", lemma.ok());
            rep.side_checks.emplace_back("product boundary and simplicial sets", check_product_sets(p.g, p.h, p.root));
        }
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    rep.pass = recompute_pass(rep);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace detail

struct VerifyRun {
    std::string theorem;
    std::uint64_t seed = 0;
    std::size_t filtered = 0;
    std::vector<VerifyReport> reports;
    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(reports.begin(), reports.end(), [](const VerifyReport& r) { return !r.pass; }));
    }
};

/// Builds every instance of the theorem's grid, solves each product exactly
/// and compares with the formula (and with the oracle on small products).
inline VerifyRun verify_run(const std::string& theorem, const VerifyOptions& o = {}) {
    auto prep = detail::prepare(theorem, o);
    VerifyRun run;
    run.theorem = theorem;
    run.seed = o.seed;
    run.filtered = prep.filtered;
    run.reports = parallel_map<VerifyReport>(prep.instances.size(), o.workers, [&](std::size_t i) {
        return detail::evaluate(theorem, i, prep.instances[i], o);
    });
    return run;
}

inline std::vector<VerifyReport> verify_theorem(const std::string& theorem, const VerifyOptions& o = {}) {
    return verify_run(theorem, o).reports;
}

}  // namespace strongdim::harness

#endif
