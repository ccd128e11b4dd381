#ifndef STRONGDIM_COVER_HPP
#define STRONGDIM_COVER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "strongdim/graph.hpp"
#include "strongdim/metrics.hpp"

namespace strongdim {

constexpr std::uint64_t default_branch_budget = 1'000'000;

/// Budget from STRONGDIM_BUDGET when set, else the default. A value that is
/// not a positive integer is an input error.
inline std::uint64_t branch_budget_from_env() {
    const char* s = std::getenv("STRONGDIM_BUDGET");
    if (!s) return default_branch_budget;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0 || *s == '-')
        throw invalid_input(std::string("STRONGDIM_BUDGET must be a positive integer, got '") + s + "'");
    return v;
}

struct SolveOptions {
    std::uint64_t budget = default_branch_budget;
};

struct CoverResult {
    VertexSet cover;
    std::uint64_t branch_nodes = 0;
};

namespace detail {

/// Exact minimum vertex cover by branch and bound.
///
/// Each node first applies the degree-0 (drop) and degree-1 (take the
/// neighbour) rules, then solves connected components independently, and
/// otherwise branches on a maximum-degree vertex (lowest id on ties): either
/// the vertex joins the cover or all of its neighbours do. A greedy maximal
/// matching gives the lower bound used for pruning.
class CoverSearch {
  public:
    CoverSearch(const Graph& g, std::uint64_t budget)
        : g_(g), alive_(g.order(), 1), deg_(g.order()), budget_(budget) {
        for (std::size_t v = 0; v < g.order(); ++v) deg_[v] = static_cast<int>(g.degree(static_cast<Vertex>(v)));
    }

    std::vector<Vertex> run() {
        std::vector<Vertex> all;
        for (std::size_t v = 0; v < g_.order(); ++v) all.push_back(static_cast<Vertex>(v));
        auto r = solve(all, unbounded);
        return *r;
    }

    std::uint64_t nodes() const { return nodes_; }

  private:
    static constexpr std::size_t unbounded = static_cast<std::size_t>(-1);

    void remove(Vertex v) {
        alive_[v] = 0;
        for (Vertex u : g_.neighbors(v))
            if (alive_[u]) --deg_[u];
        trail_.push_back(v);
    }

    void rewind(std::size_t mark) {
        while (trail_.size() > mark) {
            Vertex v = trail_.back();
            trail_.pop_back();
            alive_[v] = 1;
            for (Vertex u : g_.neighbors(v))
                if (alive_[u]) ++deg_[u];
        }
    }

    std::vector<Vertex> alive_in(const std::vector<Vertex>& vs) const {
        std::vector<Vertex> out;
        for (Vertex v : vs)
            if (alive_[v]) out.push_back(v);
        return out;
    }

    std::vector<std::vector<Vertex>> split(const std::vector<Vertex>& vs) {
        std::vector<std::vector<Vertex>> comps;
        for (Vertex s : vs) seen_[s] = 0;
        for (Vertex s : vs) {
            if (seen_[s]) continue;
            std::vector<Vertex> c{s};
            seen_[s] = 1;
            for (std::size_t k = 0; k < c.size(); ++k)
                for (Vertex w : g_.neighbors(c[k]))
                    if (alive_[w] && !seen_[w]) {
                        seen_[w] = 1;
                        c.push_back(w);
                    }
            std::sort(c.begin(), c.end());
            comps.push_back(std::move(c));
        }
        return comps;
    }

    std::size_t matching_bound(const std::vector<Vertex>& vs) {
        for (Vertex v : vs) seen_[v] = 0;
        std::size_t m = 0;
        for (Vertex v : vs) {
            if (seen_[v]) continue;
            for (Vertex w : g_.neighbors(v))
                if (alive_[w] && !seen_[w]) {
                    seen_[v] = seen_[w] = 1;
                    ++m;
                    break;
                }
        }
        return m;
    }

    // Minimum cover of the alive subgraph on `vs`, if one of size < limit exists.
    std::optional<std::vector<Vertex>> solve(const std::vector<Vertex>& vs, std::size_t limit) {
        if (++nodes_ > budget_)
            throw budget_exceeded("vertex cover search exceeded " + std::to_string(budget_) + " branch nodes");
        if (seen_.size() != g_.order()) seen_.assign(g_.order(), 0);

        const std::size_t mark = trail_.size();
        std::vector<Vertex> forced;
        for (bool changed = true; changed;) {
            changed = false;
            for (Vertex v : vs) {
                if (!alive_[v]) continue;
                if (deg_[v] == 0) {
                    remove(v);
                    changed = true;
                } else if (deg_[v] == 1) {
                    Vertex u = -1;
                    for (Vertex w : g_.neighbors(v))
                        if (alive_[w]) u = w;
                    forced.push_back(u);
                    remove(u);
                    changed = true;
                }
            }
        }
        auto finish = [&](std::optional<std::vector<Vertex>> r) {
            rewind(mark);
            if (r) r->insert(r->end(), forced.begin(), forced.end());
            return r;
        };
        if (forced.size() >= limit) return finish(std::nullopt);
        const std::size_t budget_left = limit == unbounded ? unbounded : limit - forced.size();

        auto rest = alive_in(vs);
        if (rest.empty()) return finish(std::vector<Vertex>{});

        auto comps = split(rest);
        if (comps.size() > 1) {
            std::vector<Vertex> total;
            for (const auto& c : comps) {
                auto part = solve(c, unbounded);
                total.insert(total.end(), part->begin(), part->end());
                if (total.size() >= budget_left) return finish(std::nullopt);
            }
            return finish(std::move(total));
        }

        if (budget_left != unbounded && matching_bound(rest) >= budget_left) return finish(std::nullopt);

        Vertex pivot = rest.front();
        for (Vertex v : rest)
            if (deg_[v] > deg_[pivot]) pivot = v;

        std::optional<std::vector<Vertex>> best;
        std::size_t bound = budget_left;

        // pivot in the cover
        if (bound == unbounded || bound > 1) {
            const std::size_t m2 = trail_.size();
            remove(pivot);
            auto r = solve(alive_in(rest), bound == unbounded ? unbounded : bound - 1);
            rewind(m2);
            if (r) {
                r->push_back(pivot);
                bound = r->size();
                best = std::move(r);
            }
        }
        // all neighbours of pivot in the cover
        std::vector<Vertex> nbrs;
        for (Vertex w : g_.neighbors(pivot))
            if (alive_[w]) nbrs.push_back(w);
        if (bound == unbounded || nbrs.size() < bound) {
            const std::size_t m2 = trail_.size();
            remove(pivot);
            for (Vertex w : nbrs) remove(w);
            auto r = solve(alive_in(rest), bound == unbounded ? unbounded : bound - nbrs.size());
            rewind(m2);
            if (r) {
                r->insert(r->end(), nbrs.begin(), nbrs.end());
                best = std::move(r);
            }
        }
        return finish(std::move(best));
    }

    const Graph& g_;
    std::vector<char> alive_;
    std::vector<int> deg_;
    std::vector<char> seen_;
    std::vector<Vertex> trail_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_;
};

}  // namespace detail

inline CoverResult min_vertex_cover_with_stats(const Graph& g, const SolveOptions& opt = {}) {
    detail::CoverSearch search(g, opt.budget);
    auto c = search.run();
    return {VertexSet::over(g.order(), std::move(c)), search.nodes()};
}

inline VertexSet min_vertex_cover(const Graph& g, const SolveOptions& opt = {}) {
    return min_vertex_cover_with_stats(g, opt).cover;
}

/// Minimum cover of an SR graph, in host ids.
inline CoverResult min_vertex_cover(const SRGraph& sr, const SolveOptions& opt = {}) {
    auto r = min_vertex_cover_with_stats(sr.dense(), opt);
    std::vector<Vertex> host;
    for (Vertex v : r.cover) host.push_back(sr.host_id(v));
    return {VertexSet::over(sr.host_order(), std::move(host)), r.branch_nodes};
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return s.contains(e.first) || s.contains(e.second); });
}

/// Strong metric dimension together with a witnessing basis.
struct DimReport {
    std::size_t value = 0;
    VertexSet basis;
    std::string method;  ///< "reduction", "oracle", or a formula case id
    double elapsed_ms = 0;
    std::uint64_t branch_nodes = 0;
};

/// dim_s(g) as the vertex cover number of the strong resolving graph.
inline DimReport strong_dimension(const Graph& g, const SolveOptions& opt = {}) {
    if (g.order() < 2) throw invalid_input("strong metric dimension needs a connected graph with at least 2 vertices");
    auto t0 = std::chrono::steady_clock::now();
    auto d = bfs_distances(g);
    auto sr = strong_resolving_graph(d, g);
    auto c = min_vertex_cover(sr, opt);
    DimReport rep;
    rep.value = c.cover.size();
    rep.basis = std::move(c.cover);
    rep.method = "reduction";
    rep.branch_nodes = c.branch_nodes;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Whether v lies in some strong metric basis: v must be a boundary vertex
/// whose removal lowers the SR graph's cover number by one.
inline bool v_in_some_basis(const Graph& g, Vertex v, const SolveOptions& opt = {}) {
    if (g.order() < 2) throw invalid_input("basis membership needs a connected graph with at least 2 vertices");
    auto d = bfs_distances(g);
    auto sr = strong_resolving_graph(d, g);
    const Vertex dv = sr.dense_id(v);
    if (dv < 0) return false;
    auto dense = sr.dense();
    const std::size_t alpha = min_vertex_cover(dense, opt).size();
    const std::size_t alpha_without = min_vertex_cover(dense.without(dv), opt).size();
    return alpha_without + 1 == alpha;
}

namespace detail {

// Simple branch and bound for maximum cliques. `exclusive` lists, per vertex,
// vertices that may not share a clique with it (used for twin-free cliques).
class CliqueSearch {
  public:
    CliqueSearch(const Graph& g, std::vector<std::vector<Vertex>> exclusive = {})
        : g_(g), exclusive_(std::move(exclusive)) {}

    std::vector<Vertex> run() {
        std::vector<Vertex> cand;
        for (std::size_t v = 0; v < g_.order(); ++v) cand.push_back(static_cast<Vertex>(v));
        std::vector<Vertex> cur;
        expand(cur, cand);
        return best_;
    }

  private:
    void expand(std::vector<Vertex>& cur, std::vector<Vertex> cand) {
        if (cur.size() > best_.size()) best_ = cur;
        while (!cand.empty()) {
            if (cur.size() + cand.size() <= best_.size()) return;
            Vertex v = cand.front();
            cand.erase(cand.begin());
            std::vector<Vertex> next;
            for (Vertex w : cand) {
                if (!g_.has_edge(v, w)) continue;
                if (!exclusive_.empty() &&
                    std::binary_search(exclusive_[v].begin(), exclusive_[v].end(), w))
                    continue;
                next.push_back(w);
            }
            cur.push_back(v);
            expand(cur, std::move(next));
            cur.pop_back();
        }
    }

    const Graph& g_;
    std::vector<std::vector<Vertex>> exclusive_;
    std::vector<Vertex> best_;
};

}  // namespace detail

inline VertexSet maximum_clique(const Graph& g) {
    return VertexSet::over(g.order(), detail::CliqueSearch(g).run());
}

/// Largest clique containing no pair of true twins.
inline VertexSet maximum_twin_free_clique(const Graph& g) {
    std::vector<std::vector<Vertex>> excl(g.order());
    for (auto [u, v] : true_twins(g)) {
        excl[u].push_back(v);
        excl[v].push_back(u);
    }
    for (auto& e : excl) std::sort(e.begin(), e.end());
    return VertexSet::over(g.order(), detail::CliqueSearch(g, std::move(excl)).run());
}

/// omega(g); 0 for the empty graph.
inline std::size_t clique_number(const Graph& g) { return maximum_clique(g).size(); }

/// Twin-free clique number; never exceeds clique_number(g).
inline std::size_t twin_free_clique_number(const Graph& g) { return maximum_twin_free_clique(g).size(); }

}  // namespace strongdim

#endif
