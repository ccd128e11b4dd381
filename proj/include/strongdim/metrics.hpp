#ifndef STRONGDIM_METRICS_HPP
#define STRONGDIM_METRICS_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "strongdim/graph.hpp"

namespace strongdim {

/// u is maximally distant from v: no neighbour of u lies farther from v than u does.
inline bool is_maximally_distant(const DistMatrix& d, const Graph& g, Vertex u, Vertex v) {
    const int duv = d(u, v);
    for (Vertex w : g.neighbors(u))
        if (d(v, w) > duv) return false;
    return true;
}

inline bool is_mutually_maximally_distant(const DistMatrix& d, const Graph& g, Vertex u, Vertex v) {
    return u != v && is_maximally_distant(d, g, u, v) && is_maximally_distant(d, g, v, u);
}

/// M(v): every vertex maximally distant from v.
inline VertexSet max_distant_set(const DistMatrix& d, const Graph& g, Vertex v) {
    std::vector<Vertex> out;
    for (std::size_t u = 0; u < g.order(); ++u)
        if (is_maximally_distant(d, g, static_cast<Vertex>(u), v)) out.push_back(static_cast<Vertex>(u));
    return VertexSet::over(g.order(), std::move(out));
}

namespace detail {
// md[u*n+v] = u maximally distant from v (u != v)
inline std::vector<char> max_distance_table(const DistMatrix& d, const Graph& g) {
    const std::size_t n = g.order();
    std::vector<char> md(n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            md[u * n + v] = u != v && is_maximally_distant(d, g, static_cast<Vertex>(u), static_cast<Vertex>(v));
    return md;
}
}  // namespace detail

/// Vertices belonging to at least one mutually maximally distant pair.
inline VertexSet boundary(const DistMatrix& d, const Graph& g) {
    const std::size_t n = g.order();
    auto md = detail::max_distance_table(d, g);
    std::vector<Vertex> out;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (md[u * n + v] && md[v * n + u]) {
                out.push_back(static_cast<Vertex>(u));
                break;
            }
    return VertexSet::over(n, std::move(out));
}

inline bool is_simplicial(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (!g.has_edge(nb[a], nb[b])) return false;
    return true;
}

inline VertexSet simplicial(const Graph& g) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (is_simplicial(g, static_cast<Vertex>(v))) out.push_back(static_cast<Vertex>(v));
    return VertexSet::over(g.order(), std::move(out));
}

/// Strong resolving graph: the boundary of the host with an edge for every
/// mutually maximally distant pair. Vertices with no such pair are absent.
class SRGraph {
  public:
    SRGraph(std::size_t host_order, VertexSet boundary, std::vector<Edge> edges)
        : host_order_(host_order), boundary_(std::move(boundary)), edges_(std::move(edges)) {}

    std::size_t host_order() const { return host_order_; }
    const VertexSet& vertices() const { return boundary_; }
    /// Edges in host ids, canonical order.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Dense id of a host boundary vertex, or -1.
    Vertex dense_id(Vertex host) const {
        auto it = std::lower_bound(boundary_.begin(), boundary_.end(), host);
        return it != boundary_.end() && *it == host ? static_cast<Vertex>(it - boundary_.begin()) : -1;
    }
    Vertex host_id(Vertex dense) const { return boundary_[dense]; }

    /// The SR graph re-indexed over 0..|boundary|-1.
    Graph dense() const {
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (auto [u, v] : edges_) es.emplace_back(dense_id(u), dense_id(v));
        return Graph(boundary_.size(), std::move(es));
    }

    /// SR-neighbours of a host vertex, in host ids.
    std::vector<Vertex> partners(Vertex host) const {
        std::vector<Vertex> out;
        for (auto [u, v] : edges_) {
            if (u == host) out.push_back(v);
            if (v == host) out.push_back(u);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool adjacent(Vertex u, Vertex v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

  private:
    std::size_t host_order_;
    VertexSet boundary_;
    std::vector<Edge> edges_;
};

inline SRGraph strong_resolving_graph(const DistMatrix& d, const Graph& g) {
    const std::size_t n = g.order();
    auto md = detail::max_distance_table(d, g);
    std::vector<Edge> es;
    std::vector<Vertex> ends;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (md[u * n + v] && md[v * n + u]) {
                es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
                ends.push_back(static_cast<Vertex>(u));
                ends.push_back(static_cast<Vertex>(v));
            }
    return SRGraph(n, VertexSet::collect(n, std::move(ends)), std::move(es));
}

/// Every boundary vertex has exactly one SR-partner (SR graph is a union of K_2).
inline bool sr_is_perfect_matching(const SRGraph& sr) {
    std::vector<int> deg(sr.host_order(), 0);
    for (auto [u, v] : sr.edges()) {
        ++deg[u];
        ++deg[v];
    }
    return std::all_of(sr.vertices().begin(), sr.vertices().end(), [&](Vertex v) { return deg[v] == 1; });
}

/// Root data consumed by the rooted-product formulas.
struct RootContext {
    Vertex root = 0;
    VertexSet max_distant;  ///< M(v)
    VertexSet isolated;     ///< i(v): members of M(v) with no SR-neighbour inside M(v)
    VertexSet partners;     ///< i'(v): SR-neighbours of i(v)
    /// True when the SR graph is a perfect matching, the only case where
    /// `partners` is the one-to-one partner set.
    bool canonical = false;
};

inline RootContext root_context(const DistMatrix& d, const Graph& g, const SRGraph& sr, Vertex v) {
    RootContext ctx;
    ctx.root = v;
    ctx.max_distant = max_distant_set(d, g, v);
    ctx.canonical = sr_is_perfect_matching(sr);
    std::vector<Vertex> iso, part;
    for (Vertex a : ctx.max_distant) {
        auto ps = sr.partners(a);
        bool alone = std::none_of(ps.begin(), ps.end(), [&](Vertex b) { return ctx.max_distant.contains(b); });
        if (!alone) continue;
        iso.push_back(a);
        part.insert(part.end(), ps.begin(), ps.end());
    }
    ctx.isolated = VertexSet::over(g.order(), std::move(iso));
    ctx.partners = VertexSet::collect(g.order(), std::move(part));
    return ctx;
}

inline RootContext root_context(const DistMatrix& d, const Graph& g, Vertex v) {
    return root_context(d, g, strong_resolving_graph(d, g), v);
}

// ---- structural predicates ----

/// Every vertex has exactly one vertex at diameter distance. Requires n >= 2.
inline bool is_2_antipodal(const DistMatrix& d) {
    if (d.order() < 2) return false;
    const int diam = diameter(d);
    for (std::size_t u = 0; u < d.order(); ++u) {
        auto row = d.row(static_cast<Vertex>(u));
        if (std::count(row.begin(), row.end(), diam) != 1) return false;
    }
    return true;
}

inline bool are_true_twins(const Graph& g, Vertex x, Vertex y) {
    if (x == y || !g.has_edge(x, y)) return false;
    auto a = g.neighbors(x), b = g.neighbors(y);
    if (a.size() != b.size()) return false;
    // N[x] = N[y] with x~y reduces to N(x) - y = N(y) - x
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && a[i] == y) { ++i; continue; }
        if (j < b.size() && b[j] == x) { ++j; continue; }
        if (i == a.size() || j == b.size() || a[i] != b[j]) return false;
        ++i, ++j;
    }
    return true;
}

inline std::vector<Edge> true_twins(const Graph& g) {
    std::vector<Edge> out;
    for (auto [u, v] : g.edges())
        if (are_true_twins(g, u, v)) out.emplace_back(u, v);
    return out;
}

/// Vertices of degree n-1.
inline VertexSet universal_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) + 1 == g.order()) out.push_back(static_cast<Vertex>(v));
    return VertexSet::over(g.order(), std::move(out));
}

inline VertexSet leaves(const Graph& g) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) == 1) out.push_back(static_cast<Vertex>(v));
    return VertexSet::over(g.order(), std::move(out));
}

inline bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

inline bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        auto a = g.neighbors(u), b = g.neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            a[i] < b[j] ? ++i : ++j;
        }
    }
    return true;
}

}  // namespace strongdim

#endif
