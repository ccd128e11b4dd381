#ifndef STRONGDIM_GRAPH_HPP
#define STRONGDIM_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "strongdim/errors.hpp"

namespace strongdim {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids over some host graph.
class VertexSet {
  public:
    VertexSet() = default;

    /// Builds a set from arbitrary ids; throws if any id is outside [0, host_order) or repeated.
    static VertexSet over(std::size_t host_order, std::vector<Vertex> ids) {
        std::sort(ids.begin(), ids.end());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] < 0 || static_cast<std::size_t>(ids[i]) >= host_order)
                throw invalid_input("vertex id " + std::to_string(ids[i]) + " out of range for order " +
                                    std::to_string(host_order));
            if (i > 0 && ids[i] == ids[i - 1])
                throw invalid_input("duplicate vertex id " + std::to_string(ids[i]));
        }
        VertexSet s;
        s.ids_ = std::move(ids);
        return s;
    }

    /// Same as over() but silently drops duplicates.
    static VertexSet collect(std::size_t host_order, std::vector<Vertex> ids) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return over(host_order, std::move(ids));
    }

    bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    Vertex operator[](std::size_t i) const { return ids_[i]; }
    const std::vector<Vertex>& ids() const { return ids_; }

    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

  private:
    std::vector<Vertex> ids_;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are stored canonically (smaller id first, sorted). Loops and repeated
/// edges are rejected at construction. Labels are optional and must be unique;
/// they do not take part in equality.
class Graph {
  public:
    Graph() = default;

    explicit Graph(std::size_t n, std::vector<Edge> edges = {}, std::vector<std::string> labels = {})
        : n_(n), adj_(n), labels_(std::move(labels)) {
        if (!labels_.empty()) {
            if (labels_.size() != n_) throw invalid_input("label count does not match vertex count");
            std::unordered_set<std::string> seen;
            for (const auto& l : labels_)
                if (!seen.insert(l).second) throw invalid_input("duplicate vertex label '" + l + "'");
        }
        for (auto& [u, v] : edges) {
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_)
                throw invalid_input("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") references a vertex outside 0.." + std::to_string(n_ ? n_ - 1 : 0));
            if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1])
                throw invalid_input("repeated edge (" + std::to_string(edges[i].first) + "," +
                                    std::to_string(edges[i].second) + ")");
        edges_ = std::move(edges);
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    std::size_t order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& a = adj_.at(u);
        return std::binary_search(a.begin(), a.end(), v);
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& a : adj_) d = std::max(d, a.size());
        return d;
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_.at(v); }

    std::optional<Vertex> find_label(const std::string& l) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == l) return static_cast<Vertex>(i);
        return std::nullopt;
    }

    VertexSet all_vertices() const {
        std::vector<Vertex> ids(n_);
        for (std::size_t i = 0; i < n_; ++i) ids[i] = static_cast<Vertex>(i);
        return VertexSet::over(n_, std::move(ids));
    }

    /// Subgraph induced by `keep`, re-indexed densely in increasing id order.
    Graph induced(const VertexSet& keep) const {
        std::vector<Vertex> remap(n_, -1);
        for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<Vertex>(i);
        std::vector<Edge> es;
        for (const auto& [u, v] : edges_)
            if (remap[u] >= 0 && remap[v] >= 0) es.emplace_back(remap[u], remap[v]);
        std::vector<std::string> ls;
        if (has_labels())
            for (Vertex v : keep) ls.push_back(labels_[v]);
        return Graph(keep.size(), std::move(es), std::move(ls));
    }

    /// The graph with vertex v deleted; higher ids shift down by one.
    Graph without(Vertex v) const {
        std::vector<Vertex> keep;
        for (std::size_t i = 0; i < n_; ++i)
            if (static_cast<Vertex>(i) != v) keep.push_back(static_cast<Vertex>(i));
        return induced(VertexSet::over(n_, std::move(keep)));
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

  private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
};

/// All-pairs hop distances of a connected graph, row-major.
class DistMatrix {
  public:
    DistMatrix() = default;
    DistMatrix(std::size_t n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

    std::size_t order() const { return n_; }
    int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    std::span<const int> row(Vertex u) const { return {d_.data() + static_cast<std::size_t>(u) * n_, n_}; }

  private:
    std::size_t n_ = 0;
    std::vector<int> d_;
};

namespace detail {

inline std::vector<int> bfs_row(const Graph& g, Vertex src) {
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto row = detail::bfs_row(g, 0);
    return std::none_of(row.begin(), row.end(), [](int d) { return d < 0; });
}

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    std::vector<std::vector<Vertex>> out;
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<Vertex> members{static_cast<Vertex>(s)};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t k = 0; k < members.size(); ++k)
            for (Vertex w : g.neighbors(members[k]))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        out.push_back(std::move(members));
    }
    std::vector<VertexSet> sets;
    for (auto& m : out) sets.push_back(VertexSet::over(g.order(), std::move(m)));
    return sets;
}

/// Throws disconnected_graph naming an unreachable pair when g is not connected.
inline DistMatrix bfs_distances(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> d(n * n);
    for (std::size_t s = 0; s < n; ++s) {
        auto row = detail::bfs_row(g, static_cast<Vertex>(s));
        for (std::size_t t = 0; t < n; ++t) {
            if (row[t] < 0) throw disconnected_graph(static_cast<Vertex>(s), static_cast<Vertex>(t));
            d[s * n + t] = row[t];
        }
    }
    return DistMatrix(n, std::move(d));
}

inline int diameter(const DistMatrix& d) {
    int best = 0;
    for (std::size_t u = 0; u < d.order(); ++u)
        for (int x : d.row(static_cast<Vertex>(u))) best = std::max(best, x);
    return best;
}

}  // namespace strongdim

#endif
