// Brute-force references used only by the tests. Each one works from the
// definitions on an edge list and shares no code with the library beyond the
// Graph container.
#ifndef STRONGDIM_TESTS_BRUTE_HPP
#define STRONGDIM_TESTS_BRUTE_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <vector>

#include "strongdim/graph.hpp"

namespace brute {

using strongdim::Graph;
using strongdim::Vertex;

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> a(g.order());
    for (auto [u, v] : g.edges()) {
        a[u].push_back(v);
        a[v].push_back(u);
    }
    return a;
}

/// All-pairs distances by one queue search per source; -1 when unreachable.
inline std::vector<std::vector<int>> distances(const Graph& g) {
    auto a = adjacency(g);
    const int n = static_cast<int>(g.order());
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::deque<int> q{s};
        d[s][s] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : a[x])
                if (d[s][y] < 0) {
                    d[s][y] = d[s][x] + 1;
                    q.push_back(y);
                }
        }
    }
    return d;
}

/// u is maximally distant from v.
inline bool maximally_distant(const Graph& g, const std::vector<std::vector<int>>& d, int u, int v) {
    const auto a = adjacency(g);
    for (int w : a[u])
        if (d[v][w] > d[v][u]) return false;
    return true;
}

inline std::set<int> max_distant(const Graph& g, int v) {
    auto d = distances(g);
    std::set<int> out;
    for (int u = 0; u < static_cast<int>(g.order()); ++u)
        if (u != v && maximally_distant(g, d, u, v)) out.insert(u);
    return out;
}

/// Mutually maximally distant pairs (u < v).
inline std::set<std::pair<int, int>> mmd_pairs(const Graph& g) {
    auto d = distances(g);
    std::set<std::pair<int, int>> out;
    const int n = static_cast<int>(g.order());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (maximally_distant(g, d, u, v) && maximally_distant(g, d, v, u)) out.insert({u, v});
    return out;
}

inline std::set<int> boundary(const Graph& g) {
    std::set<int> out;
    for (auto [u, v] : mmd_pairs(g)) {
        out.insert(u);
        out.insert(v);
    }
    return out;
}

inline std::set<int> simplicial(const Graph& g) {
    auto a = adjacency(g);
    std::set<int> out;
    for (int v = 0; v < static_cast<int>(g.order()); ++v) {
        bool ok = true;
        for (int x : a[v])
            for (int y : a[v])
                if (x < y && !g.has_edge(x, y)) ok = false;
        if (ok) out.insert(v);
    }
    return out;
}

/// w lies on a shortest u-v path through one endpoint.
inline bool resolves(const std::vector<std::vector<int>>& d, int w, int u, int v) {
    return d[w][u] == d[w][v] + d[v][u] || d[w][v] == d[w][u] + d[u][v];
}

inline bool is_generator(const Graph& g, const std::vector<int>& s) {
    auto d = distances(g);
    const int n = static_cast<int>(g.order());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::none_of(s.begin(), s.end(), [&](int w) { return resolves(d, w, u, v); })) return false;
    return true;
}

namespace detail {
inline bool choose(const std::vector<std::vector<int>>& d, int n, int k, int from, std::vector<int>& cur,
                   std::vector<std::vector<int>>* all) {
    if (static_cast<int>(cur.size()) == k) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::none_of(cur.begin(), cur.end(), [&](int w) { return resolves(d, w, u, v); })) return false;
        if (all) {
            all->push_back(cur);
            return false;
        }
        return true;
    }
    for (int w = from; w < n; ++w) {
        cur.push_back(w);
        if (choose(d, n, k, w + 1, cur, all)) return true;
        cur.pop_back();
    }
    return false;
}
}  // namespace detail

/// dim_s by recursive subset search in increasing size.
inline int strong_dim(const Graph& g) {
    auto d = distances(g);
    const int n = static_cast<int>(g.order());
    for (int k = 1; k <= n; ++k) {
        std::vector<int> cur;
        if (detail::choose(d, n, k, 0, cur, nullptr)) return k;
    }
    return n;
}

/// Every strong metric basis.
inline std::vector<std::vector<int>> all_bases(const Graph& g) {
    auto d = distances(g);
    const int n = static_cast<int>(g.order());
    const int k = strong_dim(g);
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    detail::choose(d, n, k, 0, cur, &all);
    return all;
}

inline bool in_some_basis(const Graph& g, int v) {
    for (const auto& b : all_bases(g))
        if (std::find(b.begin(), b.end(), v) != b.end()) return true;
    return false;
}

/// Vertex cover number by bitmask enumeration (order <= 24).
inline int cover_number(const Graph& g) {
    const int n = static_cast<int>(g.order());
    int best = n;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        const int c = __builtin_popcount(m);
        if (c >= best) continue;
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!(m >> u & 1) && !(m >> v & 1)) {
                ok = false;
                break;
            }
        if (ok) best = c;
    }
    return best;
}

inline bool twins(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y)) return false;
    for (int z = 0; z < static_cast<int>(g.order()); ++z)
        if (z != x && z != y && g.has_edge(x, z) != g.has_edge(y, z)) return false;
    return true;
}

/// (ω, ϖ) by enumerating all vertex subsets (order <= 16).
inline std::pair<int, int> clique_numbers(const Graph& g) {
    const int n = static_cast<int>(g.order());
    int omega = n > 0 ? 1 : 0, varpi = omega;
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) {
        bool clique = true, twin_free = true;
        for (int u = 0; u < n && clique; ++u)
            for (int v = u + 1; v < n && clique; ++v)
                if ((m >> u & 1) && (m >> v & 1)) {
                    if (!g.has_edge(u, v)) clique = false;
                    else if (twins(g, u, v)) twin_free = false;
                }
        if (!clique) continue;
        const int c = __builtin_popcount(m);
        omega = std::max(omega, c);
        if (twin_free) varpi = std::max(varpi, c);
    }
    return {omega, varpi};
}

/// G(n, p) sample with no connectivity repair, so it may be disconnected.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<strongdim::Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (U(rng) < p) es.emplace_back(u, v);
    return Graph(static_cast<std::size_t>(n), std::move(es));
}

inline bool connected(const Graph& g) {
    auto d = distances(g);
    for (const auto& row : d)
        for (int x : row)
            if (x < 0) return false;
    return true;
}

/// Random connected graph by rejection (independent of the library's generator).
inline Graph random_connected(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.3, 0.9);
    for (;;) {
        auto g = random_graph(n, U(rng), rng);
        if (connected(g)) return g;
    }
}

inline int leaf_count(const Graph& g) {
    int c = 0;
    for (std::size_t v = 0; v < g.order(); ++v) c += g.degree(static_cast<Vertex>(v)) == 1;
    return c;
}

template <typename Set>
std::vector<Vertex> ids(const Set& s) {
    return std::vector<Vertex>(s.begin(), s.end());
}

}  // namespace brute

#endif
