#ifndef STRONGDIM_GENERATORS_HPP
#define STRONGDIM_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "strongdim/graph.hpp"

namespace strongdim {

// Standard families. Vertex orders follow the usual conventions: cycles and
// paths are numbered along the cycle/path, the star centre is 0, hypercube
// vertex ids are their bit strings.

inline Graph complete(std::size_t n) {
    if (n < 1) throw invalid_input("complete graph needs n >= 1");
    std::vector<Edge> es;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

inline Graph path(std::size_t n) {
    if (n < 1) throw invalid_input("path needs n >= 1");
    std::vector<Edge> es;
    for (std::size_t u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
    return Graph(n, std::move(es));
}

inline Graph cycle(std::size_t n) {
    if (n < 3) throw invalid_input("cycle needs n >= 3");
    std::vector<Edge> es;
    for (std::size_t u = 0; u < n; ++u) es.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(es));
}

/// K_{1,k}: centre 0, leaves 1..k.
inline Graph star(std::size_t k) {
    if (k < 1) throw invalid_input("star needs k >= 1");
    std::vector<Edge> es;
    for (std::size_t i = 1; i <= k; ++i) es.emplace_back(0, i);
    return Graph(k + 1, std::move(es));
}

inline Graph hypercube(std::size_t k) {
    if (k < 1 || k > 16) throw invalid_input("hypercube dimension must be in 1..16");
    const std::size_t n = std::size_t{1} << k;
    std::vector<Edge> es;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t b = 0; b < k; ++b) {
            std::size_t v = u ^ (std::size_t{1} << b);
            if (u < v) es.emplace_back(u, v);
        }
    return Graph(n, std::move(es));
}

/// Parts are laid out consecutively; vertices in different parts are adjacent.
inline Graph complete_multipartite(const std::vector<std::size_t>& parts) {
    if (parts.empty()) throw invalid_input("complete multipartite graph needs at least one part");
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw invalid_input("every part needs at least one vertex");
        part_of.insert(part_of.end(), parts[p], p);
    }
    std::vector<Edge> es;
    for (std::size_t u = 0; u < part_of.size(); ++u)
        for (std::size_t v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v]) es.emplace_back(u, v);
    return Graph(part_of.size(), std::move(es));
}

/// Edgeless graph on n vertices.
inline Graph empty_graph(std::size_t n) { return Graph(n); }

/// Disjoint union; vertices of b follow those of a.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    const auto off = static_cast<Vertex>(a.order());
    for (auto [u, v] : b.edges()) es.emplace_back(u + off, v + off);
    return Graph(a.order() + b.order(), std::move(es));
}

namespace detail {

/// Uniform double in [0,1) from the top 53 bits; identical on every platform.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, bound) by rejection; identical on every platform.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

}  // namespace detail

/// G(n, p) sample, then components are chained together by one edge between
/// consecutive components' smallest vertices. Deterministic per seed.
inline Graph random_connected(std::size_t n, double edge_prob, std::uint64_t seed) {
    if (n < 1) throw invalid_input("random_connected needs n >= 1");
    if (!(edge_prob > 0.0 && edge_prob <= 1.0)) throw invalid_input("edge probability must be in (0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> es;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (detail::unit(rng) < edge_prob) es.emplace_back(u, v);
    Graph sample(n, es);
    auto comps = components(sample);
    for (std::size_t c = 1; c < comps.size(); ++c) es.emplace_back(comps[c - 1][0], comps[c][0]);
    return Graph(n, std::move(es));
}

/// Uniform labelled tree via a random Prufer sequence.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw invalid_input("random_tree needs n >= 1");
    if (n == 1) return Graph(1);
    if (n == 2) return path(2);
    std::mt19937_64 rng(seed);
    std::vector<Vertex> prufer(n - 2);
    for (auto& x : prufer) x = static_cast<Vertex>(detail::below(rng, n));
    std::vector<int> deg(n, 1);
    for (Vertex x : prufer) ++deg[x];
    std::vector<Edge> es;
    for (Vertex x : prufer) {
        Vertex leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        es.emplace_back(leaf, x);
        --deg[leaf];
        --deg[x];
    }
    Vertex a = -1, b = -1;
    for (std::size_t v = 0; v < n; ++v)
        if (deg[v] == 1) (a < 0 ? a : b) = static_cast<Vertex>(v);
    es.emplace_back(a, b);
    return Graph(n, std::move(es));
}

}  // namespace strongdim

#endif
