#ifndef STRONGDIM_HARNESS_ORACLE_HPP
#define STRONGDIM_HARNESS_ORACLE_HPP

#include <chrono>
#include <cstdint>
#include <vector>

#include "strongdim/cover.hpp"
#include "strongdim/graph.hpp"

namespace strongdim::harness {

// Definitional checks. Nothing here touches boundaries, strong resolving
// graphs or covers: distances come from Floyd-Warshall and dim_s from
// subset enumeration.

inline std::vector<int> floyd_warshall(const Graph& g) {
    const std::size_t n = g.order();
    const int inf = static_cast<int>(n) + 1;
    std::vector<int> d(n * n, inf);
    for (std::size_t u = 0; u < n; ++u) d[u * n + u] = 0;
    for (auto [u, v] : g.edges()) d[u * n + v] = d[v * n + u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i * n + k] + d[k * n + j] < d[i * n + j]) d[i * n + j] = d[i * n + k] + d[k * n + j];
    for (int x : d)
        if (x >= inf) throw invalid_input("oracle needs a connected graph");
    return d;
}

/// w strongly resolves u, v: some shortest w-u path contains v or some shortest w-v path contains u.
inline bool strongly_resolves(const std::vector<int>& d, std::size_t n, Vertex w, Vertex u, Vertex v) {
    auto D = [&](Vertex a, Vertex b) { return d[static_cast<std::size_t>(a) * n + b]; };
    return D(w, u) == D(w, v) + D(v, u) || D(w, v) == D(w, u) + D(u, v);
}

inline bool is_strong_metric_generator(const Graph& g, const VertexSet& s) {
    const std::size_t n = g.order();
    auto d = floyd_warshall(g);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            bool ok = false;
            for (Vertex w : s)
                if (strongly_resolves(d, n, w, static_cast<Vertex>(u), static_cast<Vertex>(v))) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
    return true;
}

constexpr std::size_t default_oracle_order = 12;

/// dim_s by enumerating vertex subsets in increasing size. Refuses graphs above max_order.
inline DimReport oracle_strong_dimension(const Graph& g, std::size_t max_order = default_oracle_order) {
    const std::size_t n = g.order();
    if (n < 2) throw invalid_input("oracle needs a connected graph with at least 2 vertices");
    if (n > max_order || n > 24)
        throw budget_exceeded("oracle limited to " + std::to_string(max_order) + " vertices, graph has " +
                              std::to_string(n));
    auto t0 = std::chrono::steady_clock::now();
    auto d = floyd_warshall(g);
    // resolvers[p]: bitmask of vertices strongly resolving pair p
    std::vector<std::uint32_t> resolvers;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            std::uint32_t m = 0;
            for (std::size_t w = 0; w < n; ++w)
                if (strongly_resolves(d, n, static_cast<Vertex>(w), static_cast<Vertex>(u), static_cast<Vertex>(v)))
                    m |= std::uint32_t{1} << w;
            resolvers.push_back(m);
        }
    std::uint64_t tried = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        // Gosper's hack over k-subsets in increasing numeric order
        std::uint32_t s = (std::uint32_t{1} << k) - 1;
        const std::uint32_t limit = std::uint32_t{1} << n;
        while (s < limit) {
            ++tried;
            bool ok = true;
            for (auto m : resolvers)
                if (!(m & s)) {
                    ok = false;
                    break;
                }
            if (ok) {
                std::vector<Vertex> ids;
                for (std::size_t w = 0; w < n; ++w)
                    if (s >> w & 1) ids.push_back(static_cast<Vertex>(w));
                DimReport rep;
                rep.value = k;
                rep.basis = VertexSet::over(n, std::move(ids));
                rep.method = "oracle";
                rep.branch_nodes = tried;
                rep.elapsed_ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                return rep;
            }
            std::uint32_t c = s & (~s + 1), r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    throw error("oracle found no strong metric generator");  // unreachable: V itself resolves everything
}

}  // namespace strongdim::harness

#endif
