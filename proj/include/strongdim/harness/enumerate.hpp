#ifndef STRONGDIM_HARNESS_ENUMERATE_HPP
#define STRONGDIM_HARNESS_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "strongdim/graph.hpp"

namespace strongdim::harness {

// Exhaustive corpus of connected graphs up to isomorphism.
//
// Every connected graph on n vertices has a non-cut vertex, so every one
// arises from a connected graph on n-1 vertices by adding a vertex joined to
// a nonempty subset. Candidates are deduplicated by a canonical code: the
// minimum adjacency bit string over all relabellings that list vertices by
// non-increasing degree (degree is invariant, so the minimum is a complete
// isomorphism invariant). Supports n <= 8.

namespace detail {

inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j, graph6 order

class Canonicaliser {
  public:
    Canonicaliser(int n, const std::vector<std::uint32_t>& rows) : n_(n), rows_(rows) {
        std::vector<int> deg(n);
        for (int v = 0; v < n; ++v) deg[v] = __builtin_popcount(rows[v]);
        std::vector<int> vs(n);
        std::iota(vs.begin(), vs.end(), 0);
        std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) { return deg[a] > deg[b]; });
        for (int k = 0; k < n;) {
            int e = k;
            while (e < n && deg[vs[e]] == deg[vs[k]]) ++e;
            classes_.push_back({vs.begin() + k, vs.begin() + e});
            k = e;
        }
        slot_.assign(n, -1);
    }

    std::uint64_t run() {
        best_ = ~std::uint64_t{0};
        place(0, 0);
        return best_;
    }

  private:
    // assigns positions class by class; slot_[pos] = original vertex
    void place(std::size_t cls, int pos) {
        if (cls == classes_.size()) {
            std::uint64_t code = 0;
            for (int j = 1; j < n_; ++j)
                for (int i = 0; i < j; ++i)
                    if (rows_[slot_[i]] >> slot_[j] & 1) code |= std::uint64_t{1} << pair_bit(i, j);
            best_ = std::min(best_, code);
            return;
        }
        auto members = classes_[cls];
        std::sort(members.begin(), members.end());
        do {
            for (std::size_t k = 0; k < members.size(); ++k) slot_[pos + static_cast<int>(k)] = members[k];
            place(cls + 1, pos + static_cast<int>(members.size()));
        } while (std::next_permutation(members.begin(), members.end()));
    }

    int n_;
    const std::vector<std::uint32_t>& rows_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> slot_;
    std::uint64_t best_ = 0;
};

inline Graph decode(int n, std::uint64_t code) {
    std::vector<Edge> es;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code >> pair_bit(i, j) & 1) es.emplace_back(i, j);
    return Graph(static_cast<std::size_t>(n), std::move(es));
}

}  // namespace detail

/// Canonical code of a graph on at most 8 vertices.
inline std::uint64_t canonical_code(const Graph& g) {
    const int n = static_cast<int>(g.order());
    if (n > 8) throw invalid_input("canonical codes support at most 8 vertices");
    std::vector<std::uint32_t> rows(n, 0);
    for (auto [u, v] : g.edges()) {
        rows[u] |= 1u << v;
        rows[v] |= 1u << u;
    }
    return detail::Canonicaliser(n, rows).run();
}

/// All connected graphs on n vertices, one per isomorphism class, in canonical-code order.
inline std::vector<Graph> connected_graphs(std::size_t n) {
    if (n < 1 || n > 8) throw invalid_input("connected graph enumeration supports 1 <= n <= 8");
    std::set<std::uint64_t> codes{0};  // K_1
    for (int k = 2; k <= static_cast<int>(n); ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t prev : codes) {
            std::vector<std::uint32_t> rows(k, 0);
            for (int j = 1; j < k - 1; ++j)
                for (int i = 0; i < j; ++i)
                    if (prev >> detail::pair_bit(i, j) & 1) {
                        rows[i] |= 1u << j;
                        rows[j] |= 1u << i;
                    }
            for (std::uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
                auto r = rows;
                r[k - 1] = mask;
                for (int i = 0; i < k - 1; ++i)
                    if (mask >> i & 1) r[i] |= 1u << (k - 1);
                next.insert(detail::Canonicaliser(k, r).run());
            }
        }
        codes = std::move(next);
    }
    std::vector<Graph> out;
    for (auto c : codes) out.push_back(detail::decode(static_cast<int>(n), c));
    return out;
}

}  // namespace strongdim::harness

#endif
