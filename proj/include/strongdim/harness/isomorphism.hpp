#ifndef STRONGDIM_HARNESS_ISOMORPHISM_HPP
#define STRONGDIM_HARNESS_ISOMORPHISM_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "strongdim/graph.hpp"

namespace strongdim::harness {

namespace detail {

// Vertex colour: degree plus the multiset of neighbour degrees. Isomorphisms
// preserve it, so candidates are only tried within equal colours.
inline std::vector<std::vector<std::size_t>> colours(const Graph& g) {
    std::vector<std::vector<std::size_t>> c(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        auto& x = c[v];
        x.push_back(g.degree(static_cast<Vertex>(v)));
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) x.push_back(g.degree(w));
        std::sort(x.begin() + 1, x.end());
    }
    return c;
}

class Matcher {
  public:
    Matcher(const Graph& a, const Graph& b) : a_(a), b_(b), ca_(colours(a)), cb_(colours(b)) {
        // visit a's vertices so each new one is adjacent to an earlier one when possible
        std::vector<char> placed(a.order(), 0);
        for (std::size_t s = 0; s < a.order(); ++s) {
            if (placed[s]) continue;
            std::size_t head = order_.size();
            order_.push_back(static_cast<Vertex>(s));
            placed[s] = 1;
            for (; head < order_.size(); ++head)
                for (Vertex w : a.neighbors(order_[head]))
                    if (!placed[w]) {
                        placed[w] = 1;
                        order_.push_back(w);
                    }
        }
        map_.assign(a.order(), -1);
        used_.assign(b.order(), 0);
    }

    std::optional<std::vector<Vertex>> run() {
        if (extend(0)) return map_;
        return std::nullopt;
    }

  private:
    bool extend(std::size_t k) {
        if (k == order_.size()) return true;
        const Vertex x = order_[k];
        for (std::size_t y = 0; y < b_.order(); ++y) {
            if (used_[y] || ca_[x] != cb_[y]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                const Vertex p = order_[j];
                ok = a_.has_edge(x, p) == b_.has_edge(static_cast<Vertex>(y), map_[p]);
            }
            if (!ok) continue;
            map_[x] = static_cast<Vertex>(y);
            used_[y] = 1;
            if (extend(k + 1)) return true;
            used_[y] = 0;
            map_[x] = -1;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::vector<std::vector<std::size_t>> ca_, cb_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    std::vector<char> used_;
};

}  // namespace detail

/// An isomorphism a -> b (map[v] is the image of v), if one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
    auto ca = detail::colours(a), cb = detail::colours(b);
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
    return detail::Matcher(a, b).run();
}

inline bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace strongdim::harness

#endif
