#ifndef STRONGDIM_PRODUCTS_HPP
#define STRONGDIM_PRODUCTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "strongdim/graph.hpp"

namespace strongdim {

/// A constructed product together with its (g-vertex, h-vertex) coordinates.
///
/// Copy x of the factor graph occupies ids offset(x) .. offset(x)+order(x)-1.
/// Rooted products use copy-major layout (offset(x) = x * |V(H)| when all
/// copies are equal). Corona products place the vertices of G first and the
/// copies of H after them; there the h-coordinate 0 is the apex (the G-vertex
/// itself) and h-coordinate k >= 1 is vertex k-1 of H.
class ProductMap {
  public:
    ProductMap(Graph product, std::size_t g_order, std::vector<std::size_t> copy_orders,
               std::vector<Vertex> roots, std::vector<std::vector<Vertex>> pair_to_id)
        : product_(std::move(product)),
          g_order_(g_order),
          copy_orders_(std::move(copy_orders)),
          roots_(std::move(roots)),
          pair_to_id_(std::move(pair_to_id)),
          id_to_pair_(product_.order(), {-1, -1}) {
        for (std::size_t x = 0; x < pair_to_id_.size(); ++x)
            for (std::size_t h = 0; h < pair_to_id_[x].size(); ++h)
                id_to_pair_.at(pair_to_id_[x][h]) = {static_cast<Vertex>(x), static_cast<Vertex>(h)};
    }

    const Graph& graph() const { return product_; }
    std::size_t g_order() const { return g_order_; }
    std::size_t copy_order(Vertex x) const { return copy_orders_.at(x); }
    const std::vector<std::size_t>& copy_orders() const { return copy_orders_; }
    /// Root h-coordinate of copy x.
    Vertex root(Vertex x) const { return roots_.at(x); }

    Vertex id(Vertex g_vertex, Vertex h_vertex) const { return pair_to_id_.at(g_vertex).at(h_vertex); }
    std::pair<Vertex, Vertex> coords(Vertex id) const { return id_to_pair_.at(id); }

    /// B_x: members of `s` whose first coordinate is x.
    std::vector<Vertex> copy_part(const VertexSet& s, Vertex x) const {
        std::vector<Vertex> out;
        for (Vertex v : s)
            if (coords(v).first == x) out.push_back(v);
        return out;
    }

    /// All ids of copy x in h-coordinate order.
    std::vector<Vertex> copy_ids(Vertex x) const { return pair_to_id_.at(x); }

  private:
    Graph product_;
    std::size_t g_order_;
    std::vector<std::size_t> copy_orders_;
    std::vector<Vertex> roots_;
    std::vector<std::vector<Vertex>> pair_to_id_;
    std::vector<std::pair<Vertex, Vertex>> id_to_pair_;
};

/// A factor graph with a distinguished root vertex.
struct RootedGraph {
    Graph graph;
    Vertex root = 0;
};

/// G(H_1, ..., H_n): copy i is H_i with its root identified with vertex i of G.
inline ProductMap rooted_product_sequence(const Graph& g, const std::vector<RootedGraph>& hs) {
    if (hs.size() != g.order())
        throw invalid_input("rooted product needs one rooted graph per vertex of G (" + std::to_string(g.order()) +
                            "), got " + std::to_string(hs.size()));
    std::vector<std::size_t> orders, offsets;
    std::vector<Vertex> roots;
    std::size_t total = 0;
    for (const auto& h : hs) {
        if (h.graph.order() < 1) throw invalid_input("rooted factor must have at least one vertex");
        if (h.root < 0 || static_cast<std::size_t>(h.root) >= h.graph.order())
            throw invalid_input("root " + std::to_string(h.root) + " is not a vertex of its factor");
        offsets.push_back(total);
        orders.push_back(h.graph.order());
        roots.push_back(h.root);
        total += h.graph.order();
    }
    std::vector<std::vector<Vertex>> ids(g.order());
    std::vector<Edge> es;
    for (std::size_t x = 0; x < hs.size(); ++x) {
        const auto off = static_cast<Vertex>(offsets[x]);
        for (std::size_t h = 0; h < orders[x]; ++h) ids[x].push_back(off + static_cast<Vertex>(h));
        for (auto [a, b] : hs[x].graph.edges()) es.emplace_back(off + a, off + b);
    }
    for (auto [a, b] : g.edges()) es.emplace_back(ids[a][roots[a]], ids[b][roots[b]]);
    return ProductMap(Graph(total, std::move(es)), g.order(), std::move(orders), std::move(roots), std::move(ids));
}

/// G o_v H: every vertex of G carries a copy of H rooted at v.
inline ProductMap rooted_product(const Graph& g, const Graph& h, Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= h.order())
        throw invalid_input("root " + std::to_string(v) + " is not a vertex of H");
    return rooted_product_sequence(g, std::vector<RootedGraph>(g.order(), RootedGraph{h, v}));
}

/// K_1 + H with the apex as vertex 0 and H's vertices shifted by one.
inline std::pair<Graph, Vertex> join_k1(const Graph& h) {
    std::vector<Edge> es;
    for (std::size_t x = 0; x < h.order(); ++x) es.emplace_back(0, static_cast<Vertex>(x) + 1);
    for (auto [a, b] : h.edges()) es.emplace_back(a + 1, b + 1);
    return {Graph(h.order() + 1, std::move(es)), 0};
}

/// G (.) H: one copy of G, n copies of H, every vertex of copy i joined to vertex i.
inline ProductMap corona_product(const Graph& g, const Graph& h) {
    const std::size_t n = g.order(), t = h.order();
    if (n < 1) throw invalid_input("corona product needs G with at least one vertex");
    std::vector<Edge> es = g.edges();
    std::vector<std::vector<Vertex>> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto base = static_cast<Vertex>(n + i * t);
        ids[i].push_back(static_cast<Vertex>(i));
        for (std::size_t x = 0; x < t; ++x) {
            ids[i].push_back(base + static_cast<Vertex>(x));
            es.emplace_back(static_cast<Vertex>(i), base + static_cast<Vertex>(x));
        }
        for (auto [a, b] : h.edges()) es.emplace_back(base + a, base + b);
    }
    return ProductMap(Graph(n * (1 + t), std::move(es)), n, std::vector<std::size_t>(n, t + 1),
                      std::vector<Vertex>(n, 0), std::move(ids));
}

// ---- family F ----

/// Parameters of H_{t,p,r}: an odd cycle x_1..x_t with a pendant y at x_t,
/// the chord x_1 x_{t-1}, p pendants w_i at x_{floor(t/2)} and r pendants z_j
/// at x_{ceil(t/2)}.
struct FamilyFSpec {
    std::size_t t = 5;
    std::size_t p = 1;
    std::size_t r = 1;

    void validate() const {
        if (t < 5 || t % 2 == 0) throw invalid_input("family F needs odd t >= 5, got t=" + std::to_string(t));
        if (p < 1 || r < 1) throw invalid_input("family F needs p >= 1 and r >= 1");
    }
    std::size_t order() const { return t + 1 + p + r; }
    /// dim_s(H_{t,p,r}) = (t-5)/2 + p + r
    std::size_t strong_dimension() const { return (t - 5) / 2 + p + r; }
};

struct FamilyFMarks {
    Vertex y;
    Vertex x_t;
    Vertex x_1;
    Vertex x_t_minus_1;
    std::vector<Vertex> x;  ///< x[k-1] is x_k
    std::vector<Vertex> w;
    std::vector<Vertex> z;
};

struct FamilyFGraph {
    Graph graph;
    FamilyFMarks marks;
};

/// Ids: x_1..x_t are 0..t-1, y is t, then w_1..w_p, then z_1..z_r.
inline FamilyFGraph family_F(const FamilyFSpec& spec) {
    spec.validate();
    const std::size_t t = spec.t;
    FamilyFMarks m;
    std::vector<std::string> labels;
    for (std::size_t k = 1; k <= t; ++k) {
        m.x.push_back(static_cast<Vertex>(k - 1));
        labels.push_back("x" + std::to_string(k));
    }
    m.y = static_cast<Vertex>(t);
    labels.push_back("y");
    for (std::size_t i = 1; i <= spec.p; ++i) {
        m.w.push_back(static_cast<Vertex>(labels.size()));
        labels.push_back("w" + std::to_string(i));
    }
    for (std::size_t j = 1; j <= spec.r; ++j) {
        m.z.push_back(static_cast<Vertex>(labels.size()));
        labels.push_back("z" + std::to_string(j));
    }
    m.x_1 = m.x.front();
    m.x_t = m.x.back();
    m.x_t_minus_1 = m.x[t - 2];

    auto X = [&](std::size_t k) { return m.x[k - 1]; };
    std::vector<Edge> es;
    for (std::size_t k = 1; k <= t; ++k) es.emplace_back(X(k), X(k % t + 1));
    es.emplace_back(m.y, m.x_t);
    es.emplace_back(m.x_1, m.x_t_minus_1);
    for (Vertex w : m.w) es.emplace_back(X(t / 2), w);
    for (Vertex z : m.z) es.emplace_back(X((t + 1) / 2), z);
    const std::size_t n = labels.size();
    return {Graph(n, std::move(es), std::move(labels)), std::move(m)};
}

}  // namespace strongdim

#endif
