#ifndef STRONGDIM_FORMULAS_HPP
#define STRONGDIM_FORMULAS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strongdim/cover.hpp"
#include "strongdim/graph.hpp"
#include "strongdim/metrics.hpp"
#include "strongdim/products.hpp"

namespace strongdim {

// Closed formulas and bounds for dim_s of rooted and corona products. Every
// function checks its hypotheses exactly and throws `refusal` when they fail;
// none of them falls back to solving the product.

enum class FormulaCase {
    simplicial_boundary_root,   // ∂(H)=σ(H), v ∈ ∂(H): n(|∂(H)|-1)-1
    simplicial_inner_root,      // ∂(H)=σ(H), v ∉ ∂(H): n|∂(H)|-1
    matching_sr_outside,        // H_SR a union of K_2, v ∉ ∂(H)
    matching_sr_boundary,       // H_SR a union of K_2, v ∈ ∂(H)
    antipodal,                  // H 2-antipodal: nn'/2-1
    cycle,                      // r⌈t/2⌉-1
    corona_twin_free,           // rt - ϖ(H)
    corona_triangle_free,       // rt - 2
    corona_diameter_two,        // (r-1)t + dim_s(H)
    corona_diameter_large,      // (r-1)t + dim_s(K_1+H)
    corona_no_twins,            // rt - ω(H)
    corona_full_degree_twins,   // rt + c(H) - 1 - ω(H)
    universal_twin_free,        // r(t-1) - ϖ(H-v)
    universal_triangle_free,    // r(t-1) - 2
    universal_diameter_two,     // (r-1)(t-1) + dim_s(H-v)
    universal_diameter_large,   // (r-1)(t-1) + dim_s(H)
    universal_no_twins,         // r(t-1) - ω(H-v)
    universal_full_degree_twins,// r(t-1) + c(H-v) - 1 - ω(H-v)
    bounds_in_basis,            // v in some basis of H
    bounds_outside_boundary,    // v in no basis, v ∉ ∂(H)
    bounds_boundary_no_basis,   // v in no basis, v ∈ ∂(H)
    pendant_lower,              // n(dim_s(H)+1)-1 lower bound
    family_root_y,              // n dim_s(H_{t,p,r})
    family_root_x_t,            // n(dim_s(H_{t,p,r})+1)-1
    family_base,                // dim_s(H_{t,p,r}) = (t-5)/2 + p + r
};

inline std::string_view to_string(FormulaCase c) {
    switch (c) {
        case FormulaCase::simplicial_boundary_root: return "simplicial.boundary_root";
        case FormulaCase::simplicial_inner_root: return "simplicial.inner_root";
        case FormulaCase::matching_sr_outside: return "matching_sr.outside_boundary";
        case FormulaCase::matching_sr_boundary: return "matching_sr.in_boundary";
        case FormulaCase::antipodal: return "antipodal";
        case FormulaCase::cycle: return "cycle";
        case FormulaCase::corona_twin_free: return "corona.twin_free_clique";
        case FormulaCase::corona_triangle_free: return "corona.triangle_free";
        case FormulaCase::corona_diameter_two: return "corona.diameter_two";
        case FormulaCase::corona_diameter_large: return "corona.disconnected_or_diameter_gt_two";
        case FormulaCase::corona_no_twins: return "corona.no_true_twins";
        case FormulaCase::corona_full_degree_twins: return "corona.full_degree_twins";
        case FormulaCase::universal_twin_free: return "universal_root.twin_free_clique";
        case FormulaCase::universal_triangle_free: return "universal_root.triangle_free";
        case FormulaCase::universal_diameter_two: return "universal_root.diameter_two";
        case FormulaCase::universal_diameter_large: return "universal_root.disconnected_or_diameter_gt_two";
        case FormulaCase::universal_no_twins: return "universal_root.no_true_twins";
        case FormulaCase::universal_full_degree_twins: return "universal_root.full_degree_twins";
        case FormulaCase::bounds_in_basis: return "bounds.root_in_basis";
        case FormulaCase::bounds_outside_boundary: return "bounds.root_outside_boundary";
        case FormulaCase::bounds_boundary_no_basis: return "bounds.root_in_boundary_no_basis";
        case FormulaCase::pendant_lower: return "pendant.lower_bound";
        case FormulaCase::family_root_y: return "family.root_y";
        case FormulaCase::family_root_x_t: return "family.root_x_t";
        case FormulaCase::family_base: return "family.base";
    }
    return "unknown";
}

struct FiredBranch {
    FormulaCase which;
    std::int64_t value;
};

/// Value (or interval) produced by a formula, with the checks it verified.
struct FormulaResult {
    FormulaCase which{};
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;  ///< equal to lower for exact values; empty for one-sided bounds
    std::vector<std::string> checks;
    std::vector<FiredBranch> fired;     ///< multi-branch formulas list every branch that applied

    bool exact() const { return upper && *upper == lower; }
    std::int64_t value() const {
        if (!exact()) throw error("formula result is a bound, not a value");
        return lower;
    }
    bool contains(std::int64_t x) const { return x >= lower && (!upper || x <= *upper); }
    bool branches_agree() const {
        for (const auto& b : fired)
            if (b.value != fired.front().value) return false;
        return true;
    }
};

namespace detail {

inline FormulaResult exact_result(FormulaCase c, std::int64_t v, std::vector<std::string> checks) {
    FormulaResult r;
    r.which = c;
    r.lower = v;
    r.upper = v;
    r.checks = std::move(checks);
    return r;
}

inline void require_connected(const Graph& h, const char* name, const std::string& formula) {
    if (h.order() < 2) throw refusal(formula, {std::string(name) + " needs at least 2 vertices"});
    if (!is_connected(h)) throw refusal(formula, {std::string(name) + " is not connected"});
}

inline void require_root(const Graph& h, Vertex v, const std::string& formula) {
    if (v < 0 || static_cast<std::size_t>(v) >= h.order())
        throw refusal(formula, {"root " + std::to_string(v) + " is not a vertex of H"});
}

inline std::int64_t as_int(std::size_t x) { return static_cast<std::int64_t>(x); }

}  // namespace detail

/// Rooted product with ∂(H) = σ(H).
inline FormulaResult dim_simplicial_boundary(const Graph& g, const Graph& h, Vertex v) {
    const std::string f = "simplicial";
    if (g.order() < 2) throw refusal(f, {"G needs order >= 2"});
    detail::require_connected(h, "H", f);
    detail::require_root(h, v, f);
    auto d = bfs_distances(h);
    auto bd = boundary(d, h);
    auto simp = simplicial(h);
    if (bd != simp) {
        for (Vertex x : bd)
            if (!simp.contains(x))
                throw refusal(f, {"boundary differs from simplicial set: vertex " + std::to_string(x) +
                                      " is in the boundary but not simplicial"});
    }
    const auto n = detail::as_int(g.order()), b = detail::as_int(bd.size());
    std::vector<std::string> checks{"G order >= 2", "H connected", "boundary(H) == simplicial(H)"};
    if (bd.contains(v)) return detail::exact_result(FormulaCase::simplicial_boundary_root, n * (b - 1) - 1, checks);
    return detail::exact_result(FormulaCase::simplicial_inner_root, n * b - 1, checks);
}

/// Rooted product with H_SR a disjoint union of K_2.
inline FormulaResult dim_matching_sr(const Graph& g, const Graph& h, Vertex v) {
    const std::string f = "matching_sr";
    if (g.order() < 2) throw refusal(f, {"G needs order >= 2"});
    detail::require_connected(h, "H", f);
    detail::require_root(h, v, f);
    auto d = bfs_distances(h);
    auto sr = strong_resolving_graph(d, h);
    if (!sr_is_perfect_matching(sr)) throw refusal(f, {"strong resolving graph of H is not a union of K_2"});
    auto ctx = root_context(d, h, sr, v);
    const auto n = detail::as_int(g.order());
    const auto b = detail::as_int(sr.vertices().size());
    const auto m = detail::as_int(ctx.max_distant.size());
    const auto i = detail::as_int(ctx.isolated.size());
    const bool in_boundary = sr.vertices().contains(v);
    std::int64_t numerator = n * (b + m - i) - m + i - (in_boundary ? 2 : 0);
    if (numerator % 2 != 0)
        throw formula_inconsistency("matching-SR formula numerator " + std::to_string(numerator) +
                                    " is odd (|∂|=" + std::to_string(b) + ", |M|=" + std::to_string(m) +
                                    ", |i|=" + std::to_string(i) + ", n=" + std::to_string(n) + ")");
    return detail::exact_result(in_boundary ? FormulaCase::matching_sr_boundary : FormulaCase::matching_sr_outside,
                                numerator / 2, {"G order >= 2", "H connected", "H_SR is a perfect matching"});
}

/// G o H with H 2-antipodal of order n': n n'/2 - 1.
inline FormulaResult dim_antipodal(std::size_t n, const Graph& h) {
    const std::string f = "antipodal";
    if (n < 2) throw refusal(f, {"G needs order >= 2"});
    detail::require_connected(h, "H", f);
    if (!is_2_antipodal(bfs_distances(h))) throw refusal(f, {"H is not 2-antipodal"});
    return detail::exact_result(FormulaCase::antipodal, detail::as_int(n * h.order() / 2) - 1,
                                {"G order >= 2", "H connected", "H 2-antipodal"});
}

/// G o C_t for G of order r.
inline FormulaResult dim_cycle_rooted(std::size_t r, std::size_t t) {
    const std::string f = "cycle";
    std::vector<std::string> why;
    if (r < 2) why.push_back("G needs order r >= 2");
    if (t < 3) why.push_back("cycle needs t >= 3");
    if (!why.empty()) throw refusal(f, why);
    return detail::exact_result(FormulaCase::cycle, detail::as_int(r * ((t + 1) / 2)) - 1, {"r >= 2", "t >= 3"});
}

namespace detail {

struct CoronaCases {
    FormulaCase twin_free, triangle_free, diameter_two, diameter_large, no_twins, full_degree_twins;
};

// Evaluates every corona-theorem branch for G (.) H with |V(G)| = r, given
// dim_s(K_1 + H) on demand. Branch hypotheses follow the cited statements;
// the triangle-free branch additionally needs a component of order >= 3.
inline FormulaResult corona_branches(const std::string& f, std::size_t r, const Graph& h,
                                     const std::function<std::size_t()>& dim_join, const CoronaCases& cases,
                                     const SolveOptions& opt) {
    const std::size_t t = h.order();
    if (r < 1) throw refusal(f, {"G needs order >= 1"});
    if (t < 1) throw refusal(f, {"H needs at least one vertex"});
    const auto R = as_int(r), T = as_int(t);
    const std::size_t delta = h.max_degree();
    const bool small_degree = delta + 2 <= t;
    const bool connected = is_connected(h);
    const int diam = connected && t >= 2 ? diameter(bfs_distances(h)) : -1;
    const auto twins = true_twins(h);
    const auto universal = universal_vertices(h);

    FormulaResult res;
    std::vector<std::string> failed;
    auto fire = [&](FormulaCase c, std::int64_t v, std::string check) {
        res.fired.push_back({c, v});
        res.checks.push_back(std::move(check));
    };

    if (small_degree || r >= 2)
        fire(cases.twin_free, R * T - as_int(twin_free_clique_number(h)), std::string(to_string(cases.twin_free)) + ": max degree <= t-2 or r >= 2");
    else
        failed.push_back("twin-free clique branch needs max degree <= t-2 or r >= 2");

    {
        bool big_component = false;
        for (const auto& c : components(h)) big_component = big_component || c.size() >= 3;
        if (t >= 3 && is_triangle_free(h) && big_component && (r >= 2 || small_degree))
            fire(cases.triangle_free, R * T - 2, std::string(to_string(cases.triangle_free)) + ": triangle-free, t >= 3, component of order >= 3");
        else
            failed.push_back("triangle-free branch needs a triangle-free H with t >= 3 and a component of order >= 3");
    }

    if (diam == 2 && (small_degree || r >= 2))
        fire(cases.diameter_two, (R - 1) * T + as_int(strong_dimension(h, opt).value), std::string(to_string(cases.diameter_two)) + ": H has diameter 2");
    else
        failed.push_back("diameter-two branch needs H connected of diameter 2");

    if (!connected || diam > 2)
        fire(cases.diameter_large, (R - 1) * T + as_int(dim_join()), std::string(to_string(cases.diameter_large)) + ": H disconnected or diameter > 2");
    else
        failed.push_back("large-diameter branch needs H disconnected or of diameter > 2");

    if (r >= 2 && twins.empty())
        fire(cases.no_twins, R * T - as_int(clique_number(h)), std::string(to_string(cases.no_twins)) + ": H has no true twins");
    else
        failed.push_back("no-twins branch needs r >= 2 and H without true twins");

    {
        bool only_full = !twins.empty();
        for (auto [a, b] : twins) only_full = only_full && universal.contains(a) && universal.contains(b);
        if (r >= 2 && only_full)
            fire(cases.full_degree_twins, R * T + as_int(universal.size()) - 1 - as_int(clique_number(h)),
                 std::string(to_string(cases.full_degree_twins)) + ": all true twins have degree t-1");
        else
            failed.push_back("full-degree-twins branch needs r >= 2 and true twins, all of degree t-1");
    }

    if (res.fired.empty()) throw refusal(f, failed);
    res.which = res.fired.front().which;
    res.lower = res.fired.front().value;
    res.upper = res.lower;
    return res;
}

}  // namespace detail

/// All corona-product theorems applicable to G (.) H with |V(G)| = r.
inline FormulaResult dim_corona(std::size_t r, const Graph& h, const SolveOptions& opt = {}) {
    return detail::corona_branches(
        "corona", r, h, [&] { return strong_dimension(join_k1(h).first, opt).value; },
        {FormulaCase::corona_twin_free, FormulaCase::corona_triangle_free, FormulaCase::corona_diameter_two,
         FormulaCase::corona_diameter_large, FormulaCase::corona_no_twins, FormulaCase::corona_full_degree_twins},
        opt);
}

/// Rooted product at a root of degree |V(H)|-1, via G o_v H ≅ G (.) (H - v).
inline FormulaResult dim_universal_root(const Graph& g, const Graph& h, Vertex v, const SolveOptions& opt = {}) {
    const std::string f = "universal_root";
    if (g.order() < 2) throw refusal(f, {"G needs order >= 2"});
    detail::require_connected(h, "H", f);
    detail::require_root(h, v, f);
    if (h.degree(v) + 1 != h.order())
        throw refusal(f, {"root " + std::to_string(v) + " has degree " + std::to_string(h.degree(v)) +
                              ", not |V(H)|-1"});
    auto r = detail::corona_branches(
        f, g.order(), h.without(v), [&] { return strong_dimension(h, opt).value; },
        {FormulaCase::universal_twin_free, FormulaCase::universal_triangle_free, FormulaCase::universal_diameter_two,
         FormulaCase::universal_diameter_large, FormulaCase::universal_no_twins,
         FormulaCase::universal_full_degree_twins},
        opt);
    r.checks.insert(r.checks.begin(), "root has degree |V(H)|-1");
    return r;
}

/// General lower/upper bounds for dim_s(G o_v H).
inline FormulaResult bounds_general(const Graph& g, const Graph& h, Vertex v, const SolveOptions& opt = {}) {
    const std::string f = "bounds";
    if (g.order() < 2) throw refusal(f, {"G needs order >= 2"});
    if (!is_connected(g)) throw refusal(f, {"G is not connected"});
    detail::require_connected(h, "H", f);
    detail::require_root(h, v, f);
    const auto n = detail::as_int(g.order());
    const auto ds = detail::as_int(strong_dimension(h, opt).value);
    const auto bd = boundary(bfs_distances(h), h);
    const auto b = detail::as_int(bd.size());
    const bool in_boundary = bd.contains(v);
    FormulaResult r;
    r.checks = {"G connected, order >= 2", "H connected"};
    if (v_in_some_basis(h, v, opt)) {
        r.which = FormulaCase::bounds_in_basis;
        r.lower = n * ds - 1;
        r.upper = (b - 1) * (n - 1) + ds - 1;
        r.checks.push_back("root belongs to a strong metric basis of H");
    } else if (!in_boundary) {
        r.which = FormulaCase::bounds_outside_boundary;
        r.lower = n * ds;
        r.upper = b * (n - 1) + ds;
        r.checks.push_back("root in no basis of H and outside its boundary");
    } else {
        r.which = FormulaCase::bounds_boundary_no_basis;
        r.lower = n * ds;
        r.upper = (b - 1) * (n - 1) + ds;
        r.checks.push_back("root in no basis of H but in its boundary");
    }
    return r;
}

/// Lower bound n(dim_s(H)+1)-1 when v ∉ ∂(H) and some other degree-one
/// vertex of H lies in no strong metric basis.
inline FormulaResult bound_pendant(std::size_t n, const Graph& h, Vertex v, const SolveOptions& opt = {}) {
    const std::string f = "pendant";
    if (n < 2) throw refusal(f, {"G needs order >= 2"});
    detail::require_connected(h, "H", f);
    detail::require_root(h, v, f);
    if (boundary(bfs_distances(h), h).contains(v))
        throw refusal(f, {"root " + std::to_string(v) + " lies in the boundary of H"});
    std::optional<Vertex> witness;
    for (std::size_t w = 0; w < h.order() && !witness; ++w) {
        auto x = static_cast<Vertex>(w);
        if (x != v && h.degree(x) == 1 && !v_in_some_basis(h, x, opt)) witness = x;
    }
    if (!witness) throw refusal(f, {"every degree-one vertex other than the root belongs to some strong metric basis"});
    FormulaResult r;
    r.which = FormulaCase::pendant_lower;
    r.lower = detail::as_int(n) * (detail::as_int(strong_dimension(h, opt).value) + 1) - 1;
    r.checks = {"G order >= 2", "root outside boundary(H)",
                "degree-one vertex " + std::to_string(*witness) + " in no strong metric basis"};
    return r;
}

/// dim_s(H_{t,p,r}) itself.
inline FormulaResult family_F_strong_dimension(const FamilyFSpec& spec) {
    try {
        spec.validate();
    } catch (const invalid_input& e) {
        throw refusal("family", {e.what()});
    }
    return detail::exact_result(FormulaCase::family_base, detail::as_int(spec.strong_dimension()),
                                {"t odd, t >= 5", "p, r >= 1"});
}

enum class FamilyRoot { y, x_t };

/// dim_s(G o_v H_{t,p,r}) for |V(G)| = n and v one of the marked roots.
inline FormulaResult family_F_product_value(std::size_t n, const FamilyFSpec& spec, FamilyRoot root) {
    const std::string f = "family";
    try {
        spec.validate();
    } catch (const invalid_input& e) {
        throw refusal(f, {e.what()});
    }
    if (n < 2) throw refusal(f, {"G needs order >= 2"});
    const auto N = detail::as_int(n), ds = detail::as_int(spec.strong_dimension());
    std::vector<std::string> checks{"t odd, t >= 5", "p, r >= 1", "G order >= 2"};
    if (root == FamilyRoot::y) return detail::exact_result(FormulaCase::family_root_y, N * ds, checks);
    return detail::exact_result(FormulaCase::family_root_x_t, N * (ds + 1) - 1, checks);
}

}  // namespace strongdim

#endif
