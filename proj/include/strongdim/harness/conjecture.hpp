#ifndef STRONGDIM_HARNESS_CONJECTURE_HPP
#define STRONGDIM_HARNESS_CONJECTURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "strongdim/generators.hpp"
#include "strongdim/graph6.hpp"
#include "strongdim/harness/verify.hpp"
#include "strongdim/metrics.hpp"

namespace strongdim::harness {

// Search for roots v outside the boundary with i(v) or i'(v) nonempty.
// The claim is open; findings are reported, never suppressed.

enum class ConjectureMode {
    matching,  ///< only H whose SR graph is a perfect matching; checks i and i'
    all,       ///< every H; checks i alone (i' is not canonical there)
};

inline std::string_view to_string(ConjectureMode m) { return m == ConjectureMode::matching ? "matching" : "all"; }

inline ConjectureMode parse_conjecture_mode(std::string_view s) {
    if (s == "matching") return ConjectureMode::matching;
    if (s == "all") return ConjectureMode::all;
    throw invalid_input("unknown conjecture mode '" + std::string(s) + "' (expected matching or all)");
}

struct ConjectureOptions {
    std::size_t min_order = 3;
    std::size_t max_order = 9;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    ConjectureMode mode = ConjectureMode::matching;
    std::size_t workers = 1;
};

struct ConjectureFinding {
    std::size_t sample = 0;
    std::string g6;
    Vertex root = 0;
    VertexSet max_distant;
    VertexSet isolated;
    VertexSet partners;
};

struct ConjectureReport {
    ConjectureOptions options;
    std::size_t samples = 0;
    std::size_t filtered_not_matching = 0;  ///< graphs outside the matching-SR hypothesis
    std::size_t filtered_boundary_roots = 0;  ///< roots skipped because they lie in the boundary
    std::size_t graphs_without_inner_root = 0;
    std::size_t roots_checked = 0;
    std::vector<ConjectureFinding> findings;
};

namespace detail {

struct SampleOutcome {
    bool not_matching = false;
    std::size_t boundary_roots = 0;
    std::size_t checked = 0;
    std::vector<ConjectureFinding> findings;
};

inline SampleOutcome conjecture_sample(std::size_t index, const ConjectureOptions& o) {
    SampleOutcome out;
    std::mt19937_64 rng(instance_seed(o.seed, index));
    const auto n = o.min_order + static_cast<std::size_t>(below(rng, o.max_order - o.min_order + 1));
    const double p = 0.15 + 0.75 * unit(rng);
    Graph h = random_connected(n, p, rng());
    auto d = bfs_distances(h);
    auto sr = strong_resolving_graph(d, h);
    if (o.mode == ConjectureMode::matching && !sr_is_perfect_matching(sr)) {
        out.not_matching = true;
        return out;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (sr.vertices().contains(static_cast<Vertex>(v))) {
            ++out.boundary_roots;
            continue;
        }
        ++out.checked;
        auto ctx = root_context(d, h, sr, static_cast<Vertex>(v));
        const bool hit = !ctx.isolated.empty() || (o.mode == ConjectureMode::matching && !ctx.partners.empty());
        if (!hit) continue;
        ConjectureFinding f;
        f.sample = index;
        f.g6 = serialize_graph6(h);
        f.root = static_cast<Vertex>(v);
        f.max_distant = ctx.max_distant;
        f.isolated = ctx.isolated;
        f.partners = ctx.partners;
        out.findings.push_back(std::move(f));
    }
    return out;
}

}  // namespace detail

inline ConjectureReport conjecture_search(const ConjectureOptions& o) {
    if (o.min_order < 2 || o.max_order < o.min_order)
        throw invalid_input("conjecture search needs 2 <= min order <= max order");
    auto outcomes = parallel_map<detail::SampleOutcome>(o.samples, o.workers,
                                                        [&](std::size_t i) { return detail::conjecture_sample(i, o); });
    ConjectureReport rep;
    rep.options = o;
    rep.samples = o.samples;
    for (auto& s : outcomes) {
        rep.filtered_not_matching += s.not_matching;
        rep.filtered_boundary_roots += s.boundary_roots;
        rep.roots_checked += s.checked;
        if (!s.not_matching && s.checked == 0) ++rep.graphs_without_inner_root;
        for (auto& f : s.findings) rep.findings.push_back(std::move(f));
    }
    return rep;
}

/// Recomputes a finding from its reproducer alone.
inline bool reproduces(const ConjectureFinding& f) {
    Graph h = parse_graph6(f.g6);
    auto d = bfs_distances(h);
    auto sr = strong_resolving_graph(d, h);
    if (sr.vertices().contains(f.root)) return false;
    auto ctx = root_context(d, h, sr, f.root);
    return ctx.max_distant == f.max_distant && ctx.isolated == f.isolated && ctx.partners == f.partners;
}

}  // namespace strongdim::harness

#endif
