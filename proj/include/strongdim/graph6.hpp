#ifndef STRONGDIM_GRAPH6_HPP
#define STRONGDIM_GRAPH6_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "strongdim/graph.hpp"

namespace strongdim {

// graph6 layout: an order header (1, 4 or 8 bytes) followed by the upper
// triangle of the adjacency matrix, column by column (x(0,1), x(0,2), x(1,2),
// x(0,3), ...), packed six bits per byte, most significant first, each byte
// offset by 63.

namespace detail {

constexpr int g6_bias = 63;

inline bool g6_printable(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace detail

/// Parses a single graph6 line. An optional ">>graph6<<" prefix and a trailing
/// newline are accepted.
inline Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) pos = header.size();
    std::size_t end = text.size();
    while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;

    auto byte_at = [&](std::size_t i, const char* what) -> int {
        if (i >= end) throw parse_error(std::string("truncated ") + what, i);
        auto c = static_cast<unsigned char>(text[i]);
        if (!detail::g6_printable(c)) throw parse_error(std::string("invalid byte in ") + what, i);
        return c - detail::g6_bias;
    };

    if (pos >= end) throw parse_error("empty graph6 input", pos);
    std::uint64_t n = 0;
    if (static_cast<unsigned char>(text[pos]) != 126) {
        n = byte_at(pos, "order header");
        pos += 1;
    } else if (pos + 1 < end && static_cast<unsigned char>(text[pos + 1]) == 126) {
        for (std::size_t k = 0; k < 6; ++k) n = (n << 6) | byte_at(pos + 2 + k, "order header");
        pos += 8;
    } else {
        for (std::size_t k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos + 1 + k, "order header");
        pos += 4;
    }
    if (n > 100000) throw parse_error("order " + std::to_string(n) + " exceeds supported size", pos);

    const std::uint64_t bits = n > 0 ? n * (n - 1) / 2 : 0;
    const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    std::vector<Edge> edges;
    std::uint64_t i = 0, j = 1;  // current pair (i, j), i < j
    for (std::size_t b = 0; b < bytes; ++b) {
        int chunk = byte_at(pos + b, "adjacency bit field");
        for (int bit = 5; bit >= 0; --bit) {
            bool set = (chunk >> bit) & 1;
            if (j >= n) {
                if (set) throw parse_error("nonzero padding bit", pos + b);
                continue;
            }
            if (set) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    pos += bytes;
    if (pos != end) throw parse_error("trailing garbage after graph6 data", pos);
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline std::string serialize_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    auto put6 = [&](std::uint64_t x) { out.push_back(static_cast<char>(x + detail::g6_bias)); };
    if (n <= 62) {
        put6(n);
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int s = 12; s >= 0; s -= 6) put6((n >> s) & 63);
    } else {
        out.append(2, static_cast<char>(126));
        for (int s = 30; s >= 0; s -= 6) put6((n >> s) & 63);
    }
    int acc = 0, filled = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++filled == 6) {
                put6(acc);
                acc = filled = 0;
            }
        }
    if (filled > 0) put6(acc << (6 - filled));
    return out;
}

/// Graphviz rendering; vertices in `highlight` are filled.
inline std::string serialize_dot(const Graph& g, const VertexSet& highlight = {}) {
    std::ostringstream os;
    os << "graph G {\n";
    for (std::size_t v = 0; v < g.order(); ++v) {
        auto id = static_cast<Vertex>(v);
        os << "  " << v << " [label=\"" << g.label(id) << "\"";
        if (highlight.contains(id)) os << ", style=filled, fillcolor=\"#f4a261\"";
        os << "];\n";
    }
    for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace strongdim

#endif
