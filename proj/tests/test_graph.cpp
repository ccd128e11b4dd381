#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "brute.hpp"
#include "strongdim/generators.hpp"
#include "strongdim/graph.hpp"
#include "strongdim/graph6.hpp"

using namespace strongdim;

TEST(GraphTest, RejectsLoopsRepeatsAndBadIds) {
    EXPECT_THROW(Graph(3, {{1, 1}}), invalid_input);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), invalid_input);
    EXPECT_THROW(Graph(3, {{0, 3}}), invalid_input);
    EXPECT_THROW(Graph(2, {}, {"a"}), invalid_input);
    EXPECT_THROW(Graph(2, {}, {"a", "a"}), invalid_input);
}

TEST(GraphTest, CanonicalEdgesAndAdjacency) {
    Graph g(4, {{2, 0}, {3, 1}, {1, 0}});
    std::vector<Edge> expect{{0, 1}, {0, 2}, {1, 3}};
    EXPECT_EQ(g.edges(), expect);
    EXPECT_EQ(g.degree(0), 2u);
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_FALSE(g.has_edge(2, 3));
    EXPECT_EQ(g.max_degree(), 2u);
}

TEST(GraphTest, VertexSetValidation) {
    EXPECT_THROW(VertexSet::over(3, {0, 3}), invalid_input);
    EXPECT_THROW(VertexSet::over(3, {1, 1}), invalid_input);
    auto s = VertexSet::collect(5, {4, 1, 1});
    EXPECT_EQ(s.ids(), (std::vector<Vertex>{1, 4}));
    EXPECT_TRUE(s.contains(4));
}

TEST(GraphTest, InducedKeepsLabelsAndReindexes) {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}}, {"a", "b", "c", "d"});
    auto h = g.induced(VertexSet::over(4, {1, 2, 3}));
    EXPECT_EQ(h.order(), 3u);
    EXPECT_EQ(h.size(), 2u);
    EXPECT_EQ(h.label(0), "b");
    EXPECT_EQ(g.without(0), h);
}

TEST(Graph6Test, HandDecodedSmallFields) {
    // "A_": n = 'A'-63 = 2, '_'-63 = 32 = 100000, so the only pair bit (0,1) is set
    auto k2 = parse_graph6("A_");
    EXPECT_EQ(k2.order(), 2u);
    EXPECT_EQ(k2.size(), 1u);
    EXPECT_TRUE(k2.has_edge(0, 1));
    // "BW": n = 3, 'W'-63 = 24 = 011000, pair order (0,1),(0,2),(1,2) gives edges 02 and 12
    auto bw = parse_graph6("BW");
    EXPECT_EQ(bw.order(), 3u);
    EXPECT_EQ(bw.size(), 2u);
    EXPECT_FALSE(bw.has_edge(0, 1));
    EXPECT_TRUE(bw.has_edge(0, 2));
    EXPECT_TRUE(bw.has_edge(1, 2));
    EXPECT_EQ(parse_graph6("Bw"), complete(3));
}

TEST(Graph6Test, KnownStringsRoundTrip) {
    EXPECT_EQ(serialize_graph6(parse_graph6("D?{")), "D?{");
    EXPECT_EQ(parse_graph6("D?{").order(), 5u);
    EXPECT_EQ(serialize_graph6(complete(2)), "A_");
    EXPECT_EQ(parse_graph6(serialize_graph6(complete(2))), complete(2));
    EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), complete(2));
    EXPECT_EQ(parse_graph6("?").order(), 0u);
    EXPECT_EQ(parse_graph6("@").order(), 1u);
}

TEST(Graph6Test, ExtendedHeaders) {
    for (std::size_t n : {62u, 63u, 100u, 300u}) {
        auto g = random_connected(n, 0.05, n);
        auto s = serialize_graph6(g);
        if (n >= 63) {
            EXPECT_EQ(s[0], '~');
        }
        EXPECT_EQ(parse_graph6(s), g);
    }
}

TEST(Graph6Test, ErrorsCarryOffsets) {
    auto offset_of = [](const std::string& s) {
        try {
            parse_graph6(s);
        } catch (const parse_error& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    EXPECT_EQ(offset_of("C"), 1);         // truncated field
    EXPECT_EQ(offset_of("A_x"), 2);       // trailing garbage
    EXPECT_EQ(offset_of("A "), 1);        // invalid byte
    EXPECT_EQ(offset_of("A`"), 1);        // padding bit set
    EXPECT_EQ(offset_of(""), 0);          // empty
    EXPECT_GE(offset_of("~~"), 0);        // truncated long header
}

TEST(Graph6Test, RoundTripRandomGraphs) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const int n = static_cast<int>(rng() % 40);
        auto g = brute::random_graph(n, 0.1 + (rng() % 80) / 100.0, rng);
        ASSERT_EQ(parse_graph6(serialize_graph6(g)), g) << i;
    }
}

TEST(DotTest, TriangleHasThreeNodesThreeEdges) {
    auto dot = serialize_dot(complete(3), VertexSet::over(3, {1}));
    std::regex node(R"(^  \d+ \[label)"), edge(R"(^  \d+ -- \d+;)");
    int nodes = 0, edges = 0, filled = 0;
    std::istringstream is(dot);
    std::string line;
    while (std::getline(is, line)) {
        nodes += std::regex_search(line, node);
        edges += std::regex_search(line, edge);
        filled += line.find("filled") != std::string::npos;
    }
    EXPECT_EQ(nodes, 3);
    EXPECT_EQ(edges, 3);
    EXPECT_EQ(filled, 1);
}

TEST(DistanceTest, SmallCatalog) {
    auto p4 = bfs_distances(path(4));
    EXPECT_EQ(p4(0, 3), 3);
    auto c6 = bfs_distances(cycle(6));
    EXPECT_EQ(c6(0, 3), 3);
    EXPECT_EQ(diameter(c6), 3);
    auto q3 = bfs_distances(hypercube(3));
    EXPECT_EQ(q3(0, 7), 3);
    EXPECT_EQ(diameter(bfs_distances(cycle(9))), 4);
    for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(diameter(bfs_distances(complete(n))), 1);
}

TEST(DistanceTest, DisconnectedNamesUnreachablePair) {
    Graph two_edges(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(is_connected(two_edges));
    try {
        bfs_distances(two_edges);
        FAIL();
    } catch (const disconnected_graph& e) {
        EXPECT_NE(e.from(), e.to());
        EXPECT_NE(std::string(e.what()).find(std::to_string(e.to())), std::string::npos);
    }
}

TEST(DistanceTest, MatchesReferenceAndMatrixInvariants) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto g = brute::random_connected(2 + static_cast<int>(rng() % 14), rng);
        auto d = bfs_distances(g);
        auto ref = brute::distances(g);
        const auto n = g.order();
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                auto U = static_cast<Vertex>(u), V = static_cast<Vertex>(v);
                ASSERT_EQ(d(U, V), ref[u][v]);
                ASSERT_EQ(d(U, V), d(V, U));
                ASSERT_EQ(d(U, V) == 1, g.has_edge(U, V));
                for (std::size_t w = 0; w < n; ++w) ASSERT_LE(d(U, V), d(U, static_cast<Vertex>(w)) + d(static_cast<Vertex>(w), V));
            }
    }
}

TEST(ComponentTest, OrderedBySmallestMember) {
    Graph g(6, {{4, 5}, {0, 3}, {1, 2}});
    auto cs = components(g);
    ASSERT_EQ(cs.size(), 3u);
    EXPECT_EQ(cs[0].ids(), (std::vector<Vertex>{0, 3}));
    EXPECT_EQ(cs[1].ids(), (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(cs[2].ids(), (std::vector<Vertex>{4, 5}));
}

TEST(GeneratorTest, NamedGraphs) {
    auto c5 = cycle(5);
    EXPECT_EQ(c5.size(), 5u);
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2u);
    EXPECT_EQ(hypercube(3).size(), 12u);
    EXPECT_EQ(complete(6).size(), 15u);
    EXPECT_EQ(path(1).size(), 0u);
    EXPECT_EQ(star(3).degree(0), 3u);
    auto k23 = complete_multipartite({2, 3});
    EXPECT_EQ(k23.order(), 5u);
    EXPECT_EQ(k23.size(), 6u);
    EXPECT_FALSE(k23.has_edge(0, 1));
    EXPECT_THROW(cycle(2), invalid_input);
    EXPECT_THROW(path(0), invalid_input);
    EXPECT_THROW(random_connected(5, 0.0, 1), invalid_input);
    EXPECT_THROW(random_connected(5, 1.5, 1), invalid_input);
}

TEST(GeneratorTest, RandomConnectedDeterministic) {
    EXPECT_EQ(random_connected(8, 0.3, 7), random_connected(8, 0.3, 7));
    EXPECT_EQ(random_tree(9, 3), random_tree(9, 3));
}

TEST(GeneratorTest, RandomConnectedAlwaysConnected) {
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        auto g = random_connected(2 + seed % 12, 0.05 + (seed % 10) / 10.0, seed);
        ASSERT_TRUE(brute::connected(g)) << seed;
    }
}

TEST(GeneratorTest, RandomTreesAreTrees) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto t = random_tree(1 + seed % 15, seed);
        ASSERT_EQ(t.size() + 1, t.order());
        ASSERT_TRUE(brute::connected(t));
    }
}
