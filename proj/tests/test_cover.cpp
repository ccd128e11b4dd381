#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "brute.hpp"
#include "strongdim/cover.hpp"
#include "strongdim/generators.hpp"
#include "strongdim/metrics.hpp"
#include "strongdim/products.hpp"

using namespace strongdim;

TEST(VertexCoverTest, SmallCatalog) {
    EXPECT_EQ(min_vertex_cover(cycle(5)).size(), 3u);
    EXPECT_EQ(min_vertex_cover(complete(6)).size(), 5u);
    Graph three_k2(6, {{0, 1}, {2, 3}, {4, 5}});
    EXPECT_EQ(min_vertex_cover(three_k2).size(), 3u);
    EXPECT_TRUE(min_vertex_cover(Graph(4)).empty());
    EXPECT_TRUE(min_vertex_cover(Graph()).empty());
}

TEST(VertexCoverTest, ExhaustiveMinimalityUpToTwentyVertices) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 400; ++i) {
        const int n = 1 + static_cast<int>(rng() % (i < 380 ? 14 : 20));
        auto g = brute::random_graph(n, 0.05 + (rng() % 60) / 100.0, rng);
        auto c = min_vertex_cover(g);
        ASSERT_TRUE(is_vertex_cover(g, c)) << i;
        ASSERT_EQ(static_cast<int>(c.size()), brute::cover_number(g)) << i;
    }
}

TEST(VertexCoverTest, DeterministicOutput) {
    auto g = random_connected(18, 0.25, 9);
    EXPECT_EQ(min_vertex_cover(g), min_vertex_cover(g));
}

TEST(VertexCoverTest, BudgetAbortsInsteadOfGuessing) {
    auto g = random_connected(60, 0.2, 3);
    SolveOptions tiny;
    tiny.budget = 1;
    EXPECT_THROW(min_vertex_cover(g, tiny), budget_exceeded);
}

TEST(VertexCoverTest, BudgetFromEnvironment) {
    ::setenv("STRONGDIM_BUDGET", "1234", 1);
    EXPECT_EQ(branch_budget_from_env(), 1234u);
    ::setenv("STRONGDIM_BUDGET", "zero", 1);
    EXPECT_THROW(branch_budget_from_env(), invalid_input);
    ::unsetenv("STRONGDIM_BUDGET");
    EXPECT_EQ(branch_budget_from_env(), default_branch_budget);
}

TEST(VertexCoverTest, SRGraphCoverInHostIds) {
    auto c6 = cycle(6);
    auto sr = strong_resolving_graph(bfs_distances(c6), c6);
    auto c = min_vertex_cover(sr);
    EXPECT_EQ(c.cover.size(), 3u);
    for (auto [a, b] : sr.edges()) EXPECT_TRUE(c.cover.contains(a) || c.cover.contains(b));
}

TEST(StrongDimensionTest, Catalog) {
    for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(strong_dimension(complete(n)).value, n - 1);
    for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(strong_dimension(cycle(n)).value, (n + 1) / 2);
    for (std::uint64_t s = 0; s < 50; ++s) {
        auto t = random_tree(2 + s % 11, s);
        EXPECT_EQ(strong_dimension(t).value, leaves(t).size() - 1);
    }
    EXPECT_THROW(strong_dimension(Graph(1)), invalid_input);
    EXPECT_THROW(strong_dimension(Graph(3, {{0, 1}})), disconnected_graph);
    EXPECT_EQ(strong_dimension(complete(3)).method, "reduction");
}

TEST(StrongDimensionTest, MatchesReferenceAndBasisResolves) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 300; ++i) {
        auto g = brute::random_connected(2 + static_cast<int>(rng() % 8), rng);
        auto r = strong_dimension(g);
        ASSERT_EQ(static_cast<int>(r.value), brute::strong_dim(g)) << i;
        ASSERT_EQ(r.basis.size(), r.value);
        ASSERT_TRUE(brute::is_generator(g, r.basis.ids())) << i;
        ASSERT_GE(r.value + 1, simplicial(g).size());
    }
}

TEST(BasisMembershipTest, MatchesAllBasesEnumeration) {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 150; ++i) {
        auto g = brute::random_connected(2 + static_cast<int>(rng() % 7), rng);
        auto bd = boundary(bfs_distances(g), g);
        for (std::size_t x = 0; x < g.order(); ++x) {
            auto V = static_cast<Vertex>(x);
            bool got = v_in_some_basis(g, V);
            ASSERT_EQ(got, brute::in_some_basis(g, V)) << i << " v=" << x;
            if (!bd.contains(V)) {
                ASSERT_FALSE(got);
            }
        }
    }
}

TEST(BasisMembershipTest, CompleteAndFamily) {
    for (Vertex v = 0; v < 5; ++v) EXPECT_TRUE(v_in_some_basis(complete(5), v));
    for (std::size_t t : {5, 7, 9}) {
        auto fam = family_F({t, 2, 1});
        EXPECT_FALSE(v_in_some_basis(fam.graph, fam.marks.y));
    }
}

TEST(CliqueTest, SmallCatalog) {
    EXPECT_EQ(clique_number(complete(2)), 2u);
    EXPECT_EQ(twin_free_clique_number(complete(2)), 1u);
    EXPECT_EQ(clique_number(path(4)), 2u);
    EXPECT_EQ(twin_free_clique_number(path(4)), 2u);
    EXPECT_EQ(clique_number(cycle(5)), 2u);
    EXPECT_EQ(twin_free_clique_number(cycle(5)), 2u);
    EXPECT_EQ(clique_number(Graph(3)), 1u);
    EXPECT_EQ(clique_number(Graph()), 0u);
}

TEST(CliqueTest, MatchesReferenceOnRandomGraphs) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 300; ++i) {
        auto g = brute::random_graph(1 + static_cast<int>(rng() % 11), 0.2 + (rng() % 70) / 100.0, rng);
        auto [omega, varpi] = brute::clique_numbers(g);
        ASSERT_EQ(static_cast<int>(clique_number(g)), omega) << i;
        ASSERT_EQ(static_cast<int>(twin_free_clique_number(g)), varpi) << i;
        ASSERT_GE(omega, varpi);
        auto c = maximum_twin_free_clique(g);
        for (Vertex a : c)
            for (Vertex b : c)
                if (a < b) {
                    ASSERT_FALSE(are_true_twins(g, a, b));
                }
    }
}
