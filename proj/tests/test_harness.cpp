#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "brute.hpp"
#include "strongdim/serialize.hpp"
#include "strongdim/strongdim.hpp"

using namespace strongdim;
using namespace strongdim::harness;

TEST(OracleTest, SmallValues) {
    EXPECT_EQ(oracle_strong_dimension(cycle(5)).value, 3u);
    EXPECT_EQ(oracle_strong_dimension(star(3)).value, 2u);
    auto p = rooted_product(path(2), cycle(3), 0).graph();
    EXPECT_EQ(p.order(), 6u);
    EXPECT_EQ(oracle_strong_dimension(p).value, 3u);
    EXPECT_EQ(static_cast<std::int64_t>(oracle_strong_dimension(p).value), dim_cycle_rooted(2, 3).value());
    EXPECT_EQ(oracle_strong_dimension(cycle(5)).method, "oracle");
}

TEST(OracleTest, BudgetAndInputErrors) {
    EXPECT_THROW(oracle_strong_dimension(cycle(13)), budget_exceeded);
    EXPECT_NO_THROW(oracle_strong_dimension(cycle(13), 13));
    EXPECT_THROW(oracle_strong_dimension(Graph(1)), invalid_input);
    EXPECT_THROW(oracle_strong_dimension(Graph(3, {{0, 1}})), invalid_input);
}

TEST(OracleTest, AgreesWithReferenceAndBasisResolves) {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
        auto g = brute::random_connected(2 + static_cast<int>(rng() % 8), rng);
        auto r = oracle_strong_dimension(g);
        ASSERT_EQ(static_cast<int>(r.value), brute::strong_dim(g));
        ASSERT_TRUE(brute::is_generator(g, r.basis.ids()));
        ASSERT_TRUE(is_strong_metric_generator(g, r.basis));
    }
}

TEST(EnumerateTest, ConnectedGraphCounts) {
    const std::size_t expect[] = {1, 1, 2, 6, 21, 112};
    for (std::size_t n = 1; n <= 6; ++n) {
        auto gs = connected_graphs(n);
        ASSERT_EQ(gs.size(), expect[n - 1]) << n;
        for (const auto& g : gs) ASSERT_TRUE(is_connected(g));
    }
    EXPECT_THROW(connected_graphs(9), invalid_input);
}

TEST(EnumerateTest, CanonicalCodeIsAnIsomorphismInvariant) {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng() % 8);
        auto g = brute::random_graph(n, 0.5, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> es;
        for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
        Graph h(static_cast<std::size_t>(n), es);
        ASSERT_EQ(canonical_code(g), canonical_code(h));
        ASSERT_TRUE(are_isomorphic(g, h));
    }
    EXPECT_NE(canonical_code(path(4)), canonical_code(star(3)));
}

TEST(IsomorphismTest, MapIsAnIsomorphism) {
    auto a = cycle(6);
    Graph b(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
    auto m = find_isomorphism(a, b);
    ASSERT_TRUE(m);
    for (auto [u, v] : a.edges()) EXPECT_TRUE(b.has_edge((*m)[u], (*m)[v]));
    EXPECT_FALSE(are_isomorphic(cycle(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(GridSpecTest, Parsing) {
    auto g = GridSpec::parse("r=2..4,t=3..7,samples=9");
    EXPECT_EQ(g.range("r", 0, 0), std::make_pair(2L, 4L));
    EXPECT_EQ(g.value("samples", 1), 9);
    EXPECT_EQ(g.range("missing", 1, 2), std::make_pair(1L, 2L));
    EXPECT_THROW(GridSpec::parse("r"), invalid_input);
    EXPECT_THROW(GridSpec::parse("r=4..2"), invalid_input);
    EXPECT_THROW(GridSpec::parse("r=a..b"), invalid_input);
    EXPECT_THROW(GridSpec::parse("r=2..3x"), invalid_input);
}

TEST(VerifyTest, CycleAntipodalBoundsPass) {
    VerifyOptions o;
    o.grid = GridSpec::parse("r=2..4,t=3..7");
    auto cyc = verify_theorem("cycle", o);
    EXPECT_FALSE(cyc.empty());
    for (const auto& r : cyc) EXPECT_TRUE(r.pass) << r.descriptor;

    auto anti = verify_theorem("antipodal", {});
    for (const auto& r : anti) EXPECT_TRUE(r.pass) << r.descriptor;

    VerifyOptions b;
    b.grid = GridSpec::parse("samples=60");
    auto bounds = verify_theorem("bounds", b);
    EXPECT_EQ(bounds.size(), 60u);
    for (const auto& r : bounds) {
        EXPECT_TRUE(r.pass) << r.descriptor;
        EXPECT_GE(r.side_checks.size(), 3u);
    }
    EXPECT_THROW(verify_theorem("nope", {}), invalid_input);
}

TEST(VerifyTest, DeterministicAcrossWorkerCounts) {
    VerifyOptions a;
    a.grid = GridSpec::parse("samples=30");
    a.seed = 77;
    auto b = a;
    b.workers = 3;
    auto ra = verify_theorem("bounds", a), rb = verify_theorem("bounds", b);
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        EXPECT_EQ(ra[i].index, i);
        EXPECT_EQ(ra[i].g6_g, rb[i].g6_g);
        EXPECT_EQ(ra[i].g6_h, rb[i].g6_h);
        EXPECT_EQ(ra[i].root, rb[i].root);
        EXPECT_EQ(ra[i].solver_value, rb[i].solver_value);
    }
}

TEST(VerifyTest, ReportIntegrityRecomputedOnLoad) {
    VerifyOptions o;
    o.grid = GridSpec::parse("r=2..2,t=3..4");
    auto reports = verify_theorem("cycle", o);
    std::stringstream ss;
    write_json_lines(ss, reports);
    auto back = read_json_lines(ss);
    ASSERT_EQ(back.size(), reports.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        EXPECT_TRUE(back[i].pass);
        EXPECT_EQ(back[i].g6_h, reports[i].g6_h);
        EXPECT_EQ(back[i].seed, reports[i].seed);
    }
    // a tampered line claiming pass with a mismatched solver value loads as a failure
    auto j = to_json_value(reports[0]);
    j["solver"] = j["solver"].get<std::int64_t>() + 1;
    j["pass"] = true;
    std::stringstream bad(j.dump() + "\n");
    EXPECT_FALSE(read_json_lines(bad)[0].pass);

    VerifyReport r = reports[0];
    r.oracle_value = r.solver_value + 1;
    EXPECT_FALSE(recompute_pass(r));
    r = reports[0];
    r.side_checks.emplace_back("x", false);
    EXPECT_FALSE(recompute_pass(r));
    r = reports[0];
    r.fired.emplace_back("x", r.solver_value + 2);
    EXPECT_FALSE(recompute_pass(r));
}

TEST(VerifyTest, FailureCarriesReproducer) {
    // an instance whose formula is deliberately wrong must come back failing with its inputs
    harness::PreparedInstance p;
    p.descriptor = "broken";
    p.g = path(2);
    p.h = cycle(5);
    p.root = 0;
    p.seed = 5;
    p.formula = [] { return dim_cycle_rooted(2, 4); };
    auto r = harness::detail::evaluate("cycle", 0, p, {});
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.g6_g, serialize_graph6(path(2)));
    EXPECT_EQ(r.g6_h, serialize_graph6(cycle(5)));
    EXPECT_EQ(r.seed, 5u);
}

TEST(DivideLemmaTest, PerCopyBounds) {
    auto g = path(3);
    {
        auto rep = check_divide_lemma(g, complete(3), 0, strong_dimension(rooted_product(g, complete(3), 0).graph()));
        EXPECT_TRUE(rep.ok());
        for (const auto& c : rep.copies) EXPECT_GE(c.count, 1u);
    }
    {
        auto rep = check_divide_lemma(g, cycle(5), 0, strong_dimension(rooted_product(g, cycle(5), 0).graph()));
        EXPECT_TRUE(rep.ok());
        EXPECT_EQ(rep.dim_h, 3u);
        for (const auto& c : rep.copies) EXPECT_GE(c.count, 2u);
    }
    for (std::size_t t : {5, 7}) {
        auto fam = family_F({t, 1, 2});
        auto prod = rooted_product(g, fam.graph, fam.marks.y).graph();
        auto rep = check_divide_lemma(g, fam.graph, fam.marks.y, strong_dimension(prod));
        EXPECT_FALSE(rep.root_in_some_basis);
        EXPECT_TRUE(rep.ok());
        for (const auto& c : rep.copies) EXPECT_GE(c.count, rep.dim_h);
    }
}

TEST(DivideLemmaTest, DetectsUndersizedCopy) {
    // a fake "basis" with nothing in copy 0 violates the general bound when dim_s(H) >= 2
    auto g = path(2);
    DimReport fake;
    fake.basis = VertexSet::over(10, {5, 6, 7});
    auto rep = check_divide_lemma(g, cycle(5), 0, fake);
    EXPECT_FALSE(rep.ok());
    EXPECT_FALSE(rep.copies[0].general_ok);
}

TEST(ConjectureTest, FiltersAndPathCentre) {
    // even cycles: every root is a boundary vertex, so nothing is checked
    for (std::size_t n : {4, 6, 8}) {
        auto c = cycle(n);
        auto bd = boundary(bfs_distances(c), c);
        EXPECT_EQ(bd.size(), n);
    }
    auto p5 = path(5);
    auto ctx = root_context(bfs_distances(p5), p5, 2);
    EXPECT_TRUE(ctx.isolated.empty());
}

TEST(ConjectureTest, DeterministicAndReproducible) {
    ConjectureOptions o;
    o.samples = 2000;
    o.seed = 1;
    auto a = conjecture_search(o);
    o.workers = 4;
    auto b = conjecture_search(o);
    EXPECT_EQ(a.samples, 2000u);
    EXPECT_EQ(a.filtered_not_matching, b.filtered_not_matching);
    EXPECT_EQ(a.roots_checked, b.roots_checked);
    ASSERT_EQ(a.findings.size(), b.findings.size());
    for (std::size_t i = 0; i < a.findings.size(); ++i) {
        EXPECT_EQ(a.findings[i].g6, b.findings[i].g6);
        EXPECT_EQ(a.findings[i].root, b.findings[i].root);
        EXPECT_TRUE(reproduces(a.findings[i]));
        auto j = to_json_value(a.findings[i]);
        EXPECT_TRUE(reproduces(conjecture_finding_from_json(j)));
        // independent recomputation from the reproducer
        auto h = parse_graph6(a.findings[i].g6);
        EXPECT_FALSE(brute::boundary(h).count(a.findings[i].root));
        EXPECT_EQ(a.findings[i].max_distant.ids(), brute::ids(brute::max_distant(h, a.findings[i].root)));
    }
    ConjectureOptions all = o;
    all.mode = ConjectureMode::all;
    auto c = conjecture_search(all);
    EXPECT_EQ(c.filtered_not_matching, 0u);
    EXPECT_GE(c.roots_checked, a.roots_checked);
}

TEST(ConjectureTest, KnownCounterexampleIsFound) {
    ConjectureFinding f;
    auto h = parse_graph6("ElEG");
    auto ctx = root_context(bfs_distances(h), h, 0);
    f.g6 = "ElEG";
    f.root = 0;
    f.max_distant = ctx.max_distant;
    f.isolated = ctx.isolated;
    f.partners = ctx.partners;
    EXPECT_TRUE(reproduces(f));
    EXPECT_FALSE(f.isolated.empty());
    f.isolated = VertexSet();
    EXPECT_FALSE(reproduces(f));
}

TEST(SerializeTest, Shapes) {
    auto r = strong_dimension(cycle(5));
    auto j = to_json_value(r);
    EXPECT_EQ(j["value"], 3);
    EXPECT_EQ(j["basis"].size(), 3u);
    EXPECT_EQ(j["method"], "reduction");
    EXPECT_TRUE(j.contains("elapsed_ms"));
    EXPECT_TRUE(j.contains("branch_nodes"));

    auto f = to_json_value(bounds_general(path(2), cycle(5), 0));
    EXPECT_EQ(f["case"], "bounds.root_in_basis");
    EXPECT_TRUE(f["upper"].is_number());

    auto p = to_json_value(rooted_product(path(2), cycle(3), 0));
    EXPECT_EQ(parse_graph6(p["graph6"].get<std::string>()).order(), 6u);
    EXPECT_EQ(p["coords"].size(), 6u);
    EXPECT_EQ(p["coords"][4], json({1, 1}));

    auto c6 = cycle(6);
    auto side = sr_sidecar(strong_resolving_graph(bfs_distances(c6), c6));
    EXPECT_EQ(side["host"].size(), 6u);
    EXPECT_TRUE(side["perfect_matching"].get<bool>());
}
