#include <catch2/catch_amalgamated.hpp>

#include <dohf/generators.hpp>
#include <dohf/graph.hpp>

using namespace dohf;

TEST_CASE("graph basics", "[graph]") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 2); // idempotent
    CHECK(g.n() == 4);
    CHECK(g.m() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.edges() == (std::vector<Edge>{{0, 1}, {1, 2}}));
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("complement", "[graph]") {
    CHECK(complement(complete_graph(3)) == empty_graph(3));
    Graph c5 = cycle_graph(5);
    CHECK(complement(complement(c5)) == c5);

    // complement of C7 is the circulant with distances {2,3}
    Graph c7bar = complement(cycle_graph(7));
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) {
            int d = std::min(v - u, 7 - (v - u));
            CHECK(c7bar.adjacent(u, v) == (d == 2 || d == 3));
        }
}

TEST_CASE("complement involution on random graphs", "[graph]") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = random_graph(3 + static_cast<int>(seed % 10), 0.1 * (seed % 9), seed);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraphs", "[graph]") {
    Graph c5 = cycle_graph(5);
    auto whole = induced(c5, c5.vertices());
    CHECK(whole.graph == c5);
    CHECK(whole.to_parent == c5.vertices());

    auto p3 = induced(c5, {0, 1, 2});
    CHECK(p3.graph == path_graph(3));

    auto stable = induced(dart_graph(), {0, 2, 4});
    CHECK(stable.graph == empty_graph(3));
    CHECK(stable.to_parent == (VertexSet{0, 2, 4}));

    CHECK_THROWS_AS(induced(c5, {0, 7}), std::invalid_argument);
}

TEST_CASE("connected components", "[graph]") {
    CHECK(connected_components(cycle_graph(5)) ==
          (std::vector<VertexSet>{{0, 1, 2, 3, 4}}));
    Graph k3k2 = disjoint_union(complete_graph(3), complete_graph(2));
    CHECK(connected_components(k3k2) == (std::vector<VertexSet>{{0, 1, 2}, {3, 4}}));
    CHECK(connected_components(empty_graph(3)) ==
          (std::vector<VertexSet>{{0}, {1}, {2}}));
}

TEST_CASE("cojoin split", "[graph]") {
    Graph k3k2 = disjoint_union(complete_graph(3), complete_graph(2));
    auto s = cojoin_split(k3k2);
    REQUIRE(s);
    CHECK(s->a == (VertexSet{0, 1, 2}));
    CHECK(s->b == (VertexSet{3, 4}));
    CHECK(is_cojoin(k3k2, s->a, s->b));

    CHECK_FALSE(cojoin_split(cycle_graph(5)));

    Graph iso(3, {{1, 2}});
    auto s2 = cojoin_split(iso);
    REQUIRE(s2);
    CHECK(s2->a == (VertexSet{0}));
    CHECK(s2->b == (VertexSet{1, 2}));
}

TEST_CASE("join split", "[graph]") {
    auto s = join_split(complete_graph(3));
    REQUIRE(s);
    CHECK(s->a == (VertexSet{0}));
    CHECK(s->b == (VertexSet{1, 2}));
    CHECK(is_join(complete_graph(3), s->a, s->b));

    CHECK_FALSE(join_split(cycle_graph(5))); // complement of C5 is C5

    Graph k23 = complete_bipartite(2, 3);
    auto s2 = join_split(k23);
    REQUIRE(s2);
    CHECK(s2->a == (VertexSet{0, 1}));
    CHECK(s2->b == (VertexSet{2, 3, 4}));
}

TEST_CASE("join and cojoin predicates", "[graph]") {
    Graph k23 = complete_bipartite(2, 3);
    CHECK(is_join(k23, {0, 1}, {2, 3, 4}));
    Graph k3k2 = disjoint_union(complete_graph(3), complete_graph(2));
    CHECK(is_cojoin(k3k2, {0, 1, 2}, {3, 4}));
    CHECK_FALSE(is_join(cycle_graph(5), {0}, {2, 3}));
    CHECK_THROWS_AS(is_join(k23, {0, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(is_cojoin(k23, {0}, {9}), std::invalid_argument);
    // empty sides are vacuous
    CHECK(is_join(k23, {}, {0, 1}));
    CHECK(is_cojoin(k23, {}, {}));
}

TEST_CASE("split presence tracks connectivity on random graphs", "[graph]") {
    for (std::uint64_t seed = 40; seed < 80; ++seed) {
        Graph g = random_graph(2 + static_cast<int>(seed % 9), 0.3 + 0.05 * (seed % 8), seed);
        auto comps = connected_components(g);
        auto cs = cojoin_split(g);
        CHECK(cs.has_value() == (comps.size() >= 2));
        if (cs) {
            CHECK(is_cojoin(g, cs->a, cs->b));
            CHECK(cs->a.size() + cs->b.size() == static_cast<std::size_t>(g.n()));
        }
        auto js = join_split(g);
        CHECK(js.has_value() == (connected_components(complement(g)).size() >= 2));
        if (js) CHECK(is_join(g, js->a, js->b));
        CHECK(induced(g, g.vertices()).graph == g);
    }
}

TEST_CASE("girth", "[graph]") {
    CHECK(girth(cycle_graph(9)) == std::optional<int>(9));
    CHECK_FALSE(girth(path_graph(4)));
    CHECK(girth(complete_graph(4)) == std::optional<int>(3));
    CHECK(girth(petersen_graph()) == std::optional<int>(5));
    CHECK(girth(complete_bipartite(2, 3)) == std::optional<int>(4));
    CHECK_FALSE(girth(empty_graph(0)));

    // girth equals the shortest cycle found by brute force over vertex subsets
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        int n = 4 + static_cast<int>(seed % 6);
        Graph g = random_graph(n, 0.35, seed);
        std::optional<int> best;
        // any cycle contains an induced cycle of at most its length, so
        // scanning induced cycles suffices
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            VertexSet vs;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) vs.push_back(v);
            if (vs.size() < 3) continue;
            auto ind = induced(g, vs);
            bool cycle = ind.graph.m() == ind.graph.n() &&
                         connected_components(ind.graph).size() == 1;
            for (int v = 0; cycle && v < ind.graph.n(); ++v)
                if (ind.graph.degree(v) != 2) cycle = false;
            if (cycle && (!best || ind.graph.n() < *best)) best = ind.graph.n();
        }
        CHECK(girth(g) == best);
    }
}
