#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "dohf/divisibility.hpp"
#include "dohf/generators.hpp"
#include "dohf/graph.hpp"
#include "dohf/oracles.hpp"
#include "dohf/recognition.hpp"

using namespace dohf;

TEST_CASE("check_division validates partitions and omega decrease", "[divisibility]") {
    Graph c5 = cycle_graph(5);
    SECTION("a path X meets every edge of C5") {
        // X = {0,1,2,3} is Berge; rest = {4} has omega 1 < 2.
        CHECK(check_division(c5, Division{{0, 1, 2, 3}, {4}}));
    }
    SECTION("empty X misses every maximum clique") {
        CHECK_FALSE(check_division(c5, Division{{}, {0, 1, 2, 3, 4}}));
    }
    SECTION("X = V fails because C5 itself is not Berge") {
        CHECK_FALSE(check_division(c5, Division{{0, 1, 2, 3, 4}, {}}));
    }
    SECTION("X = V over a perfect graph is fine") {
        CHECK(check_division(path_graph(4), Division{{0, 1, 2, 3}, {}}));
    }
    SECTION("overlap and missing vertices are structural failures") {
        CHECK_FALSE(check_division(c5, Division{{0, 1}, {1, 2, 3, 4}}));
        CHECK_FALSE(check_division(c5, Division{{0, 1}, {2, 3}}));
    }
}

TEST_CASE("perfect_division on class members", "[divisibility]") {
    SECTION("perfect graph takes everything") {
        Division d = perfect_division(path_graph(5));
        CHECK(d.x == path_graph(5).vertices());
        CHECK(d.rest.empty());
        CHECK(check_division(path_graph(5), d));
    }
    SECTION("join partition takes the co-triangle side") {
        Graph g = join(complement(cycle_graph(7)), empty_graph(3));
        Division d = perfect_division(g);
        CHECK(d.x == VertexSet{7, 8, 9});
        CHECK(check_division(g, d));
        // omega strictly drops on the antihole side
        CHECK(brute_omega(induced(g, d.rest).graph) < brute_omega(g));
    }
    SECTION("alpha<=2 leaf finds a Berge transversal") {
        Graph g = complement(cycle_graph(7));
        Division d = perfect_division(g);
        CHECK(check_division(g, d));
        CHECK_FALSE(d.x.empty());
    }
    SECTION("cojoin unions the children's choices") {
        Graph g = disjoint_union(complement(cycle_graph(7)), cycle_graph(4));
        Division d = perfect_division(g);
        CHECK(check_division(g, d));
        // the perfect C4 side is wholly inside X
        for (int v = 7; v < 11; ++v)
            CHECK(std::binary_search(d.x.begin(), d.x.end(), v));
    }
    SECTION("non-members are refused") {
        CHECK_THROWS_AS(perfect_division(cycle_graph(9)), NotInClassError);
    }
}

TEST_CASE("perfect divisibility checker", "[divisibility]") {
    CHECK(is_perfectly_divisible(path_graph(5)).ok);
    CHECK(is_perfectly_divisible(complement(cycle_graph(7))).ok);
    // odd holes are perfectly divisible (X = a spanning path) even though
    // they are not 2-divisible
    CHECK(is_perfectly_divisible(cycle_graph(5)).ok);
    CHECK(is_perfectly_divisible(cycle_graph(7)).ok);
    CHECK(is_perfectly_divisible(empty_graph(0)).ok);
}

TEST_CASE("2-divisibility checker and the C5 boundary", "[divisibility]") {
    // omega(C5) = 2 forces both parts stable, but C5 is not bipartite, so
    // C5 itself is the counterexample: odd holes are not 2-divisible.
    DivisibilityCheck c = is_2_divisible(cycle_graph(5));
    REQUIRE_FALSE(c.ok);
    CHECK(c.counterexample == VertexSet{0, 1, 2, 3, 4});

    CHECK_FALSE(is_2_divisible(cycle_graph(7)).ok);
    CHECK(is_2_divisible(path_graph(5)).ok);
    CHECK(is_2_divisible(complete_graph(5)).ok);
    CHECK(is_2_divisible(complement(cycle_graph(7))).ok);
    CHECK(is_2_divisible(join(complement(cycle_graph(7)), empty_graph(2))).ok);
}

TEST_CASE("divisibility theorems hold on the random class corpus", "[divisibility]") {
    SplitMix64 rng(0xD1B);
    int done = 0;
    for (int rep = 0; rep < 150 && done < 20; ++rep) {
        int n = 5 + static_cast<int>(rng.next() % 4);  // up to 8 for the 3^n scan
        auto g = random_class_graph(n, 0.35 + 0.05 * (rep % 7), rng.next());
        if (!g) continue;
        ++done;
        CHECK(is_2_divisible(*g).ok);
        CHECK(is_perfectly_divisible(*g).ok);
        Division d = perfect_division(*g);
        CHECK(check_division(*g, d));
    }
    REQUIRE(done >= 12);
}

TEST_CASE("find_homogeneous_set", "[divisibility]") {
    // In K3 cojoin K2 the K2 side is homogeneous; {0,1} inside K3 is too,
    // and it is the lexicographically first of the smallest ones.
    auto h = find_homogeneous_set(disjoint_union(complete_graph(3), complete_graph(2)));
    REQUIRE(h.has_value());
    CHECK(*h == VertexSet{0, 1});
    // C5 is prime.
    CHECK_FALSE(find_homogeneous_set(cycle_graph(5)).has_value());
    // join sides are homogeneous
    CHECK(find_homogeneous_set(join(path_graph(2), path_graph(3))).has_value());
}

TEST_CASE("checkers respect their budgets", "[divisibility]") {
    CHECK_THROWS_AS(is_2_divisible(cycle_graph(12), 50), BudgetError);
    CHECK_THROWS_AS(is_perfectly_divisible(complete_graph(21)), BudgetError);
    CHECK_THROWS_AS(is_2_divisible(complete_graph(21)), BudgetError);
}
