#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "toughham/families.hpp"
#include "toughham/graph.hpp"
#include "toughham/toughness.hpp"

using namespace toughham;

TEST_SUITE("families") {

TEST_CASE("the gap construction at n = 7, edge by edge") {
    const auto fam = counterexample_graph(7);
    const Graph& g = fam.graph;
    CHECK(fam.family_id == "counterexample");
    CHECK(fam.parameters.at("n") == 7);
    CHECK(fam.labels.at("x") == 0);
    CHECK(fam.labels.at("y") == 6);
    REQUIRE(g.vertex_count() == 7);
    const std::vector<std::pair<int, int>> expect = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, // the spine
        {0, 4},                                         // x v_{n-2}
        {1, 6}, {2, 6}, {4, 6},                         // y v_i, skipping v_{n-3}
    };
    CHECK(g.edge_count() == static_cast<int>(expect.size()));
    for (auto [u, v] : expect) CHECK(g.has_edge(u, v));
    // the pair the construction is about stays nonadjacent with sum n - 1
    CHECK_FALSE(g.has_edge(0, 6));
    CHECK(g.degree(0) + g.degree(6) == 6);
    // neighborhoods of the named pair
    CHECK(g.neighbors(0) == std::vector<int>{1, 4});
    CHECK(g.neighbors(6) == std::vector<int>{1, 2, 4, 5});
}

TEST_CASE("the gap construction size and degree bookkeeping for larger n") {
    for (int n = 7; n <= 14; ++n) {
        const auto fam = counterexample_graph(n);
        const Graph& g = fam.graph;
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == 2 * n - 4);
        CHECK_FALSE(g.has_edge(0, n - 1));
        CHECK(g.degree(0) + g.degree(n - 1) == n - 1);
        CHECK(g.degree(0) == 2);
        CHECK(g.degree(n - 1) == n - 3);
        CHECK(component_count(g) == 1);
    }
    CHECK_THROWS_AS(counterexample_graph(6), std::invalid_argument);
    CHECK_THROWS_AS(counterexample_graph(0), std::invalid_argument);
}

TEST_CASE("construction is deterministic") {
    CHECK(counterexample_graph(9).graph == counterexample_graph(9).graph);
    CHECK(cycle(8) == cycle(8));
}

TEST_CASE("cycles and paths") {
    const Graph c5 = cycle(5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(c5.has_edge(4, 0));
    const Graph p4 = path(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(3) == 1);
    CHECK(path(1).vertex_count() == 1);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("complete and complete bipartite") {
    CHECK(complete(6).edge_count() == 15);
    CHECK(complete(1).edge_count() == 0);
    const Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.vertex_count() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.has_edge(0, 2));
    CHECK_FALSE(k23.has_edge(0, 1)); // same side
    CHECK_FALSE(k23.has_edge(3, 4));
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
    CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("complete minus a perfect matching") {
    const Graph g = complete_minus_perfect_matching(6);
    CHECK(g.edge_count() == 15 - 3);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 4);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(4, 5));
    CHECK(g.has_edge(0, 2));
    CHECK(toughness(g).value == Rational(2));
    CHECK_THROWS_AS(complete_minus_perfect_matching(5), std::invalid_argument);
    CHECK_THROWS_AS(complete_minus_perfect_matching(0), std::invalid_argument);
}

TEST_CASE("registry") {
    const auto ids = family_ids();
    for (const char* want : {"counterexample", "cycle", "path", "complete",
                             "complete_bipartite", "complete_minus_perfect_matching"})
        CHECK(std::find(ids.begin(), ids.end(), want) != ids.end());

    FamilyParams p;
    p.n = 9;
    auto fam = make_family("counterexample", p);
    REQUIRE(fam);
    CHECK(fam->graph == counterexample_graph(9).graph);

    p.n = 5;
    auto c = make_family("cycle", p);
    REQUIRE(c);
    CHECK(c->graph == cycle(5));
    CHECK(c->family_id == "cycle");

    FamilyParams bp;
    bp.a = 2;
    bp.b = 3;
    auto kb = make_family("complete_bipartite", bp);
    REQUIRE(kb);
    CHECK(kb->graph == complete_bipartite(2, 3));
    CHECK(kb->parameters.at("a") == 2);

    CHECK_FALSE(make_family("no_such_family", p).has_value());
    FamilyParams bad;
    bad.n = 2;
    CHECK_THROWS_AS(make_family("cycle", bad), std::invalid_argument);
}

} // TEST_SUITE
