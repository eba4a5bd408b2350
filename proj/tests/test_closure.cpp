#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toughham/closure.hpp"
#include "toughham/families.hpp"
#include "toughham/graph.hpp"
#include "toughham/hamilton.hpp"

using namespace toughham;

namespace {

// Fixpoint property straight from the definition: no nonadjacent pair of the
// result may reach the threshold.
void check_fixpoint(const Graph& g, int threshold) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) CHECK(g.degree(u) + g.degree(v) < threshold);
}

// Replays the trace from the start graph: each recorded pair must have been
// nonadjacent with the recorded degree sum, meeting the threshold.
void replay_trace(const Graph& start, const ClosureResult& r) {
    GraphBuilder b(start);
    Graph cur = b.build();
    for (const auto& e : r.trace.added_edges) {
        CHECK_FALSE(cur.has_edge(e.u, e.v));
        CHECK(cur.degree(e.u) + cur.degree(e.v) == e.degree_sum);
        CHECK(e.degree_sum >= r.trace.threshold);
        GraphBuilder nb(cur);
        nb.add_edge(e.u, e.v);
        cur = nb.build();
    }
    CHECK(cur == r.graph);
}

} // namespace

TEST_SUITE("closure") {

TEST_CASE("the gap construction closes into the complete graph at t = 1") {
    const Graph g = counterexample_graph(7).graph;
    const auto r = t_closure(g, 1);
    CHECK(r.trace.threshold == 6);
    CHECK(r.graph == complete(7));
    REQUIRE_FALSE(r.trace.added_edges.empty());
    // first qualifying pair is the nonadjacent ends x = 0, y = 6, sum n - 1
    CHECK(r.trace.added_edges.front().u == 0);
    CHECK(r.trace.added_edges.front().v == 6);
    CHECK(r.trace.added_edges.front().degree_sum == 6);
    CHECK(is_hamiltonian(r.graph));
    CHECK_FALSE(is_hamiltonian(g));
    replay_trace(g, r);
}

TEST_CASE("cycle stays fixed at its own order") {
    const auto r = degree_sum_closure(cycle(5), 5);
    CHECK(r.graph == cycle(5));
    CHECK(r.trace.added_edges.empty());
}

TEST_CASE("one missing edge is restored with sum 2n - 4") {
    for (int n : {4, 6, 9}) {
        GraphBuilder b(complete(n));
        b.remove_edge(0, 1);
        const auto r = degree_sum_closure(b.build(), n);
        CHECK(r.graph == complete(n));
        REQUIRE(r.trace.added_edges.size() == 1);
        CHECK(r.trace.added_edges[0].u == 0);
        CHECK(r.trace.added_edges[0].v == 1);
        CHECK(r.trace.added_edges[0].degree_sum == 2 * n - 4);
    }
}

TEST_CASE("threshold above 2n - 4 can add nothing") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(rng, n, 0.6);
        const auto r = degree_sum_closure(g, 2 * n - 3);
        CHECK(r.graph == g);
        CHECK(r.trace.added_edges.empty());
    }
}

TEST_CASE("result is a fixpoint and closing again is a no-op") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 9);
        const int threshold = static_cast<int>(rng() % (2 * n));
        const Graph g = oracle::random_graph(rng, n, 0.4);
        const auto r = degree_sum_closure(g, threshold);
        check_fixpoint(r.graph, threshold);
        replay_trace(g, r);
        const auto again = degree_sum_closure(r.graph, threshold);
        CHECK(again.graph == r.graph);
        CHECK(again.trace.added_edges.empty());
    }
}

TEST_CASE("lower thresholds close to supergraphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        const Graph hi = degree_sum_closure(g, n).graph;
        const Graph lo = degree_sum_closure(g, n - 1).graph;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (hi.has_edge(u, v)) CHECK(lo.has_edge(u, v));
    }
}

TEST_CASE("addition order does not change the fixpoint") {
    std::mt19937_64 rng(29);
    int trials = 0;
    while (trials < 1000) {
        const int n = 3 + static_cast<int>(rng() % 10); // up to 12 vertices
        const int threshold = static_cast<int>(rng() % (n + 3));
        const Graph g = oracle::random_graph(rng, n, 0.45);
        const auto det = degree_sum_closure(g, threshold);
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            const auto sh = degree_sum_closure_shuffled(g, threshold, seed);
            CHECK(sh.graph == det.graph);
            CHECK(sh.trace.added_edges.size() == det.trace.added_edges.size());
            replay_trace(g, sh);
        }
        ++trials;
    }
}

TEST_CASE("t_closure threshold arithmetic, including t past n") {
    const Graph g = counterexample_graph(8).graph;
    CHECK(t_closure(g, 0).trace.threshold == 8);
    CHECK(t_closure(g, 3).trace.threshold == 5);
    // thresholds at or below zero behave like zero: everything joins
    const auto all = t_closure(g, 100);
    CHECK(all.trace.threshold == 0);
    CHECK(all.graph == complete(8));
    CHECK_THROWS_AS(t_closure(g, -1), std::invalid_argument);
    CHECK_THROWS_AS(degree_sum_closure(g, -1), std::invalid_argument);
}

TEST_CASE("trace serializes one json object per line") {
    GraphBuilder b(complete(4));
    b.remove_edge(1, 3);
    const auto r = degree_sum_closure(b.build(), 4);
    CHECK(r.trace.to_json_lines() == "{\"u\":1,\"v\":3,\"sum\":4}\n");
    const auto empty = degree_sum_closure(cycle(4), 7);
    CHECK(empty.trace.to_json_lines().empty());
}

TEST_CASE("closure preserves the strengthened condition") {
    CHECK(closure_preserves_condition_check(complete_minus_perfect_matching(10), 4));
    CHECK(closure_preserves_condition_check(complete(4), 4));
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        CHECK(closure_preserves_condition_check(g, 1 + static_cast<int>(rng() % 3)));
    }
}

} // TEST_SUITE
