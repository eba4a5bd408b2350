#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

struct ClosureEdge {
    int u = 0;
    int v = 0;
    int degree_sum = 0; // sum at the moment of addition, >= threshold
};

struct ClosureTrace {
    int threshold = 0;
    std::vector<ClosureEdge> added_edges;

    // One {"u":,"v":,"sum":} object per line, in addition order.
    std::string to_json_lines() const;
};

struct ClosureResult {
    Graph graph;
    ClosureTrace trace;
};

// Fixpoint of joining nonadjacent pairs with degree sum >= threshold.
// Deterministic order: rescan pairs lexicographically after each addition.
// Requires threshold >= 0.
ClosureResult degree_sum_closure(const Graph& g, int threshold);

// degree_sum_closure at threshold n - t; t = 0 is the Bondy-Chvatal closure.
// Requires t >= 0.
ClosureResult t_closure(const Graph& g, int t);

// Same fixpoint reached by picking a random qualifying pair each step;
// exists to exercise order independence.
ClosureResult degree_sum_closure_shuffled(const Graph& g, int threshold, std::uint64_t seed);

// Whenever g satisfies the strengthened degree condition at t, so does its
// t-closure (evaluated directly on both graphs).
bool closure_preserves_condition_check(const Graph& g, int t);

} // namespace toughham
