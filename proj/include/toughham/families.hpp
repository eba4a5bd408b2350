#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

// A generated graph plus the named vertices its construction talks about
// (x and y for the counterexample family) and the generator parameters.
struct LabeledFamily {
    Graph graph;
    std::string family_id;
    std::map<std::string, int> labels;
    std::map<std::string, int> parameters;
};

// The sparse non-Hamiltonian family with a high-degree-sum nonadjacent pair:
// vertices 0..n-1 stand for v_1..v_n; edges are the path v_1...v_n, x v_{n-2}
// and y v_i for i in [2, n-2] minus {n-3}, where x = v_1 and y = v_n.
// Requires n >= 7.
LabeledFamily counterexample_graph(int n);

Graph cycle(int n);                           // n >= 3
Graph path(int n);                            // n >= 1
Graph complete(int n);                        // n >= 1
Graph complete_bipartite(int a, int b);       // a, b >= 1
Graph complete_minus_perfect_matching(int n); // n >= 2 even; drops (0,1), (2,3), ...

struct FamilyParams {
    int n = 0;
    int a = 0;
    int b = 0;
};

// Registry used by the CLI and the harness. Known ids: counterexample,
// cycle, path, complete, complete_bipartite, complete_minus_perfect_matching.
// Unknown id -> nullopt; bad parameters -> std::invalid_argument.
std::optional<LabeledFamily> make_family(const std::string& id, const FamilyParams& params);

std::vector<std::string> family_ids();

} // namespace toughham
