#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

// A vertex ordering witnessing a Hamiltonian cycle: consecutive vertices
// adjacent, last adjacent to first, each vertex exactly once.
struct CycleCertificate {
    std::vector<int> order;
};

enum class HamEngine {
    automatic,   // subset DP up to kDpMaxN, backtracking above
    subset_dp,   // Held-Karp style reachability over vertex subsets
    backtracking // pruned DFS with dynamic degree-2 forcing and cut pruning
};

struct HamOptions {
    HamEngine engine = HamEngine::automatic;
    // Node-expansion cap for the backtracking engine; exceeding it throws
    // ResourceLimitError ("undecided") instead of running unbounded.
    std::uint64_t node_budget = 50'000'000;
};

inline constexpr int kDpMaxN = 20;

// True iff g contains a spanning cycle. Graphs with n < 3 are never
// Hamiltonian; K_3 is.
bool is_hamiltonian(const Graph& g, const HamOptions& opts = {});

// A certificate when one exists. Search order is deterministic (ascending
// vertex ids), so results are reproducible across runs.
std::optional<CycleCertificate> hamiltonian_cycle(const Graph& g, const HamOptions& opts = {});

bool check_certificate(const Graph& g, const CycleCertificate& c);

// True iff g has a spanning path, with the given endpoints when specified.
// from and to must differ when both are given.
bool has_hamiltonian_path(const Graph& g, std::optional<int> from = {},
                          std::optional<int> to = {}, const HamOptions& opts = {});

} // namespace toughham
