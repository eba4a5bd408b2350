#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

// One failing instance: the graph (graph6) plus a compact JSON object with
// the failing quantities, enough to replay the check by hand.
struct Violation {
    std::string graph6;
    std::string data;
};

// Counters and witnesses for one verification run. instances_checked counts
// graphs examined; hypothesis_hits counts those where the theorem's
// hypothesis was engaged substantively (per-theorem: a degree antecedent
// fired, the toughness bound was verified and the condition held, or a
// qualifying nonadjacent pair existed). Timing and worker count are kept out
// of the JSON so reports are byte-identical across runs and job counts.
struct VerificationReport {
    std::string theorem_id;
    int n_min = 0;
    int n_max = 0;
    std::optional<int> t;
    std::string source;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> sample;
    std::uint64_t instances_checked = 0;
    std::uint64_t hypothesis_hits = 0;
    std::vector<Violation> violations;
    bool incomplete = false;
    double wall_time_seconds = 0.0;
    int jobs = 1;

    std::string to_json() const;
    std::string summary() const; // one human line, includes timing
};

struct VerifyConfig {
    std::string theorem_id;
    int n_min = 3;
    int n_max = 6;
    int t = 0;
    // builtin | stream | random | family:<id>
    std::string source = "builtin";
    std::istream* stream = nullptr;        // required when source = stream
    std::optional<std::uint64_t> seed;     // required when source = random
    std::uint64_t sample = 1000;           // random: instances; probe: budget
    int jobs = 1;
    std::uint64_t node_budget = 50'000'000;
};

inline constexpr int kEnumerationMaxN = 7;

// 2^(n(n-1)/2), n <= kEnumerationMaxN.
std::uint64_t labeled_graph_count(int n);

// Graph for one edge mask; bit k of mask corresponds to the k-th pair (u, v),
// u < v, in column-major order (the graph6 bit order).
Graph labeled_graph_from_mask(int n, std::uint64_t mask);

// All labeled graphs on n vertices in ascending mask order.
void enumerate_labeled_graphs(int n, const std::function<void(const Graph&)>& fn);

// thm1_chvatal, thm5_bc_closure, thm_hoang_small_t, thm4_strengthened,
// thm6_t_closure_edge, thm6b_bauer, thm7_counterexample, thm8_small_n.
std::vector<std::string> theorem_ids();

VerificationReport verify_theorem(const VerifyConfig& cfg);

// Counterexample search for the open cases: graphs verified t-tough
// (t in {2, 3}) satisfying the strengthened condition but not Hamiltonian.
// cfg.sample bounds the instances examined; hitting the bound before the
// source is exhausted marks the report incomplete.
VerificationReport conjecture_probe(const VerifyConfig& cfg);

} // namespace toughham
