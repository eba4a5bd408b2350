#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace toughham {

// A disconnecting set realizing the reported ratio. For a disconnected graph
// the empty cutset is the witness (ratio 0).
struct ToughnessWitness {
    std::vector<int> cutset;
    int component_count = 0;
};

// tau(G) = min{|S| / c(G-S) : c(G-S) >= 2}, infinite when no such S exists,
// i.e. exactly for complete graphs (K_0, K_1, K_2 included).
struct Toughness {
    bool infinite = false;
    Rational value;
    std::optional<ToughnessWitness> witness;

    std::string str() const { return infinite ? "inf" : value.str(); }
};

inline constexpr int kToughnessMaxN = 24;

enum class ToughnessMethod {
    pruned,      // skips cutsets with a vertex whose whole neighborhood is inside
    definitional // every subset, straight from the definition
};

// Exact toughness with a minimizing witness (lexicographically least cutset
// among minimizers). Throws ResourceLimitError when n > kToughnessMaxN.
Toughness toughness(const Graph& g, ToughnessMethod method = ToughnessMethod::pruned);

// tau(g) >= t, returning false as soon as one violating cutset is found.
// Requires t >= 0; same size cap as toughness().
bool is_t_tough(const Graph& g, const Rational& t);

// delta(G) >= 2t, the classical consequence for non-complete t-tough graphs.
bool min_degree_bound_check(const Graph& g, int t);

} // namespace toughham
