#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace toughham {

class GraphBuilder;

// Simple undirected graph on vertex ids [0, n). Adjacency is stored as n
// fixed-width bit rows (ceil(n/64) words each) so neighborhood intersection,
// degree counting and component floods are word-parallel. Graphs are
// immutable values: edge operations return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int word_count() const { return words_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    // Bit row of v; bit u set iff u ~ v.
    std::span<const std::uint64_t> row(int v) const {
        check_vertex(v);
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    // Single-word row, valid only when word_count() <= 1.
    std::uint64_t row64(int v) const;

    // Mask with bits [0, n) set; valid only when n <= 64.
    std::uint64_t full_mask64() const;

    // G + uv. Requires u != v and u !~ v.
    Graph add_edge(int u, int v) const;
    // G - uv. Requires u ~ v.
    Graph remove_edge(int u, int v) const;

    bool is_complete() const;
    bool is_connected() const;

    // G[keep], vertices renumbered by ascending position in keep.
    Graph induced_subgraph(std::span<const int> keep) const;
    // G - v.
    Graph remove_vertex(int v) const;

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;

    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Mutable construction helper; build() freezes into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

    int vertex_count() const { return g_.n_; }
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    int degree(int v) const { return g_.degree(v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // Snapshot; the builder stays usable (rows are small enough to copy).
    Graph build() const { return g_; }

private:
    Graph g_;
};

// Degree multiset sorted non-decreasing, indexed 1-based as is customary:
// d(1) is the minimum degree, d(n) the maximum. labeling[i-1] is a vertex of
// degree d(i) (a witness relabeling v_1..v_n, ties broken by ascending id).
struct DegreeSequence {
    std::vector<int> degrees;
    std::vector<int> labeling;

    int n() const { return static_cast<int>(degrees.size()); }
    int d(int i) const; // 1-based; throws std::out_of_range outside [1, n]
};

DegreeSequence degree_sequence(const Graph& g);

// c(G - S). Returns 0 when S = V. Throws std::invalid_argument on a bad id.
int components_after_removal(const Graph& g, std::span<const int> removed);

// c(G), i.e. components_after_removal with S empty.
int component_count(const Graph& g);

// The unique maximum universal clique {v : deg(v) = n-1}, ascending ids.
std::vector<int> universal_clique(const Graph& g);

// U^alpha = positions i (1-based) with d_i >= n - alpha. Since the sequence
// is sorted these form the suffix [first_index, n]; first_index = n+1 when
// empty. in_stated_range is false when alpha falls outside the range
// 1 <= alpha <= floor((n-1)/2) the definition is quoted for.
struct UAlpha {
    int count = 0;
    int first_index = 0;
    bool in_stated_range = true;
};

UAlpha u_alpha(const DegreeSequence& seq, int alpha);

// Fast component count used by the enumeration-heavy callers: graph must fit
// one word; `removed` is a bit mask of deleted vertices.
int components_masked64(const Graph& g, std::uint64_t removed);

} // namespace toughham
