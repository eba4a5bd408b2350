#include "toughham/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace toughham {

namespace {

int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }

} // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (std::uint64_t w : row(v)) d += std::popcount(w);
    return d;
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t w : bits_) twice += std::popcount(w);
    return twice / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    const auto r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::uint64_t Graph::row64(int v) const {
    check_vertex(v);
    return words_ <= 1 ? (words_ ? bits_[static_cast<std::size_t>(v)] : 0) : throw std::logic_error("row64 on multi-word graph");
}

std::uint64_t Graph::full_mask64() const {
    if (n_ > 64) throw std::logic_error("full_mask64 on graph with n > 64");
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

Graph Graph::add_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (has_edge(u, v)) throw std::invalid_argument("edge already present");
    Graph g = *this;
    g.bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    g.bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    return g;
}

Graph Graph::remove_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
    Graph g = *this;
    g.bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    g.bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    return g;
}

bool Graph::is_complete() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != n_ - 1) return false;
    return true;
}

bool Graph::is_connected() const { return component_count(*this) <= 1; }

Graph Graph::induced_subgraph(std::span<const int> keep) const {
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        if (index[keep[i]] != -1) throw std::invalid_argument("duplicate vertex in induced_subgraph");
        index[keep[i]] = static_cast<int>(i);
    }
    GraphBuilder b(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.build();
}

Graph Graph::remove_vertex(int v) const {
    check_vertex(v);
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(keep);
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    g_.bits_[static_cast<std::size_t>(u) * g_.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    g_.bits_[static_cast<std::size_t>(v) * g_.words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void GraphBuilder::remove_edge(int u, int v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    g_.bits_[static_cast<std::size_t>(u) * g_.words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    g_.bits_[static_cast<std::size_t>(v) * g_.words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

int DegreeSequence::d(int i) const {
    if (i < 1 || i > n()) throw std::out_of_range("degree index " + std::to_string(i));
    return degrees[i - 1];
}

DegreeSequence degree_sequence(const Graph& g) {
    const int n = g.vertex_count();
    DegreeSequence seq;
    seq.labeling.resize(n);
    std::iota(seq.labeling.begin(), seq.labeling.end(), 0);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::sort(seq.labeling.begin(), seq.labeling.end(),
              [&](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
    seq.degrees.resize(n);
    for (int i = 0; i < n; ++i) seq.degrees[i] = deg[seq.labeling[i]];
    return seq;
}

int components_masked64(const Graph& g, std::uint64_t removed) {
    std::uint64_t alive = g.full_mask64() & ~removed;
    int count = 0;
    while (alive) {
        std::uint64_t comp = alive & (~alive + 1);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                next |= g.row64(std::countr_zero(f));
                f &= f - 1;
            }
            frontier = next & alive & ~comp;
            comp |= frontier;
        }
        alive &= ~comp;
        ++count;
    }
    return count;
}

namespace {

// Multi-word flood fill.
int components_general(const Graph& g, const std::vector<std::uint64_t>& removed) {
    const int n = g.vertex_count();
    const int words = g.word_count();
    std::vector<std::uint64_t> alive(words, 0);
    for (int w = 0; w < words; ++w) alive[w] = ~removed[w];
    if (n % 64) alive[words - 1] &= (std::uint64_t{1} << (n % 64)) - 1;

    std::vector<std::uint64_t> comp(words), frontier(words), next(words);
    int count = 0;
    for (;;) {
        int seed = -1;
        for (int w = 0; w < words && seed < 0; ++w)
            if (alive[w]) seed = w * 64 + std::countr_zero(alive[w]);
        if (seed < 0) break;
        std::fill(comp.begin(), comp.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        comp[seed / 64] = frontier[seed / 64] = std::uint64_t{1} << (seed % 64);
        bool grew = true;
        while (grew) {
            std::fill(next.begin(), next.end(), 0);
            for (int w = 0; w < words; ++w) {
                std::uint64_t f = frontier[w];
                while (f) {
                    const int v = w * 64 + std::countr_zero(f);
                    f &= f - 1;
                    const auto r = g.row(v);
                    for (int x = 0; x < words; ++x) next[x] |= r[x];
                }
            }
            grew = false;
            for (int w = 0; w < words; ++w) {
                frontier[w] = next[w] & alive[w] & ~comp[w];
                comp[w] |= frontier[w];
                grew = grew || frontier[w];
            }
        }
        for (int w = 0; w < words; ++w) alive[w] &= ~comp[w];
        ++count;
    }
    return count;
}

} // namespace

int components_after_removal(const Graph& g, std::span<const int> removed) {
    const int n = g.vertex_count();
    if (g.word_count() <= 1) {
        std::uint64_t mask = 0;
        for (int v : removed) {
            if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
            mask |= std::uint64_t{1} << v;
        }
        return n == 0 ? 0 : components_masked64(g, mask);
    }
    std::vector<std::uint64_t> mask(g.word_count(), 0);
    for (int v : removed) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
        mask[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    return components_general(g, mask);
}

int component_count(const Graph& g) { return components_after_removal(g, {}); }

std::vector<int> universal_clique(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == g.vertex_count() - 1) out.push_back(v);
    return out;
}

UAlpha u_alpha(const DegreeSequence& seq, int alpha) {
    const int n = seq.n();
    UAlpha res;
    res.in_stated_range = alpha >= 1 && alpha <= (n - 1) / 2;
    int first = n + 1;
    for (int i = n; i >= 1; --i) {
        if (seq.d(i) >= n - alpha)
            first = i;
        else
            break;
    }
    res.first_index = first;
    res.count = n - first + 1;
    return res;
}

} // namespace toughham
