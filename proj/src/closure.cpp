#include "toughham/closure.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "toughham/conditions.hpp"

namespace toughham {

namespace {

struct ClosureState {
    GraphBuilder builder;
    std::vector<int> deg;
    ClosureTrace trace;

    ClosureState(const Graph& g, int threshold) : builder(g), deg(g.vertex_count()) {
        for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
        trace.threshold = threshold;
    }

    bool qualifies(int u, int v) const {
        return !builder.has_edge(u, v) && deg[u] + deg[v] >= trace.threshold;
    }

    void add(int u, int v) {
        trace.added_edges.push_back({u, v, deg[u] + deg[v]});
        builder.add_edge(u, v);
        ++deg[u];
        ++deg[v];
    }
};

} // namespace

std::string ClosureTrace::to_json_lines() const {
    std::string out;
    for (const auto& e : added_edges) {
        nlohmann::ordered_json j;
        j["u"] = e.u;
        j["v"] = e.v;
        j["sum"] = e.degree_sum;
        out += j.dump();
        out += '\n';
    }
    return out;
}

ClosureResult degree_sum_closure(const Graph& g, int threshold) {
    if (threshold < 0) throw std::invalid_argument("closure threshold must be >= 0");
    const int n = g.vertex_count();
    // Two nonadjacent vertices have degree at most n-2 each.
    if (threshold > 2 * n - 4) return {g, ClosureTrace{threshold, {}}};

    ClosureState st(g, threshold);
    bool added = true;
    while (added) {
        added = false;
        for (int u = 0; u < n && !added; ++u)
            for (int v = u + 1; v < n && !added; ++v)
                if (st.qualifies(u, v)) {
                    st.add(u, v);
                    added = true;
                }
    }
    return {st.builder.build(), std::move(st.trace)};
}

ClosureResult t_closure(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    // Degree sums are >= 0, so any threshold below zero behaves like zero.
    return degree_sum_closure(g, std::max(0, g.vertex_count() - t));
}

ClosureResult degree_sum_closure_shuffled(const Graph& g, int threshold, std::uint64_t seed) {
    if (threshold < 0) throw std::invalid_argument("closure threshold must be >= 0");
    const int n = g.vertex_count();
    if (threshold > 2 * n - 4) return {g, ClosureTrace{threshold, {}}};

    ClosureState st(g, threshold);
    std::mt19937_64 rng(seed);
    while (true) {
        std::vector<std::pair<int, int>> pool;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (st.qualifies(u, v)) pool.emplace_back(u, v);
        if (pool.empty()) break;
        const auto [u, v] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        st.add(u, v);
    }
    return {st.builder.build(), std::move(st.trace)};
}

bool closure_preserves_condition_check(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (g.vertex_count() < 3) throw std::invalid_argument("requires n >= 3");
    if (!strengthened_condition(degree_sequence(g), t).holds) return true;
    const Graph closed = t_closure(g, t).graph;
    return strengthened_condition(degree_sequence(closed), t).holds;
}

} // namespace toughham
