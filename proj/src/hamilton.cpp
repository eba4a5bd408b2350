#include "toughham/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "toughham/errors.hpp"

namespace toughham {

namespace {

constexpr int kDpHardMaxN = 25;
constexpr int kBacktrackMaxN = 64;

thread_local std::vector<std::uint32_t> dp_scratch;

std::vector<std::uint64_t> row_masks(const Graph& g) {
    std::vector<std::uint64_t> rows(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) rows[v] = g.row64(v);
    return rows;
}

// Rejections shared by both engines: a spanning cycle needs n edges, min
// degree 2 and connectivity.
bool cheap_cycle_reject(const Graph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() < n) return true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2) return true;
    return !g.is_connected();
}

// Held-Karp reachability from vertex 0 over odd subsets: dp[S] is the set of
// endpoints v with a spanning path of G[S] from 0 to v.
void run_cycle_dp(const std::vector<std::uint64_t>& rows, int n) {
    const std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
    dp_scratch.assign(std::size_t{1} << n, 0);
    dp_scratch[1] = 1;
    for (std::uint32_t s = 1; s < full; s += 2) {
        const std::uint32_t ends = dp_scratch[s];
        if (!ends) continue;
        std::uint32_t rest = ~s & full;
        while (rest) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (ends & rows[u]) dp_scratch[s | (1u << u)] |= 1u << u;
        }
    }
}

bool dp_is_hamiltonian(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kDpHardMaxN)
        throw ResourceLimitError("subset DP limited to n <= " + std::to_string(kDpHardMaxN));
    const auto rows = row_masks(g);
    run_cycle_dp(rows, n);
    const std::uint32_t full = (1u << n) - 1;
    return (dp_scratch[full] & rows[0]) != 0;
}

std::optional<CycleCertificate> dp_cycle_certificate(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kDpHardMaxN)
        throw ResourceLimitError("subset DP limited to n <= " + std::to_string(kDpHardMaxN));
    const auto rows = row_masks(g);
    run_cycle_dp(rows, n);
    const std::uint32_t full = (1u << n) - 1;
    std::uint32_t closing = dp_scratch[full] & static_cast<std::uint32_t>(rows[0]);
    if (!closing) return std::nullopt;

    std::vector<int> order;
    order.reserve(n);
    int v = std::countr_zero(closing);
    std::uint32_t s = full;
    while (s != 1) {
        order.push_back(v);
        s &= ~(1u << v);
        const std::uint32_t preds = dp_scratch[s] & static_cast<std::uint32_t>(rows[v]);
        v = std::countr_zero(preds);
    }
    order.push_back(0);
    std::reverse(order.begin(), order.end());
    return CycleCertificate{std::move(order)};
}

bool dp_has_path(const Graph& g, std::optional<int> from, std::optional<int> to) {
    const int n = g.vertex_count();
    if (n > kDpHardMaxN)
        throw ResourceLimitError("subset DP limited to n <= " + std::to_string(kDpHardMaxN));
    const auto rows = row_masks(g);
    const std::uint32_t full = (1u << n) - 1;
    dp_scratch.assign(std::size_t{1} << n, 0);
    if (from)
        dp_scratch[1u << *from] = 1u << *from;
    else
        for (int v = 0; v < n; ++v) dp_scratch[1u << v] = 1u << v;
    for (std::uint32_t s = 1; s < full; ++s) {
        const std::uint32_t ends = dp_scratch[s];
        if (!ends) continue;
        std::uint32_t rest = ~s & full;
        while (rest) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (ends & rows[u]) dp_scratch[s | (1u << u)] |= 1u << u;
        }
    }
    const std::uint32_t ends = dp_scratch[full];
    return to ? ((ends >> *to) & 1) != 0 : ends != 0;
}

std::uint64_t flood64(const std::vector<std::uint64_t>& rows, std::uint64_t seed_frontier,
                      std::uint64_t allowed) {
    std::uint64_t reach = seed_frontier & allowed;
    std::uint64_t frontier = reach;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            next |= rows[std::countr_zero(f)];
            f &= f - 1;
        }
        frontier = next & allowed & ~reach;
        reach |= frontier;
    }
    return reach;
}

struct CycleBacktracker {
    const std::vector<std::uint64_t>& rows;
    int n;
    std::uint64_t full;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::uint64_t visited = 1;
    std::vector<int> path{0};

    bool extend(int u) {
        if (++nodes > budget)
            throw ResourceLimitError("hamiltonicity undecided: node budget exceeded");
        if (static_cast<int>(path.size()) == n) return (rows[u] & 1) != 0;

        const std::uint64_t unvisited = full & ~visited;
        // The cycle re-enters 0 from an unvisited vertex.
        if (!(rows[0] & unvisited)) return false;
        // Cut prune: every remaining vertex must be reachable from u.
        if (flood64(rows, rows[u], unvisited) != unvisited) return false;

        // Each unvisited vertex needs two cycle-neighbors drawn from the
        // unvisited set, u and the start. When u already has a fixed
        // predecessor, a vertex whose only options are {u, x} must be next.
        const std::uint64_t pool = unvisited | (std::uint64_t{1} << u) | 1;
        int forced = -1;
        std::uint64_t scan = unvisited;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const std::uint64_t av = rows[v] & pool;
            const int c = std::popcount(av);
            if (c < 2) return false;
            if (c == 2 && path.size() >= 2 && ((av >> u) & 1)) {
                if (forced >= 0) return false;
                forced = v;
            }
        }

        std::uint64_t cands =
            forced >= 0 ? (std::uint64_t{1} << forced) : rows[u] & unvisited;
        while (cands) {
            const int v = std::countr_zero(cands);
            cands &= cands - 1;
            visited |= std::uint64_t{1} << v;
            path.push_back(v);
            if (extend(v)) return true;
            path.pop_back();
            visited &= ~(std::uint64_t{1} << v);
        }
        return false;
    }
};

bool bt_cycle(const Graph& g, const HamOptions& opts, std::vector<int>* out) {
    const int n = g.vertex_count();
    if (n > kBacktrackMaxN)
        throw ResourceLimitError("backtracking search limited to n <= " +
                                 std::to_string(kBacktrackMaxN));
    if (cheap_cycle_reject(g)) return false;
    const auto rows = row_masks(g);
    CycleBacktracker bt{rows, n, g.full_mask64(), opts.node_budget};
    if (!bt.extend(0)) return false;
    if (out) *out = bt.path;
    return true;
}

struct PathBacktracker {
    const std::vector<std::uint64_t>& rows;
    int n;
    std::uint64_t full;
    std::optional<int> to;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::uint64_t visited = 0;
    std::vector<int> path{};

    bool extend(int u) {
        if (++nodes > budget)
            throw ResourceLimitError("hamiltonian path undecided: node budget exceeded");
        if (static_cast<int>(path.size()) == n) return !to || u == *to;

        const std::uint64_t unvisited = full & ~visited;
        if (flood64(rows, rows[u], unvisited) != unvisited) return false;

        const std::uint64_t pool = unvisited | (std::uint64_t{1} << u);
        int singles = 0;
        std::uint64_t scan = unvisited;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const int c = std::popcount(rows[v] & pool);
            if (to) {
                if (c < (v == *to ? 1 : 2)) return false;
            } else {
                if (c < 1) return false;
                if (c == 1 && ++singles > 1) return false;
            }
        }

        std::uint64_t cands = rows[u] & unvisited;
        // A fixed terminus is only enterable as the last vertex.
        if (to && static_cast<int>(path.size()) < n - 1) cands &= ~(std::uint64_t{1} << *to);
        while (cands) {
            const int v = std::countr_zero(cands);
            cands &= cands - 1;
            visited |= std::uint64_t{1} << v;
            path.push_back(v);
            if (extend(v)) return true;
            path.pop_back();
            visited &= ~(std::uint64_t{1} << v);
        }
        return false;
    }
};

bool bt_path(const Graph& g, std::optional<int> from, std::optional<int> to,
             const HamOptions& opts) {
    const int n = g.vertex_count();
    if (n > kBacktrackMaxN)
        throw ResourceLimitError("backtracking search limited to n <= " +
                                 std::to_string(kBacktrackMaxN));
    if (!g.is_connected()) return false;
    const auto rows = row_masks(g);
    std::vector<int> starts;
    if (from)
        starts.push_back(*from);
    else
        for (int v = 0; v < n; ++v) starts.push_back(v);
    for (int s : starts) {
        if (to && s == *to) continue;
        PathBacktracker bt{rows, n, g.full_mask64(), to, opts.node_budget};
        bt.visited = std::uint64_t{1} << s;
        bt.path = {s};
        if (bt.extend(s)) return true;
    }
    return false;
}

bool use_dp(const Graph& g, const HamOptions& opts) {
    switch (opts.engine) {
    case HamEngine::subset_dp: return true;
    case HamEngine::backtracking: return false;
    case HamEngine::automatic: return g.vertex_count() <= kDpMaxN;
    }
    return true;
}

} // namespace

bool is_hamiltonian(const Graph& g, const HamOptions& opts) {
    if (g.vertex_count() < 3) return false;
    if (cheap_cycle_reject(g)) return false;
    if (use_dp(g, opts)) return dp_is_hamiltonian(g);
    return bt_cycle(g, opts, nullptr);
}

std::optional<CycleCertificate> hamiltonian_cycle(const Graph& g, const HamOptions& opts) {
    if (g.vertex_count() < 3) return std::nullopt;
    if (cheap_cycle_reject(g)) return std::nullopt;
    std::optional<CycleCertificate> cert;
    if (use_dp(g, opts)) {
        cert = dp_cycle_certificate(g);
    } else {
        std::vector<int> order;
        if (bt_cycle(g, opts, &order)) cert = CycleCertificate{std::move(order)};
    }
    // canonical orientation: the neighbor after 0 is the smaller of the two
    if (cert && cert->order[1] > cert->order.back())
        std::reverse(cert->order.begin() + 1, cert->order.end());
    return cert;
}

bool check_certificate(const Graph& g, const CycleCertificate& c) {
    const int n = g.vertex_count();
    if (n < 3 || static_cast<int>(c.order.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : c.order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(c.order[i], c.order[(i + 1) % n])) return false;
    return true;
}

bool has_hamiltonian_path(const Graph& g, std::optional<int> from, std::optional<int> to,
                          const HamOptions& opts) {
    const int n = g.vertex_count();
    const auto check_id = [&](int v) {
        if (v < 0 || v >= n) throw std::invalid_argument("endpoint id out of range");
    };
    if (from) check_id(*from);
    if (to) check_id(*to);
    if (from && to && *from == *to)
        throw std::invalid_argument("path endpoints must be distinct");
    if (n == 0) return false;
    if (n == 1) return true;
    if (use_dp(g, opts)) return dp_has_path(g, from, to);
    return bt_path(g, from, to, opts);
}

} // namespace toughham
