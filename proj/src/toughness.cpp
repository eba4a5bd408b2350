#include "toughham/toughness.hpp"

#include <bit>
#include <stdexcept>

#include "toughham/errors.hpp"

namespace toughham {

namespace {

void check_size(const Graph& g) {
    if (g.vertex_count() > kToughnessMaxN)
        throw ResourceLimitError("toughness computation limited to n <= " +
                                 std::to_string(kToughnessMaxN));
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// A cutset containing a vertex v with all neighbors inside the cutset is
// never a minimizer: dropping v isolates it, giving (|S|-1)/(c+1) < |S|/c.
bool has_internal_vertex(const std::vector<std::uint64_t>& rows, std::uint64_t s,
                         std::uint64_t full) {
    std::uint64_t scan = s;
    while (scan) {
        const int v = std::countr_zero(scan);
        scan &= scan - 1;
        if (!(rows[v] & full & ~s)) return true;
    }
    return false;
}

} // namespace

Toughness toughness(const Graph& g, ToughnessMethod method) {
    check_size(g);
    const int n = g.vertex_count();
    if (g.is_complete()) return {true, Rational{}, std::nullopt};
    if (!g.is_connected())
        return {false, Rational{0}, ToughnessWitness{{}, component_count(g)}};

    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.row64(v);
    const std::uint64_t full = g.full_mask64();

    bool have = false;
    Rational best;
    std::uint64_t best_mask = 0;
    int best_components = 0;

    for (std::uint64_t s = 1; s < full; ++s) {
        const int size = std::popcount(s);
        if (n - size < 2) continue;
        if (method == ToughnessMethod::pruned) {
            // |S|/c >= |S|/(n-|S|); anything above the incumbent is hopeless.
            if (have && Rational(size, n - size) > best) continue;
            if (has_internal_vertex(rows, s, full)) continue;
        }
        const int c = components_masked64(g, s);
        if (c < 2) continue;
        const Rational ratio(size, c);
        if (!have || ratio < best) {
            have = true;
            best = ratio;
            best_mask = s;
            best_components = c;
        } else if (ratio == best) {
            const auto cur = mask_to_vertices(s);
            if (cur < mask_to_vertices(best_mask)) {
                best_mask = s;
                best_components = c;
            }
        }
    }

    return {false, best, ToughnessWitness{mask_to_vertices(best_mask), best_components}};
}

bool is_t_tough(const Graph& g, const Rational& t) {
    if (t < Rational(0)) throw std::invalid_argument("t must be >= 0");
    check_size(g);
    const int n = g.vertex_count();
    if (g.is_complete()) return true;
    if (!g.is_connected()) return t <= Rational(0);
    if (t <= Rational(0)) return true;

    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.row64(v);
    const std::uint64_t full = g.full_mask64();

    for (std::uint64_t s = 1; s < full; ++s) {
        const int size = std::popcount(s);
        if (n - size < 2) continue;
        if (Rational(size, n - size) >= t) continue;
        if (has_internal_vertex(rows, s, full)) continue;
        const int c = components_masked64(g, s);
        if (c >= 2 && Rational(size, c) < t) return false;
    }
    return true;
}

bool min_degree_bound_check(const Graph& g, int t) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    int delta = n;
    for (int v = 0; v < n; ++v) delta = std::min(delta, g.degree(v));
    return delta >= 2 * t;
}

} // namespace toughham
