#include "toughham/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <istream>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "toughham/closure.hpp"
#include "toughham/codec.hpp"
#include "toughham/conditions.hpp"
#include "toughham/errors.hpp"
#include "toughham/families.hpp"
#include "toughham/hamilton.hpp"
#include "toughham/rational.hpp"
#include "toughham/toughness.hpp"

namespace toughham {

namespace {

using ojson = nlohmann::ordered_json;

int pair_count(int n) { return n * (n - 1) / 2; }

void check_enumeration_n(int n) {
    if (n < 0 || n > kEnumerationMaxN)
        throw std::invalid_argument("built-in enumeration covers 0 <= n <= " +
                                    std::to_string(kEnumerationMaxN) +
                                    "; use an external stream beyond that");
}

// ---- per-item evaluation ----

struct ItemOutcome {
    bool counted = true;
    bool hit = false;
    std::vector<Violation> violations;
};

using GraphChecker = std::function<ItemOutcome(const Graph&)>;

struct Tally {
    std::uint64_t checked = 0;
    std::uint64_t hits = 0;
    std::vector<Violation> violations;
};

// Strided fan-out over [0, count). Counters are additive and violations get
// a canonical sort later, so the merged result is independent of `jobs`.
Tally run_indexed(std::uint64_t count, int jobs,
                  const std::function<ItemOutcome(std::uint64_t)>& eval) {
    jobs = std::max(1, jobs);
    std::vector<Tally> tallies(jobs);
    std::vector<std::exception_ptr> errors(jobs);

    auto worker = [&](int w) {
        try {
            for (std::uint64_t i = w; i < count; i += static_cast<std::uint64_t>(jobs)) {
                ItemOutcome o = eval(i);
                if (o.counted) ++tallies[w].checked;
                if (o.hit) ++tallies[w].hits;
                for (auto& v : o.violations) tallies[w].violations.push_back(std::move(v));
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs - 1);
        for (int w = 1; w < jobs; ++w) threads.emplace_back(worker, w);
        worker(0);
        for (auto& th : threads) th.join();
    }
    for (int w = 0; w < jobs; ++w)
        if (errors[w]) std::rethrow_exception(errors[w]);

    Tally total;
    for (auto& t : tallies) {
        total.checked += t.checked;
        total.hits += t.hits;
        for (auto& v : t.violations) total.violations.push_back(std::move(v));
    }
    return total;
}

// ---- checker helpers ----

Violation make_violation(const Graph& g, const ojson& data) {
    return {encode_graph6(g), data.dump()};
}

struct QualifyingPair {
    int u, v, sum;
};

std::vector<QualifyingPair> qualifying_pairs(const Graph& g, int threshold) {
    std::vector<QualifyingPair> out;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) {
                const int s = g.degree(u) + g.degree(v);
                if (s >= threshold) out.push_back({u, v, s});
            }
    return out;
}

int min_degree(const Graph& g) {
    int d = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
    return d;
}

// ---- theorem checkers ----

GraphChecker checker_chvatal(const HamOptions& ham) {
    return [ham](const Graph& g) {
        ItemOutcome o;
        if (g.vertex_count() < 3) {
            o.counted = false;
            return o;
        }
        const auto seq = degree_sequence(g);
        const auto verdict = chvatal_condition(seq);
        if (!verdict.holds) return o;
        o.hit = verdict.antecedent_fired;
        if (!is_hamiltonian(g, ham)) {
            o.hit = true;
            ojson d;
            d["check"] = "chvatal_holds_but_not_hamiltonian";
            d["degrees"] = seq.degrees;
            o.violations.push_back(make_violation(g, d));
        }
        return o;
    };
}

GraphChecker checker_bc_closure(const HamOptions& ham) {
    return [ham](const Graph& g) {
        ItemOutcome o;
        if (g.vertex_count() < 3) {
            o.counted = false;
            return o;
        }
        const auto closed = t_closure(g, 0);
        o.hit = !closed.trace.added_edges.empty();
        const bool ham_g = is_hamiltonian(g, ham);
        const bool ham_c = is_hamiltonian(closed.graph, ham);
        if (ham_g != ham_c) {
            o.hit = true;
            ojson d;
            d["check"] = "closure_changed_hamiltonicity";
            d["hamiltonian"] = ham_g;
            d["closure_hamiltonian"] = ham_c;
            d["edges_added"] = closed.trace.added_edges.size();
            o.violations.push_back(make_violation(g, d));
        }
        return o;
    };
}

// Degree condition plus verified toughness implies Hamiltonian; shared by the
// Hoang and strengthened forms.
GraphChecker checker_condition_tough(int t, bool strengthened, const HamOptions& ham) {
    return [t, strengthened, ham](const Graph& g) {
        ItemOutcome o;
        if (g.vertex_count() < 3) {
            o.counted = false;
            return o;
        }
        const auto seq = degree_sequence(g);
        const auto verdict =
            strengthened ? strengthened_condition(seq, t) : hoang_condition(seq, t);
        if (!verdict.holds) return o;
        if (!is_t_tough(g, Rational(t))) return o;
        o.hit = true;
        if (!is_hamiltonian(g, ham)) {
            ojson d;
            d["check"] = strengthened ? "strengthened_holds_t_tough_but_not_hamiltonian"
                                      : "hoang_holds_t_tough_but_not_hamiltonian";
            d["t"] = t;
            d["degrees"] = seq.degrees;
            o.violations.push_back(make_violation(g, d));
        }
        return o;
    };
}

// On a t-tough graph, adding one nonadjacent pair with degree sum >= n-t
// never flips Hamiltonicity.
GraphChecker checker_closure_edge(int t, const HamOptions& ham) {
    return [t, ham](const Graph& g) {
        ItemOutcome o;
        const int n = g.vertex_count();
        if (n < 3) {
            o.counted = false;
            return o;
        }
        if (!is_t_tough(g, Rational(t))) return o;
        const auto pairs = qualifying_pairs(g, n - t);
        if (pairs.empty()) return o;
        o.hit = true;
        const bool ham_g = is_hamiltonian(g, ham);
        for (const auto& p : pairs) {
            const bool ham_plus = is_hamiltonian(g.add_edge(p.u, p.v), ham);
            if (ham_plus != ham_g) {
                ojson d;
                d["check"] = "single_edge_addition_flipped_hamiltonicity";
                d["t"] = t;
                d["u"] = p.u;
                d["v"] = p.v;
                d["sum"] = p.sum;
                d["hamiltonian"] = ham_g;
                d["hamiltonian_plus_edge"] = ham_plus;
                o.violations.push_back(make_violation(g, d));
            }
        }
        return o;
    };
}

GraphChecker checker_bauer(int t, const HamOptions& ham) {
    return [t, ham](const Graph& g) {
        ItemOutcome o;
        const int n = g.vertex_count();
        if (n < 3) {
            o.counted = false;
            return o;
        }
        const int delta = min_degree(g);
        if (!bauer_bound(n, Rational(t), delta)) return o;
        if (!is_t_tough(g, Rational(t))) return o;
        o.hit = true;
        if (!is_hamiltonian(g, ham)) {
            ojson d;
            d["check"] = "bauer_bound_holds_but_not_hamiltonian";
            d["t"] = t;
            d["min_degree"] = delta;
            o.violations.push_back(make_violation(g, d));
        }
        return o;
    };
}

// The construction's defining properties, all checked, none assumed:
// x and y nonadjacent with degree sum n-1, adding xy creates Hamiltonicity,
// the graph itself is not Hamiltonian, and toughness is exactly 1.
GraphChecker checker_counterexample(const HamOptions& ham) {
    return [ham](const Graph& g) {
        ItemOutcome o;
        o.hit = true;
        const int n = g.vertex_count();
        const int x = 0;
        const int y = n - 1;
        auto fail = [&](const char* check, const ojson& extra = ojson::object()) {
            ojson d = extra;
            d["check"] = check;
            o.violations.push_back(make_violation(g, d));
        };
        if (g.has_edge(x, y)) fail("x_adjacent_to_y");
        const int dsum = g.degree(x) + g.degree(y);
        if (dsum != n - 1) fail("degree_sum_not_n_minus_1", {{"sum", dsum}});
        if (!g.has_edge(x, y)) {
            if (!is_hamiltonian(g.add_edge(x, y), ham)) fail("g_plus_xy_not_hamiltonian");
        }
        if (is_hamiltonian(g, ham)) fail("g_hamiltonian");
        const auto tough = toughness(g);
        if (tough.infinite || tough.value != Rational(1))
            fail("toughness_not_1", {{"toughness", tough.str()}});
        return o;
    };
}

GraphChecker checker_small_n(const HamOptions& ham) {
    return [ham](const Graph& g) {
        ItemOutcome o;
        const int n = g.vertex_count();
        if (n < 3) {
            o.counted = false;
            return o;
        }
        if (!is_t_tough(g, Rational(1))) return o;
        const auto pairs = qualifying_pairs(g, n - 1);
        if (pairs.empty()) return o;
        o.hit = true;
        const bool ham_g = is_hamiltonian(g, ham);
        if (ham_g) return o;
        for (const auto& p : pairs) {
            if (is_hamiltonian(g.add_edge(p.u, p.v), ham)) {
                ojson d;
                d["check"] = "edge_addition_hamiltonian_but_graph_is_not";
                d["u"] = p.u;
                d["v"] = p.v;
                d["sum"] = p.sum;
                o.violations.push_back(make_violation(g, d));
            }
        }
        return o;
    };
}

GraphChecker checker_probe(int t, const HamOptions& ham) {
    return [t, ham](const Graph& g) {
        ItemOutcome o;
        if (g.vertex_count() < 3) {
            o.counted = false;
            return o;
        }
        const auto seq = degree_sequence(g);
        if (!strengthened_condition(seq, t).holds) return o;
        if (!is_t_tough(g, Rational(t))) return o;
        o.hit = true;
        if (!is_hamiltonian(g, ham)) {
            const auto tough = toughness(g);
            ojson d;
            d["check"] = "strengthened_holds_t_tough_but_not_hamiltonian";
            d["t"] = t;
            d["toughness"] = tough.str();
            if (tough.witness) {
                d["cutset"] = tough.witness->cutset;
                d["components"] = tough.witness->component_count;
            }
            d["degrees"] = seq.degrees;
            o.violations.push_back(make_violation(g, d));
        }
        return o;
    };
}

// ---- sources ----

struct Source {
    std::uint64_t count = 0;
    std::function<Graph(std::uint64_t)> get;
    bool truncated = false; // a budget cut the source short
};

Source builtin_source(int n_min, int n_max) {
    struct Block {
        int n;
        std::uint64_t offset;
        std::uint64_t count;
    };
    auto blocks = std::make_shared<std::vector<Block>>();
    std::uint64_t total = 0;
    for (int n = n_min; n <= n_max; ++n) {
        const std::uint64_t c = labeled_graph_count(n);
        blocks->push_back({n, total, c});
        total += c;
    }
    Source s;
    s.count = total;
    s.get = [blocks](std::uint64_t i) {
        for (const auto& b : *blocks)
            if (i < b.offset + b.count) return labeled_graph_from_mask(b.n, i - b.offset);
        throw std::out_of_range("graph index");
    };
    return s;
}

Source vector_source(std::vector<Graph> graphs) {
    auto vec = std::make_shared<std::vector<Graph>>(std::move(graphs));
    Source s;
    s.count = vec->size();
    s.get = [vec](std::uint64_t i) { return (*vec)[i]; };
    return s;
}

std::vector<Graph> drain_stream(std::istream& in, int n_min, int n_max) {
    std::vector<Graph> out;
    GraphStream stream(in);
    while (auto rec = stream.next()) {
        const int n = rec->graph.vertex_count();
        if (n >= n_min && n <= n_max) out.push_back(std::move(rec->graph));
    }
    return out;
}

std::vector<Graph> family_graphs(const std::string& id, int n_min, int n_max) {
    std::vector<Graph> out;
    for (int n = n_min; n <= n_max; ++n) {
        try {
            FamilyParams p;
            p.n = n;
            p.a = n / 2;
            p.b = n - n / 2;
            if (auto f = make_family(id, p)) out.push_back(std::move(f->graph));
        } catch (const std::invalid_argument&) {
            // parameter outside the family's domain (odd n, n too small): skip
        }
    }
    if (out.empty()) throw std::invalid_argument("family '" + id + "' has no instance in range");
    return out;
}

// ---- random corpus ----

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Graph random_dense(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> pd(0.80, 0.98);
    const double p = pd(rng);
    std::bernoulli_distribution edge(p);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) b.add_edge(u, v);
    return b.build();
}

Graph random_matching_perturbation(std::mt19937_64& rng, int n) {
    Graph g = complete_minus_perfect_matching(n);
    std::uniform_int_distribution<int> extra(0, 2);
    std::uniform_int_distribution<int> vd(0, n - 1);
    for (int k = extra(rng); k > 0; --k) {
        const int u = vd(rng), v = vd(rng);
        if (u != v && g.has_edge(u, v)) g = g.remove_edge(u, v);
    }
    return g;
}

Graph random_partial_matching(std::mt19937_64& rng, int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<int> kd(1, n / 2);
    Graph g = complete(n);
    const int k = kd(rng);
    for (int i = 0; i + 1 < 2 * k; i += 2) g = g.remove_edge(order[i], order[i + 1]);
    return g;
}

Graph random_candidate(std::mt19937_64& rng, int n_min, int n_max) {
    std::uniform_int_distribution<int> nd(n_min, n_max);
    const int n = nd(rng);
    std::uniform_int_distribution<int> md(0, 2);
    const int model = md(rng);
    if (model == 1) {
        const int even = n - (n % 2);
        if (even >= n_min && even >= 4) return random_matching_perturbation(rng, even);
    } else if (model == 2 && n >= 4) {
        return random_partial_matching(rng, n);
    }
    return random_dense(rng, n);
}

// First cfg.sample candidates (in attempt order) passing the toughness
// requirement; generation is sequential so the corpus is independent of the
// worker count.
std::vector<Graph> random_corpus(const VerifyConfig& cfg, int n_min, int n_max,
                                 const std::optional<Rational>& required_toughness) {
    std::vector<Graph> out;
    const std::uint64_t max_attempts = cfg.sample * 500 + 1000;
    for (std::uint64_t attempt = 0; attempt < max_attempts && out.size() < cfg.sample;
         ++attempt) {
        std::mt19937_64 rng(mix(*cfg.seed, attempt));
        Graph g = random_candidate(rng, n_min, n_max);
        if (required_toughness && !is_t_tough(g, *required_toughness)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

// ---- configuration ----

bool theorem_takes_t(const std::string& id) {
    return id == "thm_hoang_small_t" || id == "thm4_strengthened" ||
           id == "thm6_t_closure_edge" || id == "thm6b_bauer";
}

std::optional<Rational> toughness_requirement(const std::string& id, int t) {
    if (theorem_takes_t(id)) return Rational(t);
    if (id == "thm8_small_n") return Rational(1);
    if (id == "conjecture_probe") return Rational(t);
    return std::nullopt;
}

void validate_t(const std::string& id, int t) {
    if (id == "thm_hoang_small_t" && (t < 1 || t > 3))
        throw std::invalid_argument("thm_hoang_small_t requires t in {1, 2, 3}");
    if (id == "thm4_strengthened" && t < 4)
        throw std::invalid_argument(
            "thm4_strengthened requires t >= 4 (t = 2, 3 are open: use conjecture_probe)");
    if (id == "thm6_t_closure_edge" && t < 4)
        throw std::invalid_argument("thm6_t_closure_edge requires t >= 4");
    if (id == "thm6b_bauer" && t < 1)
        throw std::invalid_argument("thm6b_bauer requires t >= 1");
    if (id == "conjecture_probe" && t != 2 && t != 3)
        throw std::invalid_argument("conjecture_probe covers the open cases t = 2 and t = 3");
}

GraphChecker make_checker(const std::string& id, int t, const HamOptions& ham) {
    if (id == "thm1_chvatal") return checker_chvatal(ham);
    if (id == "thm5_bc_closure") return checker_bc_closure(ham);
    if (id == "thm_hoang_small_t") return checker_condition_tough(t, false, ham);
    if (id == "thm4_strengthened") return checker_condition_tough(t, true, ham);
    if (id == "thm6_t_closure_edge") return checker_closure_edge(t, ham);
    if (id == "thm6b_bauer") return checker_bauer(t, ham);
    if (id == "thm7_counterexample") return checker_counterexample(ham);
    if (id == "thm8_small_n") return checker_small_n(ham);
    if (id == "conjecture_probe") return checker_probe(t, ham);
    throw std::invalid_argument("unknown theorem id '" + id + "'");
}

VerificationReport run_verification(const VerifyConfig& cfg, bool is_probe) {
    const std::string id = is_probe ? "conjecture_probe" : cfg.theorem_id;
    if (!is_probe) {
        const auto ids = theorem_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            throw std::invalid_argument("unknown theorem id '" + id + "'");
    }
    validate_t(id, cfg.t);

    const int floor_n = id == "thm7_counterexample" ? 7 : 3;
    const int n_min = std::max(cfg.n_min, floor_n);
    const int n_max = cfg.n_max;
    if (n_min > n_max)
        throw std::invalid_argument("empty n range for " + id + " (needs n >= " +
                                    std::to_string(floor_n) + ")");
    if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");

    HamOptions ham;
    ham.node_budget = cfg.node_budget;

    const auto started = std::chrono::steady_clock::now();

    Source source;
    if (id == "thm7_counterexample") {
        std::vector<Graph> graphs;
        for (int n = n_min; n <= n_max; ++n) graphs.push_back(counterexample_graph(n).graph);
        source = vector_source(std::move(graphs));
    } else if (cfg.source == "builtin") {
        if (n_max > kEnumerationMaxN)
            throw std::invalid_argument("builtin enumeration covers n <= " +
                                        std::to_string(kEnumerationMaxN) +
                                        "; use --source stream beyond that");
        source = builtin_source(n_min, n_max);
    } else if (cfg.source == "stream") {
        if (!cfg.stream) throw std::invalid_argument("source=stream needs an input stream");
        source = vector_source(drain_stream(*cfg.stream, n_min, n_max));
    } else if (cfg.source == "random") {
        if (!cfg.seed) throw std::invalid_argument("source=random needs a seed");
        if (cfg.sample == 0) throw std::invalid_argument("source=random needs sample >= 1");
        auto corpus = random_corpus(cfg, n_min, n_max, toughness_requirement(id, cfg.t));
        source = vector_source(std::move(corpus));
        if (source.count < cfg.sample) source.truncated = true;
    } else if (cfg.source.rfind("family:", 0) == 0) {
        source = vector_source(family_graphs(cfg.source.substr(7), n_min, n_max));
    } else {
        throw std::invalid_argument("unknown source '" + cfg.source + "'");
    }

    std::uint64_t count = source.count;
    bool incomplete = source.truncated;
    if (is_probe && cfg.sample > 0 && count > cfg.sample) {
        count = cfg.sample;
        incomplete = true;
    }

    const auto checker = make_checker(id, cfg.t, ham);
    Tally tally =
        run_indexed(count, cfg.jobs, [&](std::uint64_t i) { return checker(source.get(i)); });

    std::sort(tally.violations.begin(), tally.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.graph6, a.data) < std::tie(b.graph6, b.data);
              });

    VerificationReport report;
    report.theorem_id = id;
    report.n_min = n_min;
    report.n_max = n_max;
    if (theorem_takes_t(id) || is_probe) report.t = cfg.t;
    report.source = id == "thm7_counterexample" ? "family:counterexample" : cfg.source;
    if (cfg.source == "random") {
        report.seed = cfg.seed;
        report.sample = cfg.sample;
    }
    if (is_probe) report.sample = cfg.sample;
    report.instances_checked = tally.checked;
    report.hypothesis_hits = tally.hits;
    report.violations = std::move(tally.violations);
    report.incomplete = incomplete;
    report.jobs = cfg.jobs;
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

} // namespace

std::uint64_t labeled_graph_count(int n) {
    check_enumeration_n(n);
    return std::uint64_t{1} << pair_count(n);
}

Graph labeled_graph_from_mask(int n, std::uint64_t mask) {
    check_enumeration_n(n);
    if (n > 0 && mask >> pair_count(n))
        throw std::out_of_range("edge mask wider than n(n-1)/2 bits");
    GraphBuilder b(n);
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if ((mask >> k) & 1) b.add_edge(u, v);
    return b.build();
}

void enumerate_labeled_graphs(int n, const std::function<void(const Graph&)>& fn) {
    const std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) fn(labeled_graph_from_mask(n, mask));
}

std::vector<std::string> theorem_ids() {
    return {"thm1_chvatal",        "thm5_bc_closure", "thm_hoang_small_t",
            "thm4_strengthened",   "thm6_t_closure_edge", "thm6b_bauer",
            "thm7_counterexample", "thm8_small_n"};
}

std::string VerificationReport::to_json() const {
    ojson j;
    j["theorem"] = theorem_id;
    j["source"] = source;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    if (t) j["t"] = *t;
    if (seed) j["seed"] = *seed;
    if (sample) j["sample"] = *sample;
    j["instances_checked"] = instances_checked;
    j["hypothesis_hits"] = hypothesis_hits;
    j["violation_count"] = violations.size();
    auto arr = ojson::array();
    for (const auto& v : violations) {
        ojson o;
        o["graph6"] = v.graph6;
        o["data"] = ojson::parse(v.data);
        arr.push_back(std::move(o));
    }
    j["violations"] = std::move(arr);
    j["incomplete"] = incomplete;
    return j.dump();
}

std::string VerificationReport::summary() const {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%s: %llu instances, %llu hypothesis hits, %zu violations (%.2f s, jobs=%d)%s",
                  theorem_id.c_str(), static_cast<unsigned long long>(instances_checked),
                  static_cast<unsigned long long>(hypothesis_hits), violations.size(),
                  wall_time_seconds, jobs, incomplete ? " [incomplete]" : "");
    return buf;
}

VerificationReport verify_theorem(const VerifyConfig& cfg) {
    if (cfg.theorem_id == "conjecture_probe") return run_verification(cfg, true);
    return run_verification(cfg, false);
}

VerificationReport conjecture_probe(const VerifyConfig& cfg) {
    return run_verification(cfg, true);
}

} // namespace toughham
