#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toughham/closure.hpp"
#include "toughham/codec.hpp"
#include "toughham/conditions.hpp"
#include "toughham/errors.hpp"
#include "toughham/families.hpp"
#include "toughham/hamilton.hpp"
#include "toughham/harness.hpp"
#include "toughham/rational.hpp"
#include "toughham/toughness.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using namespace toughham;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolations = 2;
constexpr int kExitResource = 3;

struct InputOptions {
    std::string path = "-";
    std::string format = "auto";
    std::string output = "human";
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, "input file, or - for stdin")->required();
    cmd->add_option("--format", in.format, "graph6|sparse6|edgelist|auto")
        ->check(CLI::IsMember({"graph6", "sparse6", "edgelist", "auto"}));
    cmd->add_option("--output", in.output, "json|human")
        ->check(CLI::IsMember({"json", "human"}));
}

std::optional<WireFormat> forced_format(const std::string& name) {
    if (name == "graph6") return WireFormat::graph6;
    if (name == "sparse6") return WireFormat::sparse6;
    if (name == "edgelist") return WireFormat::edgelist;
    return std::nullopt;
}

// Applies fn to every record of the input (file or stdin).
void for_each_graph(const InputOptions& in, const std::function<void(const Graph&)>& fn) {
    std::ifstream file;
    std::istream* is = &std::cin;
    if (in.path != "-") {
        file.open(in.path);
        if (!file) throw std::invalid_argument("cannot open input '" + in.path + "'");
        is = &file;
    }
    GraphStream stream(*is, forced_format(in.format));
    bool any = false;
    while (auto rec = stream.next()) {
        any = true;
        fn(rec->graph);
    }
    if (!any) throw std::invalid_argument("input contains no graphs");
}

// (lo, hi) from "7", "3-6" or "3..6".
std::pair<int, int> parse_range(const std::string& text) {
    auto sep = text.find('-');
    std::size_t skip = 1;
    if (sep == std::string::npos) {
        sep = text.find("..");
        skip = 2;
    }
    try {
        if (sep == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + skip))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad n range '" + text + "' (expected N or LO-HI)");
    }
}

int run_ham(const InputOptions& in, bool certificate, const std::string& engine,
            std::uint64_t budget) {
    HamOptions opts;
    opts.node_budget = budget;
    if (engine == "dp") opts.engine = HamEngine::subset_dp;
    if (engine == "bt") opts.engine = HamEngine::backtracking;
    for_each_graph(in, [&](const Graph& g) {
        if (certificate) {
            const auto cert = hamiltonian_cycle(g, opts);
            if (in.output == "json") {
                ojson j;
                j["hamiltonian"] = cert.has_value();
                if (cert) j["certificate"] = cert->order;
                std::cout << j.dump() << '\n';
            } else if (cert) {
                std::cout << "hamiltonian:";
                for (int v : cert->order) std::cout << ' ' << v;
                std::cout << '\n';
            } else {
                std::cout << "not hamiltonian\n";
            }
        } else {
            const bool ham = is_hamiltonian(g, opts);
            if (in.output == "json")
                std::cout << ojson{{"hamiltonian", ham}}.dump() << '\n';
            else
                std::cout << (ham ? "hamiltonian" : "not hamiltonian") << '\n';
        }
    });
    return kExitOk;
}

int run_tough(const InputOptions& in, const std::string& decide, bool witness,
              const std::string& method) {
    const ToughnessMethod m =
        method == "definitional" ? ToughnessMethod::definitional : ToughnessMethod::pruned;
    for_each_graph(in, [&](const Graph& g) {
        if (!decide.empty()) {
            const Rational t = parse_rational(decide);
            const bool ok = is_t_tough(g, t);
            if (in.output == "json")
                std::cout << ojson{{"t", t.str()}, {"t_tough", ok}}.dump() << '\n';
            else
                std::cout << (ok ? "true" : "false") << '\n';
            return;
        }
        const Toughness tough = toughness(g, m);
        if (in.output == "json") {
            ojson j;
            j["toughness"] = tough.str();
            j["infinite"] = tough.infinite;
            if (tough.witness) {
                j["cutset"] = tough.witness->cutset;
                j["components"] = tough.witness->component_count;
            }
            std::cout << j.dump() << '\n';
        } else {
            std::cout << tough.str();
            if (witness && tough.witness) {
                std::cout << "  cutset:";
                for (int v : tough.witness->cutset) std::cout << ' ' << v;
                std::cout << "  components: " << tough.witness->component_count;
            }
            std::cout << '\n';
        }
    });
    return kExitOk;
}

int run_closure(const InputOptions& in, int t, bool trace) {
    for_each_graph(in, [&](const Graph& g) {
        const auto result = t_closure(g, t);
        if (in.output == "json") {
            ojson j;
            j["graph6"] = encode_graph6(result.graph);
            j["threshold"] = result.trace.threshold;
            auto arr = ojson::array();
            for (const auto& e : result.trace.added_edges)
                arr.push_back(ojson{{"u", e.u}, {"v", e.v}, {"sum", e.degree_sum}});
            j["added"] = std::move(arr);
            std::cout << j.dump() << '\n';
        } else {
            std::cout << encode_graph6(result.graph) << '\n';
            if (trace) std::cout << result.trace.to_json_lines();
        }
    });
    return kExitOk;
}

int run_cond(const InputOptions& in, const std::string& which, int t) {
    for_each_graph(in, [&](const Graph& g) {
        const auto seq = degree_sequence(g);
        ConditionVerdict v;
        if (which == "chvatal")
            v = chvatal_condition(seq);
        else if (which == "hoang")
            v = hoang_condition(seq, t);
        else
            v = strengthened_condition(seq, t);
        std::cout << v.to_json() << '\n';
    });
    return kExitOk;
}

int run_gen(const std::string& family, int n, int a, int b, const std::string& format) {
    FamilyParams p;
    p.n = n;
    p.a = a;
    p.b = b;
    const auto f = make_family(family, p);
    if (!f) throw std::invalid_argument("unknown family '" + family + "'");
    if (format == "edgelist")
        std::cout << encode_edgelist(f->graph);
    else
        std::cout << encode_graph6(f->graph) << '\n';
    ojson labels;
    labels["family"] = f->family_id;
    labels["parameters"] = f->parameters;
    labels["labels"] = f->labels;
    std::cerr << labels.dump() << '\n';
    return kExitOk;
}

int run_verify(const std::string& theorem, const std::string& range, int t,
               const std::string& source, const std::string& input,
               std::optional<std::uint64_t> seed, std::uint64_t sample, int jobs,
               std::uint64_t budget) {
    VerifyConfig cfg;
    cfg.theorem_id = theorem;
    std::tie(cfg.n_min, cfg.n_max) = parse_range(range);
    cfg.t = t;
    cfg.source = source;
    cfg.seed = seed;
    cfg.sample = sample;
    cfg.jobs = jobs;
    cfg.node_budget = budget;

    std::ifstream file;
    if (cfg.source == "stream") {
        if (input != "-") {
            file.open(input);
            if (!file) throw std::invalid_argument("cannot open input '" + input + "'");
            cfg.stream = &file;
        } else {
            cfg.stream = &std::cin;
        }
    }

    const auto report = verify_theorem(cfg);
    std::cout << report.to_json() << '\n';
    std::cerr << report.summary() << '\n';
    return report.violations.empty() ? kExitOk : kExitViolations;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hamiltonicity, toughness and degree-condition toolkit"};
    app.require_subcommand(1);

    InputOptions ham_in;
    bool ham_cert = false;
    std::string ham_engine = "auto";
    std::uint64_t ham_budget = 50'000'000;
    auto* ham = app.add_subcommand("ham", "decide Hamiltonicity");
    add_input_flags(ham, ham_in);
    ham->add_flag("--certificate", ham_cert, "print a Hamiltonian cycle when one exists");
    ham->add_option("--engine", ham_engine, "auto|dp|bt")
        ->check(CLI::IsMember({"auto", "dp", "bt"}));
    ham->add_option("--budget", ham_budget, "backtracking node budget");

    InputOptions tough_in;
    std::string tough_decide;
    std::string tough_method = "pruned";
    bool tough_witness = false;
    auto* tough = app.add_subcommand("tough", "exact toughness");
    add_input_flags(tough, tough_in);
    tough->add_option("--decide", tough_decide, "test tau >= p/q instead of computing tau");
    tough->add_option("--method", tough_method, "pruned|definitional")
        ->check(CLI::IsMember({"pruned", "definitional"}));
    tough->add_flag("--witness", tough_witness, "also print a minimizing cutset");

    InputOptions closure_in;
    int closure_t = 0;
    bool closure_trace = false;
    auto* closure = app.add_subcommand("closure", "t-closure (threshold n - t)");
    add_input_flags(closure, closure_in);
    closure->add_option("--t", closure_t, "closure parameter t (0 = Bondy-Chvatal)")
        ->check(CLI::NonNegativeNumber);
    closure->add_flag("--trace", closure_trace, "print added edges as JSON lines");

    InputOptions cond_in;
    std::string cond_which;
    int cond_t = 0;
    auto* cond = app.add_subcommand("cond", "degree-sequence conditions");
    add_input_flags(cond, cond_in);
    cond->add_option("--which", cond_which, "chvatal|hoang|strong")
        ->required()
        ->check(CLI::IsMember({"chvatal", "hoang", "strong"}));
    cond->add_option("--t", cond_t, "condition parameter t")->check(CLI::NonNegativeNumber);

    std::string gen_family;
    int gen_n = 0, gen_a = 0, gen_b = 0;
    std::string gen_format = "graph6";
    auto* gen = app.add_subcommand("gen", "generate a named family graph");
    gen->add_option("--family", gen_family, "family id")->required();
    gen->add_option("--n", gen_n, "order n");
    gen->add_option("--a", gen_a, "first side (complete_bipartite)");
    gen->add_option("--b", gen_b, "second side (complete_bipartite)");
    gen->add_option("--format", gen_format, "graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    std::string verify_theorem_id, verify_range = "3-6", verify_source = "builtin";
    std::string verify_input = "-";
    int verify_t = 0, verify_jobs = 1;
    std::optional<std::uint64_t> verify_seed;
    std::uint64_t verify_sample = 1000, verify_budget = 50'000'000;
    auto* verify = app.add_subcommand("verify", "run the theorem-verification harness");
    verify->add_option("--theorem", verify_theorem_id, "theorem id or conjecture_probe")
        ->required();
    verify->add_option("--n", verify_range, "n or n range LO-HI");
    verify->add_option("--t", verify_t, "theorem parameter t")->check(CLI::NonNegativeNumber);
    verify->add_option("--source", verify_source, "builtin|stream|random|family:<id>");
    verify->add_option("--input", verify_input, "stream input file, - for stdin");
    std::uint64_t seed_value = 0;
    auto* seed_opt = verify->add_option("--seed", seed_value, "seed for source=random");
    verify->add_option("--sample", verify_sample, "random sample size / probe budget");
    verify->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--budget", verify_budget, "Hamiltonicity node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help lands here too and must keep exit 0; anything else is usage
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*ham) return run_ham(ham_in, ham_cert, ham_engine, ham_budget);
        if (*tough) return run_tough(tough_in, tough_decide, tough_witness, tough_method);
        if (*closure) return run_closure(closure_in, closure_t, closure_trace);
        if (*cond) return run_cond(cond_in, cond_which, cond_t);
        if (*gen) return run_gen(gen_family, gen_n, gen_a, gen_b, gen_format);
        if (*verify) {
            if (seed_opt->count() > 0) verify_seed = seed_value;
            return run_verify(verify_theorem_id, verify_range, verify_t, verify_source,
                              verify_input, verify_seed, verify_sample, verify_jobs,
                              verify_budget);
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
