#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "toughham/codec.hpp"
#include "toughham/families.hpp"
#include "toughham/graph.hpp"
#include "toughham/harness.hpp"

using namespace toughham;

namespace {

VerifyConfig base_config(const std::string& id, int n_min, int n_max) {
    VerifyConfig cfg;
    cfg.theorem_id = id;
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    return cfg;
}

} // namespace

TEST_SUITE("harness") {

TEST_CASE("labeled graph counting and the mask convention") {
    CHECK(labeled_graph_count(3) == 8);
    CHECK(labeled_graph_count(6) == 32768);
    CHECK(labeled_graph_count(0) == 1);

    // all 64 masks on 4 vertices produce 64 distinct graphs, and the mask
    // bit order matches the graph6 body bit order
    std::set<std::string> seen;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const Graph g = labeled_graph_from_mask(4, mask);
        seen.insert(encode_graph6(g));
    }
    CHECK(seen.size() == 64);
    CHECK(labeled_graph_from_mask(3, 7) == complete(3));
    CHECK(labeled_graph_from_mask(3, 0) == Graph(3));

    int count = 0;
    int hamiltonian = 0;
    enumerate_labeled_graphs(4, [&](const Graph& g) {
        ++count;
        if (oracle::is_hamiltonian_perm(g)) ++hamiltonian;
    });
    CHECK(count == 64);
    // 3 labelings of C_4, 6 of C_4 plus a chord, 1 of K_4
    CHECK(hamiltonian == 10);
}

TEST_CASE("theorem id registry") {
    const auto ids = theorem_ids();
    CHECK(ids.size() == 8);
    for (const char* want :
         {"thm1_chvatal", "thm5_bc_closure", "thm_hoang_small_t", "thm4_strengthened",
          "thm6_t_closure_edge", "thm6b_bauer", "thm7_counterexample", "thm8_small_n"})
        CHECK(std::find(ids.begin(), ids.end(), want) != ids.end());
}

TEST_CASE("small-n pair theorem over tiny range") {
    auto cfg = base_config("thm8_small_n", 3, 4);
    const auto rep = verify_theorem(cfg);
    CHECK(rep.instances_checked == 8 + 64);
    CHECK(rep.hypothesis_hits == 9);
    CHECK(rep.violations.empty());
    CHECK_FALSE(rep.incomplete);
    CHECK(rep.theorem_id == "thm8_small_n");
    CHECK(rep.source == "builtin");
}

TEST_CASE("no violations for the established statements on builtin ranges") {
    CHECK(verify_theorem(base_config("thm1_chvatal", 3, 6)).violations.empty());
    CHECK(verify_theorem(base_config("thm5_bc_closure", 3, 6)).violations.empty());
    auto hoang = base_config("thm_hoang_small_t", 3, 6);
    hoang.t = 1;
    CHECK(verify_theorem(hoang).violations.empty());
    auto strong = base_config("thm4_strengthened", 3, 6);
    strong.t = 4;
    CHECK(verify_theorem(strong).violations.empty());
    auto bauer = base_config("thm6b_bauer", 3, 6);
    bauer.t = 1;
    const auto brep = verify_theorem(bauer);
    CHECK(brep.violations.empty());
    CHECK(brep.hypothesis_hits > 0);
}

TEST_CASE("counterexample family checker visits every instance") {
    const auto rep = verify_theorem(base_config("thm7_counterexample", 7, 9));
    CHECK(rep.instances_checked == 3);
    CHECK(rep.hypothesis_hits == 3);
    CHECK(rep.violations.empty());
}

TEST_CASE("family source") {
    auto cfg = base_config("thm4_strengthened", 10, 12);
    cfg.t = 4;
    cfg.source = "family:complete_minus_perfect_matching";
    const auto rep = verify_theorem(cfg);
    // only the even orders exist in this family
    CHECK(rep.instances_checked == 2);
    CHECK(rep.hypothesis_hits == 2);
    CHECK(rep.violations.empty());
    CHECK(rep.source == "family:complete_minus_perfect_matching");
}

TEST_CASE("random source is seeded and reproducible") {
    auto cfg = base_config("thm6b_bauer", 6, 8);
    cfg.t = 1;
    cfg.source = "random";
    cfg.seed = 42;
    cfg.sample = 60;
    const auto a = verify_theorem(cfg);
    const auto b = verify_theorem(cfg);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.instances_checked == 60);
    CHECK(a.violations.empty());
    CHECK(a.seed.has_value());
    CHECK(*a.seed == 42);
    cfg.seed = 43;
    const auto c = verify_theorem(cfg);
    CHECK(a.to_json() != c.to_json());
}

TEST_CASE("stream source matches builtin enumeration") {
    std::ostringstream all;
    enumerate_labeled_graphs(5, [&](const Graph& g) { all << encode_graph6(g) << "\n"; });
    std::istringstream in(all.str());

    auto scfg = base_config("thm1_chvatal", 3, 7);
    scfg.source = "stream";
    scfg.stream = &in;
    const auto from_stream = verify_theorem(scfg);

    const auto builtin = verify_theorem(base_config("thm1_chvatal", 5, 5));
    CHECK(from_stream.instances_checked == builtin.instances_checked);
    CHECK(from_stream.hypothesis_hits == builtin.hypothesis_hits);
    CHECK(from_stream.violations.size() == builtin.violations.size());
}

TEST_CASE("stream source finds the planted violation") {
    const Graph g = counterexample_graph(7).graph;
    std::istringstream in(encode_graph6(g) + "\n");
    auto cfg = base_config("thm8_small_n", 3, 7);
    cfg.source = "stream";
    cfg.stream = &in;
    const auto rep = verify_theorem(cfg);
    CHECK(rep.instances_checked == 1);
    CHECK(rep.hypothesis_hits == 1);
    // two qualifying pairs restore Hamiltonicity: the ends (0, 6) and (3, 6)
    REQUIRE(rep.violations.size() == 2);
    CHECK(rep.violations[0].graph6 == encode_graph6(g));
    CHECK(parse_graph6(rep.violations[0].graph6) == g);
    CHECK(rep.violations[0].data.find("\"u\":0,\"v\":6") != std::string::npos);
    CHECK(rep.violations[1].data.find("\"u\":3,\"v\":6") != std::string::npos);
}

TEST_CASE("reports are byte-identical across job counts") {
    for (const char* id : {"thm8_small_n", "thm5_bc_closure"}) {
        auto one = base_config(id, 3, 6);
        one.jobs = 1;
        auto four = base_config(id, 3, 6);
        four.jobs = 4;
        const auto a = verify_theorem(one);
        const auto b = verify_theorem(four);
        CHECK(a.to_json() == b.to_json());
    }
}

TEST_CASE("violations sort canonically even from the stream source") {
    const std::string bad = encode_graph6(counterexample_graph(7).graph);
    const std::string good = encode_graph6(complete(7));
    std::istringstream in(bad + "\n" + good + "\n" + bad + "\n");
    auto cfg = base_config("thm8_small_n", 3, 7);
    cfg.source = "stream";
    cfg.stream = &in;
    cfg.jobs = 3;
    const auto rep = verify_theorem(cfg);
    CHECK(rep.instances_checked == 3);
    // each planted copy contributes its two flipping pairs; ties collapse to
    // a stable (graph6, data) order regardless of which worker saw them
    REQUIRE(rep.violations.size() == 4);
    for (const auto& v : rep.violations) CHECK(v.graph6 == bad);
    CHECK(rep.violations[0].data == rep.violations[1].data);
    CHECK(rep.violations[2].data == rep.violations[3].data);
    CHECK(rep.violations[0].data < rep.violations[2].data);
}

TEST_CASE("report json shape") {
    const auto rep = verify_theorem(base_config("thm8_small_n", 3, 4));
    const std::string j = rep.to_json();
    CHECK(j.find("\"theorem\":\"thm8_small_n\"") != std::string::npos);
    CHECK(j.find("\"source\":\"builtin\"") != std::string::npos);
    CHECK(j.find("\"n_min\":3") != std::string::npos);
    CHECK(j.find("\"n_max\":4") != std::string::npos);
    CHECK(j.find("\"instances_checked\":72") != std::string::npos);
    CHECK(j.find("\"hypothesis_hits\":9") != std::string::npos);
    CHECK(j.find("\"violation_count\":0") != std::string::npos);
    CHECK(j.find("wall_time") == std::string::npos);
    CHECK(j.find("jobs") == std::string::npos);
    const std::string s = rep.summary();
    CHECK(s.find("72 instances") != std::string::npos);
    CHECK(s.find("9 hypothesis hits") != std::string::npos);
}

TEST_CASE("probe runs clean on the exhaustive small range") {
    auto cfg = base_config("", 3, 5);
    cfg.t = 2;
    cfg.sample = 100000;
    const auto rep = conjecture_probe(cfg);
    CHECK(rep.violations.empty());
    CHECK_FALSE(rep.incomplete);
    CHECK(rep.instances_checked == 8 + 64 + 1024);
}

TEST_CASE("probe stops at its budget and says so") {
    auto cfg = base_config("", 3, 6);
    cfg.t = 2;
    cfg.sample = 50;
    const auto rep = conjecture_probe(cfg);
    CHECK(rep.incomplete);
    CHECK(rep.instances_checked == 50);
    CHECK(rep.violations.empty());
}

TEST_CASE("probe rejects t outside the open cases") {
    auto cfg = base_config("", 3, 5);
    cfg.t = 1;
    CHECK_THROWS_AS(conjecture_probe(cfg), std::invalid_argument);
    cfg.t = 4;
    CHECK_THROWS_AS(conjecture_probe(cfg), std::invalid_argument);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(verify_theorem(base_config("thm_nonexistent", 3, 5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(base_config("thm7_counterexample", 3, 6)),
                    std::invalid_argument);
    auto hoang = base_config("thm_hoang_small_t", 3, 5);
    hoang.t = 4;
    CHECK_THROWS_AS(verify_theorem(hoang), std::invalid_argument);
    auto rnd = base_config("thm1_chvatal", 3, 5);
    rnd.source = "random";
    CHECK_THROWS_AS(verify_theorem(rnd), std::invalid_argument); // seed missing
    auto badsrc = base_config("thm1_chvatal", 3, 5);
    badsrc.source = "family:not_a_family";
    CHECK_THROWS_AS(verify_theorem(badsrc), std::invalid_argument);
    auto range = base_config("thm1_chvatal", 6, 3);
    CHECK_THROWS_AS(verify_theorem(range), std::invalid_argument);
    auto big = base_config("thm1_chvatal", 3, 8); // builtin tops out at 7
    CHECK_THROWS_AS(verify_theorem(big), std::invalid_argument);
}

} // TEST_SUITE
