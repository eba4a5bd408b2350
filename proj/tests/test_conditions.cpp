#include <doctest.h>

#include "oracles.hpp"
#include "toughham/conditions.hpp"
#include "toughham/families.hpp"
#include "toughham/graph.hpp"

using namespace toughham;

namespace {

DegreeSequence seq_of(const Graph& g) { return degree_sequence(g); }

DegreeSequence raw_seq(std::vector<int> degrees) {
    DegreeSequence s;
    s.degrees = std::move(degrees);
    s.labeling.resize(s.degrees.size());
    return s;
}

} // namespace

TEST_SUITE("conditions") {

TEST_CASE("chvatal on fixtures") {
    const auto k4 = chvatal_condition(seq_of(complete(4)));
    CHECK(k4.holds);
    CHECK_FALSE(k4.antecedent_fired);
    CHECK_FALSE(k4.violating_i.has_value());

    const auto c5 = chvatal_condition(seq_of(cycle(5)));
    CHECK_FALSE(c5.holds);
    CHECK(c5.antecedent_fired);
    REQUIRE(c5.violating_i.has_value());
    CHECK(*c5.violating_i == 2);
    CHECK(c5.detail == "d_2 = 2 <= 2 but d_3 = 2 < 3");

    // C_4: only i = 1 is in range and d_1 = 2 > 1
    const auto c4 = chvatal_condition(seq_of(cycle(4)));
    CHECK(c4.holds);
    CHECK_FALSE(c4.antecedent_fired);

    const auto p4 = chvatal_condition(seq_of(path(4)));
    CHECK_FALSE(p4.holds);
    CHECK(*p4.violating_i == 1);
}

TEST_CASE("chvatal is hoang at t = 0, exhaustive n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            const auto seq = seq_of(oracle::mask_graph(n, mask));
            const auto a = chvatal_condition(seq);
            const auto b = hoang_condition(seq, 0);
            CHECK(a.holds == b.holds);
            CHECK(a.antecedent_fired == b.antecedent_fired);
            CHECK(a.violating_i == b.violating_i);
        }
    }
}

TEST_CASE("hoang on the gap construction") {
    const auto seq = seq_of(counterexample_graph(7).graph);
    REQUIRE(seq.degrees == std::vector<int>{2, 2, 2, 3, 3, 4, 4});
    const auto v = hoang_condition(seq, 1);
    CHECK_FALSE(v.holds);
    REQUIRE(v.violating_i.has_value());
    CHECK(*v.violating_i == 2);
    CHECK(v.detail == "d_2 = 2 <= 2 but d_6 = 4 < 5");
    // at t = 0 the sequence fails even earlier, at the same index
    CHECK_FALSE(hoang_condition(seq, 0).holds);
}

TEST_CASE("hoang bumps the witness index by t") {
    // [2, 2, 3, 3, 5, 5, 6, 6]: i = 2 fires; d_6 = 5 < 6 sinks t = 0 while
    // t = 1 reads d_7 = 6 and passes
    const auto seq = raw_seq({2, 2, 3, 3, 5, 5, 6, 6});
    CHECK_FALSE(hoang_condition(seq, 0).holds);
    const auto v1 = hoang_condition(seq, 1);
    CHECK(v1.holds);
    CHECK(v1.antecedent_fired);
}

TEST_CASE("positions past n falsify the consequent") {
    const auto v = hoang_condition(raw_seq({1, 1, 2}), 5);
    CHECK_FALSE(v.holds);
    REQUIRE(v.violating_i.has_value());
    CHECK(*v.violating_i == 1);
    CHECK(v.detail == "d_1 = 1 <= 1 but position 7 exceeds n = 3");
}

TEST_CASE("strengthened on fixtures") {
    // every degree of K_10 minus a matching is 8, so no antecedent can fire
    const auto k10m = strengthened_condition(seq_of(complete_minus_perfect_matching(10)), 4);
    CHECK(k10m.holds);
    CHECK_FALSE(k10m.antecedent_fired);

    const auto v = strengthened_condition(seq_of(counterexample_graph(7).graph), 1);
    CHECK_FALSE(v.holds);
    REQUIRE(v.violating_i.has_value());
    REQUIRE(v.violating_j.has_value());
    CHECK(*v.violating_i == 2);
    CHECK(*v.violating_j == 3);
    CHECK(v.detail ==
          "antecedent at i = 2 (d_2 = 2 <= 2, d_6 = 4 < 5); d_3 = 2 + d_5 = 3 = 5 < 7");
}

TEST_CASE("strengthened antecedent with no later j holds") {
    // n = 7, t = 1, half = 3: i = 3 fires (d_3 = 3 <= 3, d_5 = 3 < 4) but the
    // j-range [4, 3] is empty, so nothing can fail
    const auto v = strengthened_condition(raw_seq({1, 2, 3, 3, 3, 5, 6}), 1);
    CHECK(v.holds);
    CHECK(v.antecedent_fired);
    CHECK_FALSE(v.violating_i.has_value());
}

TEST_CASE("hoang implies strengthened, exhaustive n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            const auto seq = seq_of(oracle::mask_graph(n, mask));
            for (int t = 0; t <= 3; ++t)
                if (hoang_condition(seq, t).holds)
                    CHECK(strengthened_condition(seq, t).holds);
        }
    }
}

TEST_CASE("verdict json") {
    const auto ok = chvatal_condition(seq_of(complete(4)));
    CHECK(ok.to_json() ==
          R"({"holds":true,"antecedent_fired":false,"i":null,"j":null,"detail":""})");
    const auto bad = chvatal_condition(seq_of(cycle(5)));
    CHECK(bad.to_json() ==
          R"({"holds":false,"antecedent_fired":true,"i":2,"j":null,"detail":"d_2 = 2 <= 2 but d_3 = 2 < 3"})");
}

TEST_CASE("bauer bound") {
    CHECK(bauer_bound(10, Rational(4), 8));       // 9 > 10/5 = 2
    CHECK_FALSE(bauer_bound(6, Rational(1), 2));  // 3 > 6/2 = 3 is false: strict
    CHECK(bauer_bound(6, Rational(1), 3));
    CHECK_FALSE(bauer_bound(9, Rational(1, 2), 5)); // 6 > 9/(3/2) = 6, strict again
    CHECK(bauer_bound(9, Rational(1, 2), 6));
    CHECK_THROWS_AS(bauer_bound(2, Rational(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(bauer_bound(6, Rational(-1), 2), std::invalid_argument);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(chvatal_condition(raw_seq({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(hoang_condition(raw_seq({1, 1, 2}), -1), std::invalid_argument);
    CHECK_THROWS_AS(strengthened_condition(raw_seq({1, 1, 2}), -1), std::invalid_argument);
}

} // TEST_SUITE
