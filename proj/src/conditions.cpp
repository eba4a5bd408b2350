#include "toughham/conditions.hpp"

#include <stdexcept>

#include <json.hpp>

namespace toughham {

namespace {

void check_inputs(int n, int t) {
    if (n < 3) throw std::invalid_argument("degree-sequence conditions require n >= 3");
    if (t < 0) throw std::invalid_argument("t must be >= 0");
}

std::string dterm(const DegreeSequence& seq, int pos) {
    return "d_" + std::to_string(pos) + " = " + std::to_string(seq.d(pos));
}

} // namespace

std::string ConditionVerdict::to_json() const {
    nlohmann::ordered_json j;
    j["holds"] = holds;
    j["antecedent_fired"] = antecedent_fired;
    j["i"] = violating_i ? nlohmann::ordered_json(*violating_i) : nlohmann::ordered_json(nullptr);
    j["j"] = violating_j ? nlohmann::ordered_json(*violating_j) : nlohmann::ordered_json(nullptr);
    j["detail"] = detail;
    return j.dump();
}

ConditionVerdict chvatal_condition(const DegreeSequence& seq) {
    return hoang_condition(seq, 0);
}

ConditionVerdict hoang_condition(const DegreeSequence& seq, int t) {
    const int n = seq.n();
    check_inputs(n, t);
    ConditionVerdict v;
    for (int i = 1; 2 * i < n; ++i) {
        if (seq.d(i) > i) continue;
        v.antecedent_fired = true;
        const int pos = n - i + t;
        if (pos > n) {
            v.holds = false;
            v.violating_i = i;
            v.detail = dterm(seq, i) + " <= " + std::to_string(i) + " but position " +
                       std::to_string(pos) + " exceeds n = " + std::to_string(n);
            return v;
        }
        if (seq.d(pos) < n - i) {
            v.holds = false;
            v.violating_i = i;
            v.detail = dterm(seq, i) + " <= " + std::to_string(i) + " but " + dterm(seq, pos) +
                       " < " + std::to_string(n - i);
            return v;
        }
    }
    return v;
}

ConditionVerdict strengthened_condition(const DegreeSequence& seq, int t) {
    const int n = seq.n();
    check_inputs(n, t);
    const int half = (n - 1) / 2;
    ConditionVerdict v;
    for (int i = 1; i <= half; ++i) {
        const int pos_i = n - i + t;
        if (seq.d(i) > i || pos_i > n || seq.d(pos_i) >= n - i) continue;
        v.antecedent_fired = true;
        for (int j = i + 1; j <= half; ++j) {
            const int pos_j = n - j + t;
            if (pos_j <= n && seq.d(j) + seq.d(pos_j) >= n) continue;
            v.holds = false;
            v.violating_i = i;
            v.violating_j = j;
            const std::string antecedent = "antecedent at i = " + std::to_string(i) + " (" +
                                           dterm(seq, i) + " <= " + std::to_string(i) + ", " +
                                           dterm(seq, pos_i) + " < " + std::to_string(n - i) + ")";
            if (pos_j > n)
                v.detail = antecedent + "; position " + std::to_string(pos_j) +
                           " exceeds n = " + std::to_string(n);
            else
                v.detail = antecedent + "; " + dterm(seq, j) + " + " + dterm(seq, pos_j) + " = " +
                           std::to_string(seq.d(j) + seq.d(pos_j)) + " < " + std::to_string(n);
            return v;
        }
    }
    return v;
}

bool bauer_bound(int n, const Rational& t, int min_degree) {
    if (n < 3) throw std::invalid_argument("bauer bound requires n >= 3");
    if (t < Rational(0)) throw std::invalid_argument("t must be >= 0");
    // delta > n/(t+1) - 1, rearranged to avoid mixing integer and rational.
    return Rational(min_degree + 1) > Rational(n) / (t + Rational(1));
}

} // namespace toughham
