#pragma once

#include <optional>
#include <string>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace toughham {

// Outcome of a degree-sequence predicate. Indices are 1-based positions in
// the sorted sequence. antecedent_fired distinguishes a substantive pass
// (some antecedent held and was discharged) from a vacuous one.
struct ConditionVerdict {
    bool holds = true;
    bool antecedent_fired = false;
    std::optional<int> violating_i;
    std::optional<int> violating_j;
    std::string detail;

    std::string to_json() const;
};

// For all i < n/2: d_i <= i implies d_{n-i} >= n-i. Requires n >= 3.
ConditionVerdict chvatal_condition(const DegreeSequence& seq);

// For all i < n/2: d_i <= i implies d_{n-i+t} >= n-i. A reference d_m with
// m > n cannot be witnessed, so it falsifies the consequent. Requires n >= 3,
// t >= 0; t = 0 coincides with chvatal_condition.
ConditionVerdict hoang_condition(const DegreeSequence& seq, int t);

// For all i in [1, floor((n-1)/2)]: (d_i <= i and d_{n-i+t} < n-i) implies
// d_j + d_{n-j+t} >= n for all j in [i+1, floor((n-1)/2)]. Out-of-range
// d_{n-i+t} cannot fire the antecedent; out-of-range d_{n-j+t} falsifies its
// conjunct. Requires n >= 3, t >= 0.
ConditionVerdict strengthened_condition(const DegreeSequence& seq, int t);

// min_degree > n/(t+1) - 1 in exact rational arithmetic, strict. Requires
// n >= 3, t >= 0.
bool bauer_bound(int n, const Rational& t, int min_degree);

} // namespace toughham
