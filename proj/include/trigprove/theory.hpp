#pragma once

// Analytical side of the 3-branch pruned search: the closed-form
// probability that the i-th best of n branches wins a uniform 3-subset,
// and the recursive expected proof length it induces.

#include "trigprove/rules.hpp"
#include "trigprove/search.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigprove {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// P(branch ranked i of n is the minimum of a uniform 3-subset)
//   = C(n-i, 2) / C(n, 3),  i in 1..n, with C(m, 2) = 0 for m < 2.
inline Rational rank_probability(int n, int i) {
    if (n < 3) throw std::domain_error("rank_probability needs n >= 3");
    if (i < 1 || i > n) throw std::domain_error("rank index out of 1..n");
    const long long m = n - i;
    const long long numer = (m >= 2) ? m * (m - 1) / 2 : 0;
    const long long denom = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
    return Rational(numer, denom);
}

// Expected length of a state; infinity marks a positive probability of
// failing within the depth cap. The conditional value renormalizes the
// rank weights over the branches that do succeed.
struct ExpectedLength {
    double expected = std::numeric_limits<double>::infinity();
    double expected_given_success = std::numeric_limits<double>::infinity();

    bool success_certain() const { return std::isfinite(expected); }
};

namespace detail {

// Combine sorted branch values under a uniform 3-subset (all branches
// when fewer than 3 exist).
inline ExpectedLength combine_branches(std::vector<ExpectedLength> branches) {
    ExpectedLength out;
    if (branches.empty()) return out;
    std::stable_sort(branches.begin(), branches.end(),
                     [](const ExpectedLength& a, const ExpectedLength& b) {
                         if (a.expected != b.expected) return a.expected < b.expected;
                         return a.expected_given_success < b.expected_given_success;
                     });
    const int n = static_cast<int>(branches.size());
    if (n <= 3) {
        out.expected = branches.front().expected;
        for (const auto& b : branches)
            out.expected_given_success =
                std::min(out.expected_given_success, b.expected_given_success);
        return out;
    }
    double expected = 0, cond_num = 0, cond_den = 0;
    bool infinite = false;
    for (int i = 1; i <= n; ++i) {
        const double p = to_double(rank_probability(n, i));
        const ExpectedLength& b = branches[i - 1];
        if (p > 0 && !b.success_certain()) infinite = true;
        if (p > 0 && b.success_certain()) expected += p * b.expected;
        if (b.success_certain()) {
            cond_num += p * b.expected;
            cond_den += p;
        }
    }
    out.expected = infinite ? std::numeric_limits<double>::infinity() : expected;
    out.expected_given_success =
        cond_den > 0 ? cond_num / cond_den : std::numeric_limits<double>::infinity();
    return out;
}

struct ExpectedLengthDp {
    std::int64_t budget;
    std::map<std::string, ExpectedLength> memo;

    ExpectedLength state_value(const Expression& e, int depth_left) {
        if (e.is_zero()) return {0.0, 0.0};
        if (depth_left <= 0) return {};
        const std::string key = print(e) + "#" + std::to_string(depth_left);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (--budget < 0) throw BudgetExceeded("expected-length DP exceeded its node budget");
        std::vector<ExpectedLength> branches;
        for (auto& move : enumerate_moves(e)) {
            ExpectedLength b = state_value(move.result, depth_left - 1);
            b.expected += 1;
            b.expected_given_success += 1;
            branches.push_back(b);
        }
        ExpectedLength v = combine_branches(std::move(branches));
        memo.emplace(key, v);
        return v;
    }
};

}  // namespace detail

inline ExpectedLength expected_rbfs_length(const Expression& e, int depth_cap,
                                           std::int64_t node_budget = 200000) {
    detail::ExpectedLengthDp dp{node_budget, {}};
    return dp.state_value(canonicalize(e), depth_cap);
}

// Per-branch values L(s, a) at the root, in ascending label order.
inline std::vector<std::pair<ActionLabel, ExpectedLength>> rbfs_branch_values(
    const Expression& e, int depth_cap, std::int64_t node_budget = 200000) {
    detail::ExpectedLengthDp dp{node_budget, {}};
    std::vector<std::pair<ActionLabel, ExpectedLength>> out;
    const Expression root = canonicalize(e);
    for (auto& move : enumerate_moves(root)) {
        ExpectedLength b = dp.state_value(move.result, depth_cap - 1);
        b.expected += 1;
        b.expected_given_success += 1;
        out.emplace_back(move.label, b);
    }
    return out;
}

}  // namespace trigprove
