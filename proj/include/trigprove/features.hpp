#pragma once

// One-step-lookahead structural features for scoring a (state, action)
// pair. The schema is versioned: serialized models carry the version and
// the feature names, and loading rejects a mismatch.

#include "trigprove/rules.hpp"

#include <string>
#include <vector>

namespace trigprove {

using FeatureVector = std::vector<double>;

constexpr int kFeatureSchemaVersion = 1;
constexpr int kFeatureDim = 15;

inline const std::vector<std::string>& feature_names() {
    static const std::vector<std::string> names = {
        "bias",
        "rule_pcc", "rule_pcs", "rule_psc", "rule_pss",
        "rule_ac_plus", "rule_ac_minus", "rule_as_plus", "rule_as_minus",
        "term_count_delta",
        "cancelled_terms",
        "result_not_larger",
        "result_max_degree",
        "action_term_degree",
        "result_is_zero",
    };
    return names;
}

// Features given the precomputed rewrite result.
inline FeatureVector featurize_move(const Expression& state, const ValidMove& move) {
    FeatureVector f(kFeatureDim, 0.0);
    f[0] = 1.0;
    f[1 + static_cast<int>(rule_of(state, move.action))] = 1.0;
    const auto state_n = static_cast<double>(state.n_terms());
    const auto result_n = static_cast<double>(move.result.n_terms());
    f[9] = result_n - state_n;
    int cancelled = 0;
    for (const auto& t : state.terms) {
        bool survives = false;
        for (const auto& rt : move.result.terms) {
            if (rt == t) {
                survives = true;
                break;
            }
        }
        if (!survives) ++cancelled;
    }
    f[10] = cancelled;
    f[11] = result_n <= state_n ? 1.0 : 0.0;
    f[12] = move.result.max_degree();
    f[13] = state.terms[move.action.i].degree();
    f[14] = move.result.is_zero() ? 1.0 : 0.0;
    return f;
}

inline FeatureVector featurize(const Expression& state, const Action& action) {
    auto result = try_apply(state, action);
    if (!result) throw InvalidAction("featurize on invalid action " + action.str());
    return featurize_move(state, ValidMove{action, encode(action), std::move(*result)});
}

}  // namespace trigprove
