// Replays the worked proofs step by step: each step names a rule family
// and the targeted factor(s); the uniquely matching valid action must
// reproduce the printed successor state up to term order.

#include "trigprove/parse.hpp"
#include "trigprove/rules.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace trigprove;

namespace {

struct FactorBase {
    TrigKind kind;
    Angle angle;
};

FactorBase parse_factor_base(const char* text) {
    const Expression e = parse(text);
    REQUIRE(e.n_terms() == 1);
    REQUIRE(e.terms[0].factors.size() == 1);
    const Factor& f = e.terms[0].factors[0];
    return {f.kind, f.angle};
}

bool base_matches(const Factor& f, const FactorBase& b) {
    return f.kind == b.kind && f.angle == b.angle;
}

// All valid actions whose rule family and targeted factor bases match.
std::vector<ValidMove> matching_moves(const Expression& state, const fixtures::WorkedStep& step) {
    std::vector<ValidMove> out;
    const FactorBase a = parse_factor_base(step.target_a);
    const bool is_pair = step.family == 'P';
    FactorBase b = a;
    if (is_pair) b = parse_factor_base(step.target_b);
    for (auto& move : enumerate_moves(state)) {
        const Term& term = state.terms[move.action.i];
        if (is_pair) {
            if (move.action.k < 0) continue;
            const Factor& fj = term.factors[move.action.j];
            const Factor& fk = term.factors[move.action.k];
            if ((base_matches(fj, a) && base_matches(fk, b)) ||
                (base_matches(fj, b) && base_matches(fk, a)))
                out.push_back(std::move(move));
        } else {
            if (move.action.k != -1) continue;
            if (base_matches(term.factors[move.action.j], a)) out.push_back(std::move(move));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("worked proofs replay to their printed successors") {
    for (const auto& proof : fixtures::worked_proofs()) {
        DYNAMIC_SECTION(proof.name) {
            REQUIRE(proof.states.size() == proof.steps.size() + 1);
            Expression state = canonicalize(parse(proof.states.front()));
            for (std::size_t i = 0; i < proof.steps.size(); ++i) {
                const Expression expected = canonicalize(parse(proof.states[i + 1]));
                const auto candidates = matching_moves(state, proof.steps[i]);
                REQUIRE(!candidates.empty());
                bool reproduced = false;
                for (const auto& move : candidates) {
                    if (move.result == expected) {
                        reproduced = true;
                        break;
                    }
                }
                if (!reproduced) {
                    INFO("step " << i << " of " << proof.name);
                    INFO("state:    " << print(state));
                    INFO("expected: " << print(expected));
                    for (const auto& move : candidates)
                        INFO("candidate " << move.action.str() << " -> " << print(move.result));
                    FAIL("no matching action reproduces the printed successor");
                }
                state = expected;
            }
            REQUIRE(state.is_zero());
        }
    }
}

TEST_CASE("worked proof states are numerically zero") {
    Rng rng(31);
    for (const auto& proof : fixtures::worked_proofs()) {
        for (const char* text : proof.states) {
            const Expression e = parse(text);
            for (int i = 0; i < 10; ++i)
                REQUIRE(std::abs(eval_numeric(e, rng.uniform_real(-5, 5))) < 1e-9);
        }
    }
}
