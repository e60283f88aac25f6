#pragma once

// The rewrite system: product-to-sum rules on a factor pair and
// angle-addition rules on a single factor, addressed by actions
// (i, j, k) over the i-th term's sorted factor slots. Actions encode
// to labels 1..112: label = 14*i + pair_index(j, k) + 1.

#include "trigprove/expr.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigprove {

struct InvalidAction : std::runtime_error {
    explicit InvalidAction(const std::string& what) : std::runtime_error(what) {}
};

enum class RuleKind : std::uint8_t { Pcc, Pcs, Psc, Pss, AcPlus, AcMinus, AsPlus, AsMinus };

inline const char* rule_name(RuleKind k) {
    switch (k) {
        case RuleKind::Pcc: return "Pcc";
        case RuleKind::Pcs: return "Pcs";
        case RuleKind::Psc: return "Psc";
        case RuleKind::Pss: return "Pss";
        case RuleKind::AcPlus: return "Ac+";
        case RuleKind::AcMinus: return "Ac-";
        case RuleKind::AsPlus: return "As+";
        case RuleKind::AsMinus: return "As-";
    }
    return "?";
}

constexpr int kMaxTerms = 8;
constexpr int kMaxFactorSlots = 4;
constexpr int kNumPairs = 14;
constexpr int kNumLabels = kMaxTerms * kNumPairs;  // 112

// (j, k) in the fixed listing order; k = -1 selects the single-factor rule.
constexpr std::array<std::pair<int, int>, kNumPairs> kActionPairs = {{
    {0, -1}, {1, -1}, {2, -1}, {3, -1},
    {0, 0}, {1, 0}, {2, 0}, {3, 0},
    {1, 1}, {2, 1}, {3, 1},
    {2, 2}, {3, 2}, {3, 3},
}};

struct Action {
    int i = 0;  // term index 0..7
    int j = 0;  // factor index 0..3
    int k = -1; // factor index, or -1 for the angle-addition rule

    bool operator==(const Action& o) const { return i == o.i && j == o.j && k == o.k; }

    std::string str() const {
        return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    }
};

struct ActionLabel {
    int value = 1;  // 1..112
    bool operator==(const ActionLabel& o) const { return value == o.value; }
};

inline int pair_index(int j, int k) {
    for (int p = 0; p < kNumPairs; ++p)
        if (kActionPairs[p].first == j && kActionPairs[p].second == k) return p;
    return -1;
}

inline ActionLabel encode(const Action& a) {
    const int p = (a.i >= 0 && a.i < kMaxTerms) ? pair_index(a.j, a.k) : -1;
    if (p < 0) throw std::out_of_range("action out of range: " + a.str());
    return ActionLabel{kNumPairs * a.i + p + 1};
}

inline Action decode(ActionLabel label) {
    if (label.value < 1 || label.value > kNumLabels)
        throw std::out_of_range("action label out of range: " + std::to_string(label.value));
    const int z = label.value - 1;
    const auto [j, k] = kActionPairs[z % kNumPairs];
    return Action{z / kNumPairs, j, k};
}

// ---------------------------------------------------------------------------
// Low-level rewriters. These are index-unconstrained (the generator uses
// them on intermediate states outside the 8-term/4-slot action space);
// the action layer below adds the range and result checks.

// Product-to-sum on factor slots j and k of one term (j == k needs
// exponent >= 2). One exponent unit is consumed from each target.
inline std::vector<Term> product_to_sum(const Term& t, std::size_t j, std::size_t k) {
    const Factor& fj = t.factors[j];
    const Factor& fk = t.factors[k];
    const Angle alpha = fj.angle, beta = fk.angle;

    TermBuilder residual(t.coef);
    for (std::size_t s = 0; s < t.factors.size(); ++s) {
        const Factor& f = t.factors[s];
        std::uint32_t drop = (s == j ? 1u : 0u) + (s == k ? 1u : 0u);
        if (f.exponent > drop) residual.multiply_power(f.kind, f.angle, f.exponent - drop);
    }
    const Term base = std::move(residual).build();

    struct Piece { TrigKind kind; Angle angle; int sign; };
    std::array<Piece, 2> pieces;
    const bool js = fj.kind == TrigKind::Sin, ks = fk.kind == TrigKind::Sin;
    if (js && ks) {        // sin a sin b = cos(a-b)/2 - cos(a+b)/2
        pieces = {{{TrigKind::Cos, alpha - beta, +1}, {TrigKind::Cos, alpha + beta, -1}}};
    } else if (js && !ks) {  // sin a cos b = sin(a+b)/2 + sin(a-b)/2
        pieces = {{{TrigKind::Sin, alpha + beta, +1}, {TrigKind::Sin, alpha - beta, +1}}};
    } else if (!js && ks) {  // cos a sin b = sin(a+b)/2 - sin(a-b)/2
        pieces = {{{TrigKind::Sin, alpha + beta, +1}, {TrigKind::Sin, alpha - beta, -1}}};
    } else {                 // cos a cos b = cos(a-b)/2 + cos(a+b)/2
        pieces = {{{TrigKind::Cos, alpha - beta, +1}, {TrigKind::Cos, alpha + beta, +1}}};
    }

    std::vector<Term> out;
    for (const auto& piece : pieces) {
        TermBuilder b(base.coef * Rational(piece.sign, 2));
        for (const auto& f : base.factors) b.multiply_power(f.kind, f.angle, f.exponent);
        b.multiply_power(piece.kind, piece.angle, 1);
        Term produced = std::move(b).build();
        if (!produced.coef.is_zero()) out.push_back(std::move(produced));
    }
    return out;
}

// Angle addition on one exponent unit of factor slot j, with the slot's
// angle written as alpha + beta:
//   sin(a+b) = sin a cos b + cos a sin b
//   cos(a+b) = cos a cos b - sin a sin b
// Constant parts fold exactly; a part that folds to zero drops its term.
inline std::vector<Term> angle_split(const Term& t, std::size_t j, const Angle& alpha,
                                     const Angle& beta) {
    const Factor& fj = t.factors[j];
    TermBuilder residual(t.coef);
    for (std::size_t s = 0; s < t.factors.size(); ++s) {
        const Factor& f = t.factors[s];
        std::uint32_t drop = (s == j) ? 1u : 0u;
        if (f.exponent > drop) residual.multiply_power(f.kind, f.angle, f.exponent - drop);
    }
    const Term base = std::move(residual).build();

    struct Piece { TrigKind first, second; int sign; };
    std::array<Piece, 2> pieces;
    if (fj.kind == TrigKind::Sin) {
        pieces = {{{TrigKind::Sin, TrigKind::Cos, +1}, {TrigKind::Cos, TrigKind::Sin, +1}}};
    } else {
        pieces = {{{TrigKind::Cos, TrigKind::Cos, +1}, {TrigKind::Sin, TrigKind::Sin, -1}}};
    }

    std::vector<Term> out;
    for (const auto& piece : pieces) {
        TermBuilder b(piece.sign < 0 ? -base.coef : base.coef);
        for (const auto& f : base.factors) b.multiply_power(f.kind, f.angle, f.exponent);
        b.multiply_power(piece.first, alpha, 1);
        b.multiply_power(piece.second, beta, 1);
        Term produced = std::move(b).build();
        if (!produced.coef.is_zero()) out.push_back(std::move(produced));
    }
    return out;
}

// Replace term `index` by `replacement` and canonicalize.
inline Expression splice_term(const Expression& e, std::size_t index,
                              std::vector<Term> replacement) {
    Expression raw;
    raw.terms.reserve(e.terms.size() - 1 + replacement.size());
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (i == index) {
            for (auto& t : replacement) raw.terms.push_back(std::move(t));
        } else {
            raw.terms.push_back(e.terms[i]);
        }
    }
    return canonicalize(raw);
}

// ---------------------------------------------------------------------------
// Action layer

namespace detail {

// Structural preconditions only (indices exist, self-pair exponent,
// nonzero phase for the single-factor rule).
inline bool structurally_valid(const Expression& e, const Action& a) {
    if (a.i < 0 || a.i >= kMaxTerms || static_cast<std::size_t>(a.i) >= e.terms.size())
        return false;
    if (pair_index(a.j, a.k) < 0) return false;
    const Term& t = e.terms[a.i];
    const auto slots = static_cast<int>(t.factors.size());
    if (a.j >= std::min(slots, kMaxFactorSlots)) return false;
    if (a.k == -1) return t.factors[a.j].angle.phase != 0;
    if (a.k == a.j) return t.factors[a.j].exponent >= 2;
    return a.k < std::min(slots, kMaxFactorSlots);
}

// Rewrite without the result checks; assumes structurally_valid.
inline Expression rewrite(const Expression& e, const Action& a) {
    const Term& t = e.terms[a.i];
    std::vector<Term> replacement;
    if (a.k == -1) {
        const Angle alpha{t.factors[a.j].angle.x_coef, Rational(0)};
        const Angle beta{0, t.factors[a.j].angle.phase};
        replacement = angle_split(t, a.j, alpha, beta);
    } else {
        replacement = product_to_sum(t, a.j, a.k);
    }
    return splice_term(e, a.i, std::move(replacement));
}

}  // namespace detail

// Rewritten expression if the action is valid, nullopt otherwise.
// Validity includes the result constraints: at most 8 terms and a
// result different from the (canonicalized) input, which rules out
// no-op rewrites that would let searches loop.
inline std::optional<Expression> try_apply(const Expression& e, const Action& a) {
    if (!detail::structurally_valid(e, a)) return std::nullopt;
    Expression result;
    try {
        result = detail::rewrite(e, a);
    } catch (const UnfoldableConstant&) {
        return std::nullopt;
    }
    if (result.n_terms() > static_cast<std::size_t>(kMaxTerms)) return std::nullopt;
    if (result == canonicalize(e)) return std::nullopt;
    return result;
}

inline bool is_valid(const Expression& e, const Action& a) { return try_apply(e, a).has_value(); }

inline Expression apply(const Expression& e, const Action& a) {
    auto r = try_apply(e, a);
    if (!r) throw InvalidAction("invalid action " + a.str());
    return std::move(*r);
}

inline Expression apply(const Expression& e, ActionLabel label) { return apply(e, decode(label)); }

// The rule an action dispatches to. Negative phases reuse the plus
// variants (sin(-b) = -sin b), so only four P kinds and the two plus
// A kinds are ever produced.
inline RuleKind rule_of(const Expression& e, const Action& a) {
    if (!detail::structurally_valid(e, a))
        throw InvalidAction("rule_of on invalid action " + a.str());
    const Term& t = e.terms[a.i];
    if (a.k == -1)
        return t.factors[a.j].kind == TrigKind::Sin ? RuleKind::AsPlus : RuleKind::AcPlus;
    const bool js = t.factors[a.j].kind == TrigKind::Sin;
    const bool ks = t.factors[a.k].kind == TrigKind::Sin;
    if (js && ks) return RuleKind::Pss;
    if (js) return RuleKind::Psc;
    if (ks) return RuleKind::Pcs;
    return RuleKind::Pcc;
}

struct ValidMove {
    Action action;
    ActionLabel label;
    Expression result;
};

// All valid actions with their rewritten results, in ascending label order.
inline std::vector<ValidMove> enumerate_moves(const Expression& e) {
    std::vector<ValidMove> moves;
    const Expression canon = canonicalize(e);
    const int n_terms = static_cast<int>(std::min<std::size_t>(e.terms.size(), kMaxTerms));
    for (int i = 0; i < n_terms; ++i) {
        for (int p = 0; p < kNumPairs; ++p) {
            const Action a{i, kActionPairs[p].first, kActionPairs[p].second};
            if (!detail::structurally_valid(e, a)) continue;
            Expression result;
            try {
                result = detail::rewrite(e, a);
            } catch (const UnfoldableConstant&) {
                continue;
            }
            if (result.n_terms() > static_cast<std::size_t>(kMaxTerms)) continue;
            if (result == canon) continue;
            moves.push_back(ValidMove{a, ActionLabel{kNumPairs * i + p + 1}, std::move(result)});
        }
    }
    return moves;
}

inline std::vector<Action> enumerate_valid(const Expression& e) {
    std::vector<Action> actions;
    for (auto& m : enumerate_moves(e)) actions.push_back(m.action);
    return actions;
}

}  // namespace trigprove
