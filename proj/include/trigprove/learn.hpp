#pragma once

// Learning from search: pair extraction from verified traces, the
// term-shuffle augmentation, a linear softmax policy over the lookahead
// features trained by cross entropy, and its policy-gradient fine-tune
// with a moving-average scalar baseline.

#include "trigprove/features.hpp"
#include "trigprove/parse.hpp"
#include "trigprove/search.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace trigprove {

struct InvalidTrace : std::runtime_error {
    explicit InvalidTrace(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateData : std::runtime_error {
    explicit DegenerateData(const std::string& what) : std::runtime_error(what) {}
};

constexpr std::size_t kPadTerms = 8;

struct StateActionPair {
    std::string problem_id;
    std::string state_text;  // printed form padded to 8 terms
    int label = 1;           // 1..112
    std::string derivation;  // "canonical" or "shuffled:[...]"
};

// One pair per step of a verified successful trace.
inline std::vector<StateActionPair> extract_pairs(const ProofTrace& trace,
                                                  const std::string& problem_id = "") {
    if (!verify_trace(trace)) throw InvalidTrace("trace does not replay to zero");
    std::vector<StateActionPair> pairs;
    pairs.reserve(trace.length());
    for (const auto& step : trace.steps)
        pairs.push_back({problem_id, print(step.state, kPadTerms), step.action.value,
                         "canonical"});
    return pairs;
}

namespace detail {

inline std::string print_slot_order(const std::vector<const Term*>& slots) {
    std::string out;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        if (slots[s] == nullptr) {
            out += (s == 0) ? "0" : " + 0";
            continue;
        }
        bool neg = false;
        std::string mag = print_term_magnitude(*slots[s], &neg);
        if (s == 0) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        out += mag;
    }
    return out;
}

}  // namespace detail

// Shuffled copies of a pair: the state is padded with literal zero terms
// to 8 slots, all 8 slots are permuted, and the action's term index is
// remapped to the term's position among the surviving nonzero terms
// (padding slots vanish when the text is parsed back).
inline std::vector<StateActionPair> augment(const StateActionPair& pair, Rng& rng, int copies) {
    const Expression state = parse(pair.state_text);
    const Action action = decode(ActionLabel{pair.label});
    const int pair_idx = pair_index(action.j, action.k);
    std::vector<StateActionPair> out;
    out.reserve(copies);
    for (int c = 0; c < copies; ++c) {
        const std::vector<std::size_t> perm = rng.permutation(kPadTerms);
        std::vector<const Term*> slots(kPadTerms, nullptr);
        for (std::size_t old_slot = 0; old_slot < state.terms.size(); ++old_slot)
            slots[perm[old_slot]] = &state.terms[old_slot];
        const std::size_t new_slot = perm[action.i];
        int new_i = 0;
        for (std::size_t s = 0; s < new_slot; ++s)
            if (slots[s] != nullptr) ++new_i;
        std::string perm_text = "shuffled:[";
        for (std::size_t s = 0; s < perm.size(); ++s) {
            if (s) perm_text += ',';
            perm_text += std::to_string(perm[s]);
        }
        perm_text += ']';
        out.push_back({pair.problem_id, detail::print_slot_order(slots),
                       kNumPairs * new_i + pair_idx + 1, std::move(perm_text)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Linear softmax policy

struct PolicyModel {
    int schema_version = kFeatureSchemaVersion;
    std::vector<std::string> names = feature_names();
    std::vector<double> weights = std::vector<double>(kFeatureDim, 0.0);
    std::map<std::string, std::string> metadata;

    double score(const FeatureVector& f) const {
        return std::inner_product(f.begin(), f.end(), weights.begin(), 0.0);
    }
};

inline std::vector<double> score_moves(const PolicyModel& model, const Expression& state,
                                       const std::vector<ValidMove>& moves) {
    std::vector<double> scores;
    scores.reserve(moves.size());
    for (const auto& m : moves) scores.push_back(model.score(featurize_move(state, m)));
    return scores;
}

inline MoveScorer make_scorer(const PolicyModel& model) {
    return [model](const Expression& state, const std::vector<ValidMove>& moves) {
        return score_moves(model, state, moves);
    };
}

inline std::vector<double> softmax(const std::vector<double>& scores) {
    std::vector<double> p(scores.size());
    double best = -std::numeric_limits<double>::infinity();
    for (double s : scores) best = std::max(best, s);
    double z = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        p[i] = std::exp(scores[i] - best);
        z += p[i];
    }
    for (auto& v : p) v /= z;
    return p;
}

// ---------------------------------------------------------------------------
// Cross-entropy training

// A digested sample: candidate features for every valid action of the
// state, and the index of the labelled action among them.
struct TrainingExample {
    std::vector<FeatureVector> candidates;
    int label_index = 0;
};

inline TrainingExample digest_pair(const StateActionPair& pair) {
    const Expression state = parse(pair.state_text);
    const auto moves = enumerate_moves(state);
    if (moves.empty())
        throw DegenerateData("state has no valid actions: " + pair.state_text);
    TrainingExample ex;
    ex.label_index = -1;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (moves[i].label.value == pair.label) ex.label_index = static_cast<int>(i);
        ex.candidates.push_back(featurize_move(state, moves[i]));
    }
    if (ex.label_index < 0)
        throw DegenerateData("labelled action " + std::to_string(pair.label) +
                             " is not valid in state: " + pair.state_text);
    return ex;
}

inline std::vector<TrainingExample> digest_pairs(const std::vector<StateActionPair>& pairs) {
    std::vector<TrainingExample> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back(digest_pair(p));
    return out;
}

// Mean cross-entropy of the softmax-over-candidates under `weights`.
inline double softmax_loss(const std::vector<TrainingExample>& examples,
                           const std::vector<double>& weights) {
    PolicyModel probe;
    probe.weights = weights;
    double loss = 0;
    for (const auto& ex : examples) {
        std::vector<double> scores;
        scores.reserve(ex.candidates.size());
        for (const auto& f : ex.candidates) scores.push_back(probe.score(f));
        const auto p = softmax(scores);
        loss += -std::log(std::max(p[ex.label_index], 1e-300));
    }
    return examples.empty() ? 0.0 : loss / examples.size();
}

struct TrainResult {
    std::vector<double> weights;
    double final_loss = 0;
};

// Mini-batch gradient descent on the convex cross-entropy objective.
// Deterministic for a fixed seed: the epoch shuffle is the only
// randomness and accumulation order is fixed.
inline TrainResult train_softmax(const std::vector<TrainingExample>& examples, std::size_t dim,
                                 int epochs, double lr, std::uint64_t seed,
                                 std::size_t batch_size = 64) {
    if (examples.empty()) throw DegenerateData("no training examples");
    std::vector<double> w(dim, 0.0);
    Rng rng(seed);
    std::vector<std::size_t> order(examples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<double> grad(dim);
    for (int epoch = 0; epoch < epochs; ++epoch) {
        rng.shuffle(order);
        for (std::size_t start = 0; start < order.size(); start += batch_size) {
            const std::size_t end = std::min(order.size(), start + batch_size);
            std::fill(grad.begin(), grad.end(), 0.0);
            for (std::size_t oi = start; oi < end; ++oi) {
                const TrainingExample& ex = examples[order[oi]];
                std::vector<double> scores;
                scores.reserve(ex.candidates.size());
                for (const auto& f : ex.candidates)
                    scores.push_back(std::inner_product(f.begin(), f.end(), w.begin(), 0.0));
                const auto p = softmax(scores);
                for (std::size_t a = 0; a < ex.candidates.size(); ++a) {
                    const double delta =
                        p[a] - (static_cast<int>(a) == ex.label_index ? 1.0 : 0.0);
                    for (std::size_t d = 0; d < dim; ++d) grad[d] += delta * ex.candidates[a][d];
                }
            }
            const double scale = lr / static_cast<double>(end - start);
            for (std::size_t d = 0; d < dim; ++d) w[d] -= scale * grad[d];
        }
    }
    return {std::move(w), softmax_loss(examples, w)};
}

inline PolicyModel train_imitation(const std::vector<StateActionPair>& pairs, int epochs,
                                   double lr, std::uint64_t seed, std::size_t batch_size = 64) {
    auto result = train_softmax(digest_pairs(pairs), kFeatureDim, epochs, lr, seed, batch_size);
    PolicyModel model;
    model.weights = std::move(result.weights);
    model.metadata["trained_pairs"] = std::to_string(pairs.size());
    model.metadata["epochs"] = std::to_string(epochs);
    model.metadata["lr"] = std::to_string(lr);
    model.metadata["seed"] = std::to_string(seed);
    model.metadata["final_loss"] = std::to_string(result.final_loss);
    return model;
}

// ---------------------------------------------------------------------------
// Policy-gradient fine-tune

struct RLConfig {
    double gamma = 0.99;
    double step_reward = -0.1;
    double terminal_reward = 1.0;
    int episodes = 200;
    double learning_rate = 0.01;
    int rollout_max_steps = 40;
    double baseline_decay = 0.9;
};

// Discounted returns; the final step earns the terminal reward only on
// success, every other step the step penalty.
inline std::vector<double> compute_returns(std::size_t length, bool success,
                                           const RLConfig& cfg) {
    std::vector<double> returns(length, 0.0);
    double g = 0;
    for (std::size_t i = length; i-- > 0;) {
        const double r =
            (i + 1 == length && success) ? cfg.terminal_reward : cfg.step_reward;
        g = r + cfg.gamma * g;
        returns[i] = g;
    }
    return returns;
}

inline std::vector<double> compute_returns(const ProofTrace& trace, const RLConfig& cfg) {
    if (!verify_trace(trace)) throw InvalidTrace("returns of an unverifiable trace");
    return compute_returns(trace.length(), true, cfg);
}

struct FinetuneResult {
    PolicyModel model;
    std::vector<double> mean_return_curve;  // one entry per episode block
};

// REINFORCE with a moving-average scalar baseline. Episodes sample from
// the softmax over valid actions; the update direction is
// sum_t (G_t - b) * (phi(s_t, a_t) - E_pi phi).
inline FinetuneResult reinforce_finetune(const PolicyModel& start,
                                         const std::vector<Expression>& problems,
                                         const RLConfig& cfg, std::uint64_t seed) {
    if (problems.empty()) throw DegenerateData("no fine-tune problems");
    FinetuneResult out;
    out.model = start;
    std::vector<double>& w = out.model.weights;
    Rng rng(seed);
    double baseline = 0;
    bool baseline_ready = false;
    std::vector<double> episode_returns;

    struct StepRecord {
        std::vector<FeatureVector> candidates;
        std::vector<double> probs;
        std::size_t chosen;
    };

    for (int ep = 0; ep < cfg.episodes; ++ep) {
        Expression e = canonicalize(problems[rng.uniform(problems.size())]);
        std::vector<StepRecord> records;
        bool success = false;
        for (int step = 0; step < cfg.rollout_max_steps; ++step) {
            if (e.is_zero()) {
                success = true;
                break;
            }
            auto moves = enumerate_moves(e);
            if (moves.empty()) break;
            StepRecord rec;
            std::vector<double> scores(moves.size());
            for (std::size_t i = 0; i < moves.size(); ++i) {
                rec.candidates.push_back(featurize_move(e, moves[i]));
                scores[i] =
                    std::inner_product(rec.candidates[i].begin(), rec.candidates[i].end(),
                                       w.begin(), 0.0);
            }
            rec.probs = softmax(scores);
            const double u = rng.uniform_real();
            double acc = 0;
            rec.chosen = rec.probs.size() - 1;
            for (std::size_t i = 0; i < rec.probs.size(); ++i) {
                acc += rec.probs[i];
                if (u < acc) {
                    rec.chosen = i;
                    break;
                }
            }
            e = moves[rec.chosen].result;
            records.push_back(std::move(rec));
        }
        if (!records.empty() && !success && e.is_zero()) success = true;
        const auto returns = compute_returns(records.size(), success, cfg);
        const double episode_return = returns.empty() ? 0.0 : returns.front();
        if (!baseline_ready) {
            baseline = episode_return;
            baseline_ready = true;
        }
        if (cfg.learning_rate != 0.0) {
            std::vector<double> grad(w.size(), 0.0);
            for (std::size_t t = 0; t < records.size(); ++t) {
                const StepRecord& rec = records[t];
                const double adv = returns[t] - baseline;
                std::vector<double> expected(w.size(), 0.0);
                for (std::size_t a = 0; a < rec.candidates.size(); ++a)
                    for (std::size_t d = 0; d < w.size(); ++d)
                        expected[d] += rec.probs[a] * rec.candidates[a][d];
                for (std::size_t d = 0; d < w.size(); ++d)
                    grad[d] += adv * (rec.candidates[rec.chosen][d] - expected[d]);
            }
            for (std::size_t d = 0; d < w.size(); ++d) w[d] += cfg.learning_rate * grad[d];
        }
        baseline = cfg.baseline_decay * baseline + (1 - cfg.baseline_decay) * episode_return;
        episode_returns.push_back(episode_return);
    }

    const std::size_t block = std::max<std::size_t>(1, episode_returns.size() / 20);
    for (std::size_t start_i = 0; start_i < episode_returns.size(); start_i += block) {
        const std::size_t end_i = std::min(episode_returns.size(), start_i + block);
        double s = 0;
        for (std::size_t i = start_i; i < end_i; ++i) s += episode_returns[i];
        out.mean_return_curve.push_back(s / static_cast<double>(end_i - start_i));
    }
    out.model.metadata["finetune_episodes"] = std::to_string(cfg.episodes);
    out.model.metadata["finetune_lr"] = std::to_string(cfg.learning_rate);
    out.model.metadata["finetune_seed"] = std::to_string(seed);
    return out;
}

}  // namespace trigprove
