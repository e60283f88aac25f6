#pragma once

// Provers over the rewrite system: Naive and Filter random rollouts,
// breadth-first search with a visited set (minimum-length, deterministic
// label-lexicographic tie-break), its 3-branch randomly pruned variant,
// and a score-guided top-N depth-first prover. Plus the trace checker
// and the benchmark harness.

#include "trigprove/expr.hpp"
#include "trigprove/rng.hpp"
#include "trigprove/rules.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace trigprove {

struct SearchConfig {
    int max_depth = 12;            // BFS / rBFS level cap
    int max_steps = 40;            // rollout and DFS depth cap
    int rbfs_branches = 3;
    std::int64_t node_budget = 200000;  // expanded states per instance
    int top_n = 5;
    bool shuffle_each_step = false;     // T1 protocol for sequential provers
    bool policy_restart_mode = false;   // N greedy restarts instead of top-N DFS
};

struct ProofStep {
    Expression state;
    ActionLabel action;
};

struct ProofTrace {
    std::vector<ProofStep> steps;
    Expression terminal;  // zero on success
    double wall_time_s = 0;

    std::size_t length() const { return steps.size(); }
};

using ProveResult = std::optional<ProofTrace>;

// Scores for a move list, supplied by a policy; higher is better.
using MoveScorer =
    std::function<std::vector<double>(const Expression&, const std::vector<ValidMove>&)>;

inline std::string state_key(const Expression& e) { return print(canonicalize(e)); }

// ---------------------------------------------------------------------------
// Trace verification: structural replay plus a numeric spot check.

inline bool verify_trace(const ProofTrace& trace) {
    if (!trace.terminal.is_zero()) return false;
    Rng rng(0x5eed5eedULL);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const Expression& state = trace.steps[i].state;
        Action action;
        try {
            action = decode(trace.steps[i].action);
        } catch (const std::out_of_range&) {
            return false;
        }
        auto result = try_apply(state, action);
        if (!result) return false;
        const Expression& next =
            (i + 1 < trace.steps.size()) ? trace.steps[i + 1].state : trace.terminal;
        if (!equivalent(*result, next)) return false;
        for (int probe = 0; probe < 10; ++probe) {
            const double x = rng.uniform_real(-10.0, 10.0);
            if (std::abs(eval_numeric(state, x) - eval_numeric(*result, x)) > 1e-9) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Random rollout provers

// Uniform draw over all 112 labels; an invalid draw fails the attempt.
inline ProveResult prove_naive(const Expression& start, Rng& rng, const SearchConfig& cfg) {
    ProofTrace trace;
    Expression e = canonicalize(start);
    for (int step = 0;; ++step) {
        if (cfg.shuffle_each_step) e = shuffle_terms(e, rng).first;
        if (e.is_zero()) {
            trace.terminal = std::move(e);
            return trace;
        }
        if (step >= cfg.max_steps) return std::nullopt;
        const ActionLabel label{static_cast<int>(1 + rng.uniform(kNumLabels))};
        auto next = try_apply(e, decode(label));
        if (!next) return std::nullopt;
        trace.steps.push_back({std::move(e), label});
        e = std::move(*next);
    }
}

// Uniform draw over the valid actions only.
inline ProveResult prove_filter(const Expression& start, Rng& rng, const SearchConfig& cfg) {
    ProofTrace trace;
    Expression e = canonicalize(start);
    for (int step = 0;; ++step) {
        if (cfg.shuffle_each_step) e = shuffle_terms(e, rng).first;
        if (e.is_zero()) {
            trace.terminal = std::move(e);
            return trace;
        }
        if (step >= cfg.max_steps) return std::nullopt;
        auto moves = enumerate_moves(e);
        if (moves.empty()) return std::nullopt;
        auto& move = moves[rng.uniform(moves.size())];
        trace.steps.push_back({std::move(e), move.label});
        e = std::move(move.result);
    }
}

// ---------------------------------------------------------------------------
// Breadth-first search (optionally branch-sampled)

namespace detail {

struct BfsNode {
    Expression expr;
    std::int32_t parent;
    ActionLabel action;
    std::int32_t depth;
};

inline ProofTrace bfs_reconstruct(const std::vector<BfsNode>& nodes, std::int32_t leaf_parent,
                                  ActionLabel last_action) {
    std::vector<std::pair<std::int32_t, ActionLabel>> chain;
    chain.push_back({leaf_parent, last_action});
    for (std::int32_t at = leaf_parent; nodes[at].parent >= 0; at = nodes[at].parent)
        chain.push_back({nodes[at].parent, nodes[at].action});
    ProofTrace trace;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        trace.steps.push_back({nodes[it->first].expr, it->second});
    return trace;
}

// Level-order search; when `sampler` is set, each expanded node keeps only
// the sampled subset of its moves (ascending label order within the subset).
inline ProveResult bfs_core(const Expression& start, const SearchConfig& cfg, Rng* sampler) {
    Expression root = canonicalize(start);
    if (root.is_zero()) return ProofTrace{};
    std::vector<BfsNode> nodes;
    nodes.push_back({std::move(root), -1, ActionLabel{1}, 0});
    std::unordered_set<std::string> visited{print(nodes[0].expr)};
    std::int64_t expanded = 0;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].depth >= cfg.max_depth) continue;
        if (++expanded > cfg.node_budget) return std::nullopt;
        auto moves = enumerate_moves(nodes[head].expr);
        if (sampler && moves.size() > static_cast<std::size_t>(cfg.rbfs_branches)) {
            std::vector<std::size_t> idx(moves.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            sampler->shuffle(idx);
            idx.resize(cfg.rbfs_branches);
            std::sort(idx.begin(), idx.end());
            std::vector<ValidMove> kept;
            kept.reserve(idx.size());
            for (std::size_t i : idx) kept.push_back(std::move(moves[i]));
            moves = std::move(kept);
        }
        for (auto& move : moves) {
            if (move.result.is_zero())
                return bfs_reconstruct(nodes, static_cast<std::int32_t>(head), move.label);
            if (!visited.insert(print(move.result)).second) continue;
            nodes.push_back({std::move(move.result), static_cast<std::int32_t>(head), move.label,
                             nodes[head].depth + 1});
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline ProveResult prove_bfs(const Expression& e, const SearchConfig& cfg) {
    return detail::bfs_core(e, cfg, nullptr);
}

inline ProveResult prove_rbfs(const Expression& e, Rng& rng, const SearchConfig& cfg) {
    return detail::bfs_core(e, cfg, &rng);
}

// ---------------------------------------------------------------------------
// Score-guided prover

namespace detail {

struct PolicyDfs {
    const SearchConfig& cfg;
    const MoveScorer& scorer;
    Rng* shuffle_rng;
    std::int64_t budget;
    std::unordered_set<std::string> on_path;

    std::optional<std::vector<ProofStep>> run(Expression state, int depth) {
        if (cfg.shuffle_each_step && shuffle_rng)
            state = shuffle_terms(state, *shuffle_rng).first;
        if (state.is_zero()) return std::vector<ProofStep>{};
        if (depth >= cfg.max_steps) return std::nullopt;
        if (--budget < 0) return std::nullopt;
        auto moves = enumerate_moves(state);
        if (moves.empty()) return std::nullopt;
        const std::vector<double> scores = scorer(state, moves);
        std::vector<std::size_t> order(moves.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (scores[a] != scores[b]) return scores[a] > scores[b];
            return moves[a].label.value < moves[b].label.value;
        });
        const std::size_t width = std::min<std::size_t>(cfg.top_n, order.size());
        for (std::size_t rank = 0; rank < width; ++rank) {
            if (budget < 0) return std::nullopt;
            auto& move = moves[order[rank]];
            std::string key = state_key(move.result);
            if (!on_path.insert(key).second) continue;
            auto rest = run(move.result, depth + 1);
            on_path.erase(key);
            if (rest) {
                rest->insert(rest->begin(), ProofStep{std::move(state), move.label});
                return rest;
            }
        }
        return std::nullopt;
    }
};

}  // namespace detail

// Depth-first search expanding the top_n highest-scored moves per node.
// In restart mode: top_n independent greedy rollouts that differ in the
// root action rank.
inline ProveResult prove_policy(const Expression& start, const MoveScorer& scorer,
                                const SearchConfig& cfg, Rng* shuffle_rng = nullptr) {
    if (!cfg.policy_restart_mode) {
        detail::PolicyDfs dfs{cfg, scorer, shuffle_rng, cfg.node_budget, {}};
        dfs.on_path.insert(state_key(start));
        auto steps = dfs.run(canonicalize(start), 0);
        if (!steps) return std::nullopt;
        ProofTrace trace;
        trace.steps = std::move(*steps);
        return trace;
    }
    for (int restart = 0; restart < cfg.top_n; ++restart) {
        SearchConfig greedy = cfg;
        greedy.top_n = 1;
        greedy.policy_restart_mode = false;
        Expression root = canonicalize(start);
        if (root.is_zero()) return ProofTrace{};
        auto moves = enumerate_moves(root);
        if (moves.empty()) return std::nullopt;
        std::vector<double> scores = scorer(root, moves);
        std::vector<std::size_t> order(moves.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (scores[a] != scores[b]) return scores[a] > scores[b];
            return moves[a].label.value < moves[b].label.value;
        });
        if (static_cast<std::size_t>(restart) >= order.size()) break;
        auto& root_move = moves[order[restart]];
        detail::PolicyDfs dfs{greedy, scorer, shuffle_rng, greedy.node_budget, {}};
        dfs.on_path.insert(state_key(root));
        dfs.on_path.insert(state_key(root_move.result));
        auto rest = dfs.run(root_move.result, 1);
        if (rest) {
            ProofTrace trace;
            trace.steps.push_back({std::move(root), root_move.label});
            for (auto& s : *rest) trace.steps.push_back(std::move(s));
            return trace;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Benchmark harness

enum class Method { Naive, Filter, Bfs, Rbfs, Policy };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Naive: return "naive";
        case Method::Filter: return "filter";
        case Method::Bfs: return "bfs";
        case Method::Rbfs: return "rbfs";
        case Method::Policy: return "policy";
    }
    return "?";
}

inline bool method_is_stochastic(Method m, const SearchConfig& cfg) {
    switch (m) {
        case Method::Naive:
        case Method::Filter:
        case Method::Rbfs: return true;
        case Method::Bfs: return false;
        case Method::Policy: return cfg.shuffle_each_step;
    }
    return false;
}

struct BenchProblem {
    std::string id;
    Expression expr;
};

struct InstanceRow {
    std::string problem_id;
    Method method = Method::Bfs;
    int repeat = 0;
    std::uint64_t seed = 0;
    bool success = false;
    std::size_t length = 0;
    double wall_time_s = 0;
};

struct MethodAggregate {
    Method method = Method::Bfs;
    std::size_t n_runs = 0;
    std::size_t n_solved = 0;
    double pass_rate = 0;
    double avg_length = 0;  // over solved runs only
    double avg_time_s = 0;
};

struct MetricsReport {
    std::vector<MethodAggregate> aggregates;
    std::vector<InstanceRow> rows;
    int repeats = 1;
};

// One prover run with a derived seed; timing measured on the calling thread.
inline ProveResult run_method(Method method, const Expression& e, std::uint64_t seed,
                              const SearchConfig& cfg, const MoveScorer& scorer) {
    Rng rng(seed);
    switch (method) {
        case Method::Naive: return prove_naive(e, rng, cfg);
        case Method::Filter: return prove_filter(e, rng, cfg);
        case Method::Bfs: return prove_bfs(e, cfg);
        case Method::Rbfs: return prove_rbfs(e, rng, cfg);
        case Method::Policy: return prove_policy(e, scorer, cfg, &rng);
    }
    return std::nullopt;
}

inline MetricsReport bench(const std::vector<BenchProblem>& problems,
                           const std::vector<Method>& methods, int repeats,
                           const SearchConfig& cfg, std::uint64_t seed,
                           const MoveScorer& scorer = {}, int workers = 1) {
    MetricsReport report;
    report.repeats = repeats;
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        const Method method = methods[mi];
        const int runs = method_is_stochastic(method, cfg) ? repeats : 1;
        const std::uint64_t method_seed = derive_seed(seed, mi);
        std::vector<InstanceRow> rows(problems.size() * runs);
        auto work = [&](std::size_t pi) {
            const std::uint64_t problem_seed = derive_seed(method_seed, pi);
            for (int r = 0; r < runs; ++r) {
                InstanceRow& row = rows[pi * runs + r];
                row.problem_id = problems[pi].id;
                row.method = method;
                row.repeat = r;
                row.seed = derive_seed(problem_seed, r);
                const auto t0 = std::chrono::steady_clock::now();
                auto result = run_method(method, problems[pi].expr, row.seed, cfg, scorer);
                const auto t1 = std::chrono::steady_clock::now();
                row.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
                if (result && verify_trace(*result)) {
                    row.success = true;
                    row.length = result->length();
                }
            }
        };
        if (workers <= 1) {
            for (std::size_t pi = 0; pi < problems.size(); ++pi) work(pi);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    for (std::size_t pi = next.fetch_add(1); pi < problems.size();
                         pi = next.fetch_add(1))
                        work(pi);
                });
            }
            for (auto& th : pool) th.join();
        }
        MethodAggregate agg;
        agg.method = method;
        double time_sum = 0, length_sum = 0;
        for (const auto& row : rows) {
            ++agg.n_runs;
            time_sum += row.wall_time_s;
            if (row.success) {
                ++agg.n_solved;
                length_sum += static_cast<double>(row.length);
            }
        }
        agg.pass_rate = agg.n_runs ? static_cast<double>(agg.n_solved) / agg.n_runs : 0.0;
        agg.avg_length = agg.n_solved ? length_sum / agg.n_solved : 0.0;
        agg.avg_time_s = agg.n_runs ? time_sum / agg.n_runs : 0.0;
        report.aggregates.push_back(agg);
        for (auto& row : rows) report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace trigprove
