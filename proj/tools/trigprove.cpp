// Command-line driver: identity generation, proving, dataset extraction,
// imitation training, policy-gradient fine-tuning, theory verification
// and benchmarking, wired into reproducible file-to-file runs.
//
// Exit codes: 0 success, 1 usage, 2 I/O, 3 verification failure.

#include "trigprove/gen.hpp"
#include "trigprove/io.hpp"
#include "trigprove/learn.hpp"
#include "trigprove/parse.hpp"
#include "trigprove/rules.hpp"
#include "trigprove/search.hpp"
#include "trigprove/theory.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace trigprove;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerification = 3;

struct SearchFlags {
    SearchConfig cfg;
    int workers = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-depth", cfg.max_depth, "BFS/rBFS depth cap");
        cmd->add_option("--max-steps", cfg.max_steps, "rollout/DFS step cap");
        cmd->add_option("--rbfs-branches", cfg.rbfs_branches, "sampled branches per node");
        cmd->add_option("--node-budget", cfg.node_budget, "expanded-state budget per instance");
        cmd->add_option("--top-n", cfg.top_n, "policy branching width")
            ->check(CLI::Range(1, 112));
        cmd->add_flag("--shuffle-each-step", cfg.shuffle_each_step,
                      "shuffle term order before every decision (T1 protocol)");
        cmd->add_flag("--policy-restarts", cfg.policy_restart_mode,
                      "top-N greedy restarts instead of per-node top-N search");
        cmd->add_option("--workers", workers, "instance-level worker threads")
            ->check(CLI::PositiveNumber);
    }

    trigprove::Json to_json() const {
        return {{"max_depth", cfg.max_depth},
                {"max_steps", cfg.max_steps},
                {"rbfs_branches", cfg.rbfs_branches},
                {"node_budget", cfg.node_budget},
                {"top_n", cfg.top_n},
                {"shuffle_each_step", cfg.shuffle_each_step},
                {"policy_restarts", cfg.policy_restart_mode},
                {"workers", workers}};
    }
};

Method parse_method(const std::string& name) {
    if (name == "naive") return Method::Naive;
    if (name == "filter") return Method::Filter;
    if (name == "bfs") return Method::Bfs;
    if (name == "rbfs") return Method::Rbfs;
    if (name == "policy") return Method::Policy;
    throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

// "a,b" with b a phase like 0, pi/6, -pi/4, 2*pi/3.
std::pair<std::int64_t, Rational> parse_coef_map(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--coef-map", "expected \"a,b\"");
    std::int64_t a = 0;
    try {
        a = std::stoll(text.substr(0, comma));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--coef-map", "bad coefficient");
    }
    std::string phase_text = text.substr(comma + 1);
    if (phase_text.empty()) throw CLI::ValidationError("--coef-map", "missing phase");
    Rational b(0);
    if (phase_text != "0") {
        // Reuse the expression parser: the phase of sin(x + B).
        try {
            Expression probe = parse("sin(x + " + phase_text + ")");
            if (probe.terms.size() != 1 || probe.terms[0].factors.size() != 1)
                throw std::runtime_error("not a phase");
            b = probe.terms[0].factors[0].angle.phase;
        } catch (const std::exception&) {
            throw CLI::ValidationError("--coef-map", "bad phase '" + phase_text + "'");
        }
    }
    if (a < 1) throw CLI::ValidationError("--coef-map", "coefficient must be >= 1");
    return {a, b};
}

// T2: per-instance x <- a*x + b. Instances whose phases leave the
// foldable alphabet are skipped and counted.
struct T2Result {
    std::vector<BenchProblem> problems;
    std::size_t skipped = 0;
};

T2Result apply_t2(const std::vector<BenchProblem>& in,
                  const std::optional<std::pair<std::int64_t, Rational>>& fixed,
                  std::uint64_t seed, const GeneratorConfig& gen_cfg) {
    T2Result out;
    for (std::size_t i = 0; i < in.size(); ++i) {
        std::int64_t a;
        Rational b;
        if (fixed) {
            a = fixed->first;
            b = fixed->second;
        } else {
            Rng rng(derive_seed(seed ^ 0x7472616e73666fULL, i));
            a = rng.uniform_int(1, 360);
            b = rng.pick(gen_cfg.b_choices);
        }
        auto mapped = substitute_linear(in[i].expr, a, b);
        if (!mapped || mapped->is_zero()) {
            ++out.skipped;
            continue;
        }
        out.problems.push_back({in[i].id, std::move(*mapped)});
    }
    return out;
}

std::vector<BenchProblem> load_problems(const std::string& path) {
    std::vector<std::string> errors;
    auto corpus = read_corpus(path, &errors);
    for (const auto& e : errors) std::cerr << "warning: " << e << "\n";
    std::vector<BenchProblem> problems;
    problems.reserve(corpus.size());
    for (auto& entry : corpus) problems.push_back({entry.id, std::move(entry.expr)});
    return problems;
}

// ---------------------------------------------------------------------------

int cmd_gen(std::size_t count, std::uint64_t seed, const std::string& out_path,
            const GeneratorConfig& cfg) {
    auto records = generate_corpus(count, seed, cfg);
    Json config{{"count", count},
                {"max_terms", cfg.max_terms},
                {"max_degree", cfg.max_degree}};
    write_corpus(out_path, make_header("gen", seed, config), records);
    std::cout << "wrote " << records.size() << " identities to " << out_path << "\n";
    return kExitOk;
}

int cmd_prove(const std::string& method_name_str, const std::string& input,
              const std::string& out_path, const std::string& model_path, int repeats,
              std::uint64_t seed, const SearchFlags& flags,
              const std::optional<std::pair<std::int64_t, Rational>>& coef_map, bool t2) {
    const Method method = parse_method(method_name_str);
    MoveScorer scorer;
    if (method == Method::Policy) {
        if (model_path.empty())
            throw CLI::RequiredError("--model is required for --method policy");
        scorer = make_scorer(load_model(model_path));
    }
    auto problems = load_problems(input);
    std::size_t t2_skipped = 0;
    if (coef_map || t2) {
        auto t2r = apply_t2(problems, coef_map, seed, GeneratorConfig{});
        problems = std::move(t2r.problems);
        t2_skipped = t2r.skipped;
    }
    const int runs = method_is_stochastic(method, flags.cfg) ? repeats : 1;

    Json config = flags.to_json();
    config["method"] = method_name_str;
    config["input"] = input;
    config["repeats"] = repeats;
    config["t2_skipped"] = t2_skipped;
    if (!model_path.empty()) config["model"] = model_path;
    JsonlWriter writer(out_path);
    writer.write(make_header("prove", seed, config));

    struct Outcome {
        ProveResult result;
        std::uint64_t seed = 0;
        double time_s = 0;
    };
    std::vector<Outcome> outcomes(problems.size() * runs);
    auto work = [&](std::size_t pi) {
        const std::uint64_t problem_seed = derive_seed(seed, pi);
        for (int r = 0; r < runs; ++r) {
            Outcome& o = outcomes[pi * runs + r];
            o.seed = derive_seed(problem_seed, r);
            const auto t0 = std::chrono::steady_clock::now();
            o.result = run_method(method, problems[pi].expr, o.seed, flags.cfg, scorer);
            const auto t1 = std::chrono::steady_clock::now();
            o.time_s = std::chrono::duration<double>(t1 - t0).count();
            if (o.result && !verify_trace(*o.result)) o.result.reset();  // never emit unchecked
        }
    };
    if (flags.workers <= 1) {
        for (std::size_t pi = 0; pi < problems.size(); ++pi) work(pi);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < flags.workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t pi = next.fetch_add(1); pi < problems.size();
                     pi = next.fetch_add(1))
                    work(pi);
            });
        for (auto& th : pool) th.join();
    }
    std::size_t solved = 0;
    for (std::size_t pi = 0; pi < problems.size(); ++pi) {
        for (int r = 0; r < runs; ++r) {
            const Outcome& o = outcomes[pi * runs + r];
            writer.write(trace_record(problems[pi].id, method_name_str, o.seed, o.result,
                                      o.time_s));
            if (o.result) ++solved;
        }
    }
    std::cout << "proved " << solved << "/" << problems.size() * runs << " runs ("
              << t2_skipped << " skipped) -> " << out_path << "\n";
    return kExitOk;
}

int cmd_dataset(const std::string& proofs_path, const std::string& out_path, int augment_copies,
                std::uint64_t seed) {
    auto proofs = read_proofs(proofs_path);
    std::vector<StateActionPair> pairs;
    std::size_t traces = 0;
    for (const auto& entry : proofs) {
        if (!entry.success) continue;
        ++traces;
        auto base = extract_pairs(entry.trace, entry.problem_id);
        for (std::size_t i = 0; i < base.size(); ++i) {
            Rng rng(derive_seed(seed, pairs.size()));
            auto shuffled = augment(base[i], rng, augment_copies);
            pairs.push_back(std::move(base[i]));
            for (auto& s : shuffled) pairs.push_back(std::move(s));
        }
    }
    if (pairs.empty()) throw IoError("no successful proofs in " + proofs_path);
    Json config{{"proofs", proofs_path}, {"augment", augment_copies}, {"traces", traces}};
    write_pairs(out_path, make_header("dataset", seed, config), pairs);
    std::cout << "wrote " << pairs.size() << " pairs from " << traces << " proofs -> "
              << out_path << "\n";
    return kExitOk;
}

int cmd_train(const std::string& pairs_path, const std::string& out_path, int epochs, double lr,
              std::size_t batch, std::uint64_t seed) {
    auto pairs = read_pairs(pairs_path);
    if (pairs.empty()) throw IoError("no pairs in " + pairs_path);
    PolicyModel model = train_imitation(pairs, epochs, lr, seed, batch);
    Json config{{"pairs", pairs_path}, {"epochs", epochs}, {"lr", lr}, {"batch", batch}};
    save_model(out_path, make_header("train", seed, config), model);
    std::cout << "trained on " << pairs.size() << " pairs, final loss "
              << model.metadata["final_loss"] << " -> " << out_path << "\n";
    return kExitOk;
}

int cmd_finetune(const std::string& model_path, const std::string& input,
                 const std::string& out_path, const RLConfig& rl, std::uint64_t seed) {
    PolicyModel model = load_model(model_path);
    auto problems = load_problems(input);
    if (problems.empty()) throw IoError("no fine-tune problems in " + input);
    std::vector<Expression> exprs;
    exprs.reserve(problems.size());
    for (auto& p : problems) exprs.push_back(std::move(p.expr));
    auto result = reinforce_finetune(model, exprs, rl, seed);
    Json config{{"model", model_path},
                {"input", input},
                {"episodes", rl.episodes},
                {"lr", rl.learning_rate},
                {"gamma", rl.gamma}};
    config["mean_return_curve"] = result.mean_return_curve;
    save_model(out_path, make_header("finetune", seed, config), result.model);
    std::cout << "fine-tuned over " << rl.episodes << " episodes -> " << out_path << "\n";
    return kExitOk;
}

int cmd_verify_theory(int n, std::int64_t trials, std::uint64_t seed, int dp_runs) {
    int failures = 0;

    // Closed form vs Monte Carlo at the requested n.
    std::vector<double> freq(static_cast<std::size_t>(n), 0.0);
    Rng rng(seed);
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < trials; ++t) {
        int best = n;
        for (int draw = 0; draw < 3; ++draw) {  // 3 distinct branch ranks
            int v;
            do {
                v = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n)));
            } while ((draw > 0 && v == idx[0]) || (draw > 1 && v == idx[1]));
            idx[draw] = v;
            best = std::min(best, v);
        }
        freq[best] += 1.0;
    }
    std::cout << "rank-selection probabilities, n=" << n << ", trials=" << trials << "\n";
    double max_dev = 0;
    for (int i = 1; i <= n; ++i) {
        const double exact = to_double(rank_probability(n, i));
        const double mc = freq[i - 1] / static_cast<double>(trials);
        max_dev = std::max(max_dev, std::abs(exact - mc));
        std::cout << "  rank " << i << ": exact " << exact << "  mc " << mc << "\n";
    }
    std::cout << "  max abs deviation " << max_dev << (max_dev < 0.01 ? "  [ok]" : "  [FAIL]")
              << "\n";
    if (max_dev >= 0.01) ++failures;

    // Exact rationals sum to one for every n in 3..20.
    for (int m = 3; m <= 20; ++m) {
        Rational sum(0);
        for (int i = 1; i <= m; ++i) sum += rank_probability(m, i);
        if (sum != 1) {
            std::cout << "  rank probabilities for n=" << m << " do not sum to 1 [FAIL]\n";
            ++failures;
        }
    }
    std::cout << "  exact sums for n=3..20 all equal 1 [ok]\n";

    // Recursive expected length vs simulation on the bundled shallow fixtures.
    static const char* kDpFixtures[] = {
        "sin(3*x + pi/2)*cos(x) - sin(4*x + pi/2)/2 - sin(2*x + pi/2)/2",
        "cos(x)**2 + sin(x)**2 - 1",
        "2*sin(x)*cos(x) - sin(2*x)",
        "sin(x + pi/3) - sin(x)/2 - sqrt(3)*cos(x)/2",
        "2*cos(x)*cos(2*x) - cos(x) - cos(3*x)",
        "sqrt(3)*sin(x)/2 + sqrt(3)*sin(5*x)/2 + cos(x)/2 - cos(5*x)/2 - 2*sin(3*x)*sin(2*x + pi/3)",
    };
    std::cout << "expected proof length, recursion vs " << dp_runs << " sampled searches\n";
    SearchConfig cfg;
    for (std::size_t fi = 0; fi < std::size(kDpFixtures); ++fi) {
        const Expression e = parse(kDpFixtures[fi]);
        const ExpectedLength dp = expected_rbfs_length(e, cfg.max_depth, cfg.node_budget);
        double sum = 0, sumsq = 0;
        int solved = 0;
        for (int r = 0; r < dp_runs; ++r) {
            Rng run_rng(derive_seed(seed ^ 0xD9ULL, fi * 131071 + r));
            auto res = prove_rbfs(e, run_rng, cfg);
            if (res) {
                const double len = static_cast<double>(res->length());
                sum += len;
                sumsq += len * len;
                ++solved;
            }
        }
        const double mean = solved ? sum / solved : 0.0;
        const double var =
            solved > 1 ? (sumsq - sum * sum / solved) / (solved - 1) : 0.0;
        const double se = solved ? std::sqrt(std::max(var, 0.0) / solved) : 0.0;
        const double diff = std::abs(dp.expected - mean);
        const bool ok = diff <= 3 * se + 1e-9;
        std::cout << "  fixture " << fi << ": dp " << dp.expected << "  mc " << mean << " (se "
                  << se << ", pass " << solved << "/" << dp_runs << ")"
                  << (ok ? "  [ok]" : "  [FAIL]") << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

int cmd_bench(const std::string& methods_csv, const std::string& input, int repeats,
              const std::string& report_path, const std::string& model_path, std::uint64_t seed,
              const SearchFlags& flags,
              const std::optional<std::pair<std::int64_t, Rational>>& coef_map, bool t2) {
    std::vector<Method> methods;
    std::string token;
    std::istringstream stream(methods_csv);
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) methods.push_back(parse_method(token));
    }
    if (methods.empty()) throw CLI::ValidationError("--methods", "no methods given");
    MoveScorer scorer;
    for (Method m : methods) {
        if (m == Method::Policy) {
            if (model_path.empty())
                throw CLI::RequiredError("--model is required when benching policy");
            scorer = make_scorer(load_model(model_path));
        }
    }
    auto problems = load_problems(input);
    if (problems.empty()) throw CLI::ValidationError("--input", "no problems in " + input);
    std::size_t t2_skipped = 0;
    if (coef_map || t2) {
        auto t2r = apply_t2(problems, coef_map, seed, GeneratorConfig{});
        problems = std::move(t2r.problems);
        t2_skipped = t2r.skipped;
    }
    MetricsReport report =
        bench(problems, methods, repeats, flags.cfg, seed, scorer, flags.workers);
    Json config = flags.to_json();
    config["methods"] = methods_csv;
    config["input"] = input;
    config["repeats"] = repeats;
    config["t2_skipped"] = t2_skipped;
    if (!model_path.empty()) config["model"] = model_path;
    write_report(report_path, make_header("bench", seed, config), report);
    for (const auto& agg : report.aggregates)
        std::cout << method_name(agg.method) << ": pass " << agg.pass_rate << "  avg length "
                  << agg.avg_length << "  avg time " << agg.avg_time_s << "s\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trigonometric identity prover and experiment harness"};
    app.require_subcommand(1);
    app.set_config("--config", "", "config file with key=value lines");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a corpus of identities");
    std::size_t gen_count = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    GeneratorConfig gen_cfg;
    gen_cmd->add_option("--count", gen_count, "identities to generate")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_seed, "corpus seed");
    gen_cmd->add_option("--out", gen_out, "output corpus file")->required();
    gen_cmd->add_option("--max-terms", gen_cfg.max_terms, "term-count filter");
    gen_cmd->add_option("--max-degree", gen_cfg.max_degree, "degree filter");

    // prove
    auto* prove_cmd = app.add_subcommand("prove", "prove identities from a corpus file");
    std::string prove_method = "bfs", prove_input, prove_out, prove_model, prove_coef_map;
    int prove_repeats = 1;
    std::uint64_t prove_seed = 1;
    bool prove_t2 = false;
    SearchFlags prove_flags;
    prove_cmd->add_option("--method", prove_method, "naive|filter|bfs|rbfs|policy")->required();
    prove_cmd->add_option("--input", prove_input, "corpus file")->required();
    prove_cmd->add_option("--out", prove_out, "proof file")->required();
    prove_cmd->add_option("--model", prove_model, "policy model file");
    prove_cmd->add_option("--repeats", prove_repeats, "seeded repeats for stochastic methods")
        ->check(CLI::PositiveNumber);
    prove_cmd->add_option("--seed", prove_seed, "run seed");
    prove_cmd->add_option("--coef-map", prove_coef_map, "T2 substitution \"a,b\"");
    prove_cmd->add_flag("--t2", prove_t2, "T2 with per-instance random a in 1..360");
    prove_flags.attach(prove_cmd);

    // dataset
    auto* dataset_cmd = app.add_subcommand("dataset", "extract (state, action) pairs");
    std::string ds_proofs, ds_out;
    int ds_augment = 3;
    std::uint64_t ds_seed = 1;
    dataset_cmd->add_option("--proofs", ds_proofs, "proof file")->required();
    dataset_cmd->add_option("--out", ds_out, "pairs file")->required();
    dataset_cmd->add_option("--augment", ds_augment, "shuffled copies per pair")
        ->check(CLI::NonNegativeNumber);
    dataset_cmd->add_option("--seed", ds_seed, "augmentation seed");

    // train
    auto* train_cmd = app.add_subcommand("train", "imitation-train a policy");
    std::string tr_pairs, tr_out;
    int tr_epochs = 30;
    double tr_lr = 0.05;
    std::size_t tr_batch = 64;
    std::uint64_t tr_seed = 1;
    train_cmd->add_option("--pairs", tr_pairs, "pairs file")->required();
    train_cmd->add_option("--out", tr_out, "model file")->required();
    train_cmd->add_option("--epochs", tr_epochs, "training epochs")->check(CLI::PositiveNumber);
    train_cmd->add_option("--lr", tr_lr, "learning rate");
    train_cmd->add_option("--batch", tr_batch, "mini-batch size")->check(CLI::PositiveNumber);
    train_cmd->add_option("--seed", tr_seed, "shuffle seed");

    // finetune
    auto* ft_cmd = app.add_subcommand("finetune", "policy-gradient fine-tune");
    std::string ft_model, ft_input, ft_out;
    RLConfig ft_rl;
    std::uint64_t ft_seed = 1;
    ft_cmd->add_option("--model", ft_model, "starting model")->required();
    ft_cmd->add_option("--input", ft_input, "corpus of training problems")->required();
    ft_cmd->add_option("--out", ft_out, "output model file")->required();
    ft_cmd->add_option("--episodes", ft_rl.episodes, "episodes")->check(CLI::PositiveNumber);
    ft_cmd->add_option("--lr", ft_rl.learning_rate, "learning rate");
    ft_cmd->add_option("--gamma", ft_rl.gamma, "discount")->check(CLI::Range(0.0, 1.0));
    ft_cmd->add_option("--max-steps", ft_rl.rollout_max_steps, "rollout step cap");
    ft_cmd->add_option("--seed", ft_seed, "episode seed");

    // verify-theory
    auto* vt_cmd = app.add_subcommand("verify-theory",
                                      "check the rank formula and the length recursion");
    int vt_n = 8, vt_dp_runs = 10000;
    std::int64_t vt_trials = 100000;
    std::uint64_t vt_seed = 1;
    vt_cmd->add_option("--n", vt_n, "branch count")->check(CLI::Range(3, 64));
    vt_cmd->add_option("--trials", vt_trials, "Monte Carlo triples")
        ->check(CLI::PositiveNumber);
    vt_cmd->add_option("--dp-runs", vt_dp_runs, "sampled searches per fixture")
        ->check(CLI::PositiveNumber);
    vt_cmd->add_option("--seed", vt_seed, "Monte Carlo seed");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "compare methods on a corpus");
    std::string bench_methods = "bfs,rbfs,filter", bench_input, bench_report, bench_model,
                bench_coef_map;
    int bench_repeats = 10;
    std::uint64_t bench_seed = 1;
    bool bench_t2 = false;
    SearchFlags bench_flags;
    bench_cmd->add_option("--methods", bench_methods, "comma-separated method list");
    bench_cmd->add_option("--input", bench_input, "corpus file")->required();
    bench_cmd->add_option("--repeats", bench_repeats, "repeats for stochastic methods")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--report", bench_report, "report file")->required();
    bench_cmd->add_option("--model", bench_model, "policy model file");
    bench_cmd->add_option("--seed", bench_seed, "bench seed");
    bench_cmd->add_option("--coef-map", bench_coef_map, "T2 substitution \"a,b\"");
    bench_cmd->add_flag("--t2", bench_t2, "T2 with per-instance random a in 1..360");
    bench_flags.attach(bench_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen_count, gen_seed, gen_out, gen_cfg);
        if (*prove_cmd) {
            std::optional<std::pair<std::int64_t, Rational>> cm;
            if (!prove_coef_map.empty()) cm = parse_coef_map(prove_coef_map);
            return cmd_prove(prove_method, prove_input, prove_out, prove_model, prove_repeats,
                             prove_seed, prove_flags, cm, prove_t2);
        }
        if (*dataset_cmd) return cmd_dataset(ds_proofs, ds_out, ds_augment, ds_seed);
        if (*train_cmd) return cmd_train(tr_pairs, tr_out, tr_epochs, tr_lr, tr_batch, tr_seed);
        if (*ft_cmd) return cmd_finetune(ft_model, ft_input, ft_out, ft_rl, ft_seed);
        if (*vt_cmd) return cmd_verify_theory(vt_n, vt_trials, vt_seed, vt_dp_runs);
        if (*bench_cmd) {
            std::optional<std::pair<std::int64_t, Rational>> cm;
            if (!bench_coef_map.empty()) cm = parse_coef_map(bench_coef_map);
            return cmd_bench(bench_methods, bench_input, bench_repeats, bench_report,
                             bench_model, bench_seed, bench_flags, cm, bench_t2);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
