#pragma once

// Line-delimited JSON files. Every output file starts with a header
// record carrying the tool version, subcommand, seed and the full
// effective configuration, so a run can be reproduced from its output.

#include "trigprove/gen.hpp"
#include "trigprove/learn.hpp"
#include "trigprove/search.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigprove {

using Json = nlohmann::json;

constexpr const char* kToolName = "trigprove";
constexpr const char* kToolVersion = "0.1.0";

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline Json make_header(const std::string& subcommand, std::uint64_t seed, Json config) {
    return Json{{"header",
                 {{"tool", kToolName},
                  {"version", kToolVersion},
                  {"subcommand", subcommand},
                  {"seed", seed},
                  {"config", std::move(config)}}}};
}

class JsonlWriter {
public:
    explicit JsonlWriter(const std::string& path) : out_(path) {
        if (!out_) throw IoError("cannot open for writing: " + path);
    }
    void write(const Json& record) {
        out_ << record.dump() << '\n';
        if (!out_) throw IoError("write failed");
    }

private:
    std::ofstream out_;
};

// All records of a JSONL file, header excluded (returned separately).
struct JsonlFile {
    std::optional<Json> header;
    std::vector<Json> records;
    std::vector<std::size_t> line_numbers;  // 1-based, aligned with records
};

inline JsonlFile read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    JsonlFile file;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded()) throw IoError(path + ":" + std::to_string(line_no) + ": bad JSON");
        if (j.contains("header") && !file.header) {
            file.header = std::move(j);
            continue;
        }
        file.records.push_back(std::move(j));
        file.line_numbers.push_back(line_no);
    }
    return file;
}

// ---------------------------------------------------------------------------
// Corpus files: {id, seed, expr, n_terms}

inline void write_corpus(const std::string& path, const Json& header,
                         const std::vector<IdentityRecord>& records) {
    JsonlWriter w(path);
    w.write(header);
    for (const auto& rec : records) {
        w.write(Json{{"id", rec.id},
                     {"seed", rec.seed},
                     {"expr", print(rec.identity)},
                     {"n_terms", rec.identity.n_terms()}});
    }
}

struct CorpusEntry {
    std::string id;
    Expression expr;
};

// Parse failures are reported to `errors` with their line number and the
// rest of the file is still loaded.
inline std::vector<CorpusEntry> read_corpus(const std::string& path,
                                            std::vector<std::string>* errors = nullptr) {
    JsonlFile file = read_jsonl(path);
    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < file.records.size(); ++i) {
        const Json& j = file.records[i];
        try {
            CorpusEntry entry;
            entry.id = j.contains("id") ? (j["id"].is_string()
                                               ? j["id"].get<std::string>()
                                               : std::to_string(j["id"].get<std::uint64_t>()))
                                        : std::to_string(i);
            entry.expr = parse(j.at("expr").get<std::string>());
            out.push_back(std::move(entry));
        } catch (const std::exception& ex) {
            if (errors)
                errors->push_back(path + ":" + std::to_string(file.line_numbers[i]) + ": " +
                                  ex.what());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Proof files: {problem_id, method, seed, success, length, wall_time_s, steps}

inline Json trace_record(const std::string& problem_id, const std::string& method,
                         std::uint64_t seed, const ProveResult& result, double wall_time_s) {
    Json rec{{"problem_id", problem_id},
             {"method", method},
             {"seed", seed},
             {"success", result.has_value()},
             {"length", result ? result->length() : 0},
             {"wall_time_s", wall_time_s},
             {"steps", Json::array()}};
    if (result) {
        for (const auto& step : result->steps)
            rec["steps"].push_back(
                Json{{"state", print(step.state)}, {"action", step.action.value}});
    }
    return rec;
}

struct ProofEntry {
    std::string problem_id;
    bool success = false;
    ProofTrace trace;
};

inline std::vector<ProofEntry> read_proofs(const std::string& path) {
    JsonlFile file = read_jsonl(path);
    std::vector<ProofEntry> out;
    for (const Json& j : file.records) {
        ProofEntry entry;
        entry.problem_id = j.at("problem_id").is_string()
                               ? j["problem_id"].get<std::string>()
                               : std::to_string(j["problem_id"].get<std::uint64_t>());
        entry.success = j.at("success").get<bool>();
        if (entry.success) {
            for (const Json& s : j.at("steps"))
                entry.trace.steps.push_back(
                    {parse(s.at("state").get<std::string>()),
                     ActionLabel{s.at("action").get<int>()}});
        }
        out.push_back(std::move(entry));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pairs files: {problem_id, state, label, derivation}

inline void write_pairs(const std::string& path, const Json& header,
                        const std::vector<StateActionPair>& pairs) {
    JsonlWriter w(path);
    w.write(header);
    for (const auto& p : pairs)
        w.write(Json{{"problem_id", p.problem_id},
                     {"state", p.state_text},
                     {"label", p.label},
                     {"derivation", p.derivation}});
}

inline std::vector<StateActionPair> read_pairs(const std::string& path) {
    JsonlFile file = read_jsonl(path);
    std::vector<StateActionPair> out;
    for (const Json& j : file.records)
        out.push_back({j.at("problem_id").get<std::string>(), j.at("state").get<std::string>(),
                       j.at("label").get<int>(), j.at("derivation").get<std::string>()});
    return out;
}

// ---------------------------------------------------------------------------
// Model files: header line + one record with schema, names, weights,
// metadata. Doubles survive the round trip bit-exactly (shortest
// round-trip serialization).

inline void save_model(const std::string& path, const Json& header, const PolicyModel& model) {
    JsonlWriter w(path);
    w.write(header);
    w.write(Json{{"schema_version", model.schema_version},
                 {"feature_names", model.names},
                 {"weights", model.weights},
                 {"metadata", model.metadata}});
}

inline PolicyModel load_model(const std::string& path) {
    JsonlFile file = read_jsonl(path);
    if (file.records.size() != 1) throw IoError(path + ": expected exactly one model record");
    const Json& j = file.records.front();
    PolicyModel model;
    model.schema_version = j.at("schema_version").get<int>();
    if (model.schema_version != kFeatureSchemaVersion)
        throw IoError(path + ": unsupported feature schema version " +
                      std::to_string(model.schema_version));
    model.names = j.at("feature_names").get<std::vector<std::string>>();
    if (model.names != feature_names())
        throw IoError(path + ": feature names do not match this build");
    model.weights = j.at("weights").get<std::vector<double>>();
    if (model.weights.size() != static_cast<std::size_t>(kFeatureDim))
        throw IoError(path + ": bad weight count");
    model.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    return model;
}

// ---------------------------------------------------------------------------
// Report files: per-method aggregates then per-instance rows.

inline void write_report(const std::string& path, const Json& header,
                         const MetricsReport& report) {
    JsonlWriter w(path);
    w.write(header);
    for (const auto& agg : report.aggregates)
        w.write(Json{{"type", "aggregate"},
                     {"method", method_name(agg.method)},
                     {"n_runs", agg.n_runs},
                     {"n_solved", agg.n_solved},
                     {"pass_rate", agg.pass_rate},
                     {"avg_length", agg.avg_length},
                     {"avg_time_s", agg.avg_time_s}});
    for (const auto& row : report.rows)
        w.write(Json{{"type", "instance"},
                     {"problem_id", row.problem_id},
                     {"method", method_name(row.method)},
                     {"repeat", row.repeat},
                     {"seed", row.seed},
                     {"success", row.success},
                     {"length", row.length},
                     {"wall_time_s", row.wall_time_s}});
}

}  // namespace trigprove
