#include "cmdviz/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "cmdviz/errors.hpp"

namespace cmdviz {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::vector<std::string> string_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw ValidationError(std::string("missing or non-array '") + key + "' field");
    }
    std::vector<std::string> out;
    for (const auto& item : j[key]) {
        if (!item.is_string()) {
            throw ValidationError(std::string("'") + key + "' entries must be strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

Vec number_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected an array of numbers");
    Vec out;
    for (const auto& item : j) {
        if (!item.is_number()) throw ValidationError(where + ": expected numbers");
        out.push_back(item.get<double>());
    }
    return out;
}

std::optional<ClusterConfig> parse_clustering_block(const json& root) {
    if (!root.contains("clustering")) return std::nullopt;
    const auto& j = root["clustering"];
    if (!j.is_object()) throw ValidationError("'clustering' must be an object");
    ClusterConfig cfg;
    if (j.contains("method")) {
        const auto s = j["method"].get<std::string>();
        if (s == "agglomerative") cfg.method = Method::Agglomerative;
        else if (s == "kmeans") cfg.method = Method::KMeans;
        else throw ValidationError("clustering.method must be 'agglomerative' or 'kmeans'");
    }
    if (j.contains("linkage")) {
        const auto s = j["linkage"].get<std::string>();
        if (s == "single") cfg.linkage = Linkage::Single;
        else if (s == "complete") cfg.linkage = Linkage::Complete;
        else if (s == "average") cfg.linkage = Linkage::Average;
        else throw ValidationError("clustering.linkage must be single|complete|average");
    }
    if (j.contains("metric")) {
        const auto s = j["metric"].get<std::string>();
        if (s == "euclidean") cfg.metric = Metric::Euclidean;
        else if (s == "manhattan") cfg.metric = Metric::Manhattan;
        else throw ValidationError("clustering.metric must be euclidean|manhattan");
    }
    if (j.contains("threshold")) cfg.threshold = j["threshold"].get<double>();
    if (j.contains("k")) cfg.k = j["k"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("max_iterations")) cfg.max_iterations = j["max_iterations"].get<int>();
    return cfg;
}

// Constant pooled outcome columns get a warning; clustering still works.
std::vector<std::string> collect_warnings(const Experiment& exp) {
    std::vector<std::string> warnings;
    for (int i = 0; i < exp.num_outcomes(); ++i) {
        const double first = exp.steps().front().measurements.front()[i];
        bool constant = true;
        for (const auto& step : exp.steps()) {
            for (const auto& row : step.measurements) {
                if (row[i] != first) {
                    constant = false;
                    break;
                }
            }
            if (!constant) break;
        }
        if (constant) {
            warnings.push_back("outcome '" + exp.outcomes()[i] + "' is constant across all agents and steps");
        }
    }
    return warnings;
}

double parse_number_strict(std::string_view s, const std::string& where) {
    double value = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ValidationError(where + ": invalid number '" + std::string(s) + "'");
    }
    return value;
}

std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

}  // namespace

IngestReport parse_json(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    } catch (const json::out_of_range& e) {
        // Overflowing literals (e.g. 1e999) would become non-finite values.
        throw ValidationError(std::string("non-finite numeric value in input: ") + e.what());
    }
    if (!root.is_object()) throw ValidationError("top-level JSON value must be an object");

    auto agents = string_array(root, "agents");
    auto outcomes = string_array(root, "outcomes");
    auto independents = string_array(root, "independents");

    if (!root.contains("steps") || !root["steps"].is_array()) {
        throw ValidationError("missing or non-array 'steps' field");
    }
    std::vector<Step> steps;
    int t = 0;
    for (const auto& js : root["steps"]) {
        if (!js.is_object()) throw ValidationError("step " + std::to_string(t) + ": expected an object");
        Step step;
        step.index = t;
        step.independent_values =
            number_array(js.value("independent_values", json::array()),
                         "step " + std::to_string(t) + " independent_values");
        if (!js.contains("measurements") || !js["measurements"].is_array()) {
            throw ValidationError("step " + std::to_string(t) + ": missing 'measurements'");
        }
        for (const auto& jrow : js["measurements"]) {
            step.measurements.push_back(
                number_array(jrow, "step " + std::to_string(t) + " measurements"));
        }
        steps.push_back(std::move(step));
        ++t;
    }

    IngestReport report{Experiment::make(std::move(agents), std::move(outcomes),
                                         std::move(independents), std::move(steps)),
                        {}, parse_clustering_block(root)};
    report.warnings = collect_warnings(report.experiment);
    return report;
}

IngestReport parse_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) lines.push_back(line);
        start = nl + 1;
    }
    if (lines.empty()) throw ParseError("empty CSV input");

    const auto header = split_line(lines.front());
    int col_step = -1, col_agent = -1, col_outcome = -1, col_value = -1;
    std::vector<std::string> independents;
    std::vector<int> iv_cols;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto& name = header[i];
        if (name == "step") col_step = static_cast<int>(i);
        else if (name == "agent") col_agent = static_cast<int>(i);
        else if (name == "outcome") col_outcome = static_cast<int>(i);
        else if (name == "value") col_value = static_cast<int>(i);
        else if (name.starts_with("iv:")) {
            independents.push_back(name.substr(3));
            iv_cols.push_back(static_cast<int>(i));
        } else {
            throw ValidationError("unexpected CSV column '" + name + "'");
        }
    }
    if (col_step < 0 || col_agent < 0 || col_outcome < 0 || col_value < 0) {
        throw ValidationError("CSV header must contain step, agent, outcome and value columns");
    }
    if (independents.empty()) {
        throw ValidationError("CSV header must contain at least one iv:<name> column");
    }

    std::vector<std::string> agents;
    std::vector<std::string> outcomes;
    std::map<std::string, int> agent_index;
    std::map<std::string, int> outcome_index;
    int max_step = -1;
    // (step, agent, outcome) -> value
    std::map<std::tuple<int, int, int>, double> cells;
    std::map<int, Vec> step_ivs;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::string where = "line " + std::to_string(li + 1);
        const auto fields = split_line(lines[li]);
        if (fields.size() != header.size()) {
            throw ValidationError(where + ": expected " + std::to_string(header.size()) +
                                  " fields, got " + std::to_string(fields.size()));
        }
        const int step = static_cast<int>(parse_number_strict(fields[col_step], where + " step"));
        if (step < 0) throw ValidationError(where + ": negative step index");
        max_step = std::max(max_step, step);

        const auto& agent = fields[col_agent];
        auto [ait, anew] = agent_index.try_emplace(agent, static_cast<int>(agents.size()));
        if (anew) agents.push_back(agent);
        const auto& outcome = fields[col_outcome];
        auto [oit, onew] = outcome_index.try_emplace(outcome, static_cast<int>(outcomes.size()));
        if (onew) outcomes.push_back(outcome);

        const double value = parse_number_strict(fields[col_value], where + " value");
        const auto key = std::make_tuple(step, ait->second, oit->second);
        if (!cells.emplace(key, value).second) {
            throw ValidationError(where + ": duplicate cell (step " + std::to_string(step) +
                                  ", agent '" + agent + "', outcome '" + outcome + "')");
        }

        Vec ivs;
        for (std::size_t k = 0; k < iv_cols.size(); ++k) {
            ivs.push_back(parse_number_strict(fields[iv_cols[k]], where + " iv:" + independents[k]));
        }
        auto [sit, snew] = step_ivs.try_emplace(step, ivs);
        if (!snew && sit->second != ivs) {
            throw ValidationError(where + ": independent values for step " + std::to_string(step) +
                                  " disagree with an earlier row");
        }
    }

    const int num_steps = max_step + 1;
    std::vector<std::string> missing;
    for (int t = 0; t < num_steps; ++t) {
        for (std::size_t j = 0; j < agents.size(); ++j) {
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
                if (!cells.count({t, static_cast<int>(j), static_cast<int>(i)})) {
                    if (missing.size() < 10) {
                        missing.push_back("(step " + std::to_string(t) + ", agent '" + agents[j] +
                                          "', outcome '" + outcomes[i] + "')");
                    }
                }
                if (missing.size() >= 10) break;
            }
        }
        if (!step_ivs.count(t) && missing.size() < 10) {
            missing.push_back("(step " + std::to_string(t) + ": no rows at all)");
        }
    }
    const std::size_t expected = static_cast<std::size_t>(num_steps) * agents.size() * outcomes.size();
    if (cells.size() != expected || !missing.empty()) {
        std::string msg = "incomplete measurement grid; missing cells:";
        for (const auto& m : missing) msg += " " + m;
        throw ValidationError(msg);
    }

    std::vector<Step> steps;
    for (int t = 0; t < num_steps; ++t) {
        Step step;
        step.index = t;
        step.independent_values = step_ivs.at(t);
        for (std::size_t j = 0; j < agents.size(); ++j) {
            Vec row;
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
                row.push_back(cells.at({t, static_cast<int>(j), static_cast<int>(i)}));
            }
            step.measurements.push_back(std::move(row));
        }
        steps.push_back(std::move(step));
    }

    IngestReport report{Experiment::make(std::move(agents), std::move(outcomes),
                                         std::move(independents), std::move(steps)),
                        {}, std::nullopt};
    report.warnings = collect_warnings(report.experiment);
    return report;
}

std::string write_json(const Experiment& exp) {
    ordered_json root;
    root["agents"] = exp.agents();
    root["outcomes"] = exp.outcomes();
    root["independents"] = exp.independents();
    root["steps"] = ordered_json::array();
    for (const auto& step : exp.steps()) {
        ordered_json js;
        js["independent_values"] = step.independent_values;
        js["measurements"] = step.measurements;
        root["steps"].push_back(std::move(js));
    }
    return root.dump(2) + "\n";
}

}  // namespace cmdviz
