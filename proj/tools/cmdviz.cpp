#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <unistd.h>

#include "cmdviz/errors.hpp"
#include "cmdviz/ingest.hpp"
#include "cmdviz/pipeline.hpp"
#include "cmdviz/render.hpp"
#include "cmdviz/serialize.hpp"
#include "cmdviz/synth.hpp"

namespace {

using namespace cmdviz;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

bool use_color() {
    if (std::getenv("CMDVIZ_NO_COLOR") != nullptr) return false;
    return isatty(fileno(stderr)) != 0;
}

void print_error(const std::string& category, const std::string& detail) {
    if (use_color()) {
        std::cerr << "\x1b[31merror\x1b[0m: " << category << ": " << detail << "\n";
    } else {
        std::cerr << "error: " << category << ": " << detail << "\n";
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Write to a temporary sibling first so a failure never leaves a partial file.
void write_file_atomic(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("cannot open output file '" + tmp + "'");
        out << content;
        if (!out) throw ValidationError("failed writing '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

IngestReport load(const std::string& path) {
    const std::string text = read_file(path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return parse_csv(text);
    return parse_json(text);
}

struct ClusterFlags {
    std::string method = "agglomerative";
    std::string linkage = "complete";
    std::string metric = "euclidean";
    double threshold = 0.15;
    int k = 1;
    std::uint64_t seed = 0;
    int max_iterations = 100;
};

void add_cluster_flags(CLI::App* cmd, ClusterFlags& flags) {
    cmd->add_option("--method", flags.method, "Clustering method")
        ->check(CLI::IsMember({"agglomerative", "kmeans"}));
    cmd->add_option("--linkage", flags.linkage, "Agglomerative linkage")
        ->check(CLI::IsMember({"single", "complete", "average"}));
    cmd->add_option("--metric", flags.metric, "Distance metric")
        ->check(CLI::IsMember({"euclidean", "manhattan"}));
    cmd->add_option("--threshold", flags.threshold, "Agglomerative merge threshold");
    cmd->add_option("--k", flags.k, "Number of clusters (kmeans)");
    cmd->add_option("--seed", flags.seed, "Seed (kmeans)");
    cmd->add_option("--max-iterations", flags.max_iterations, "Lloyd iteration cap (kmeans)");
}

// File-level `clustering` block supplies defaults; explicit flags win.
ClusterConfig resolve_cluster_config(const CLI::App* cmd, const ClusterFlags& flags,
                                     const std::optional<ClusterConfig>& file_cfg) {
    ClusterConfig cfg = file_cfg.value_or(ClusterConfig{});
    if (cmd->count("--method")) {
        cfg.method = flags.method == "kmeans" ? Method::KMeans : Method::Agglomerative;
    }
    if (cmd->count("--linkage")) {
        cfg.linkage = flags.linkage == "single" ? Linkage::Single
                    : flags.linkage == "average" ? Linkage::Average
                                                 : Linkage::Complete;
    }
    if (cmd->count("--metric")) {
        cfg.metric = flags.metric == "manhattan" ? Metric::Manhattan : Metric::Euclidean;
    }
    if (cmd->count("--threshold")) cfg.threshold = flags.threshold;
    if (cmd->count("--k")) cfg.k = flags.k;
    if (cmd->count("--seed")) cfg.seed = flags.seed;
    if (cmd->count("--max-iterations")) cfg.max_iterations = flags.max_iterations;
    return cfg;
}

ReduceMode parse_reduce_mode(const std::string& s) {
    if (s == "none") return ReduceMode::None;
    if (s == "pca") return ReduceMode::Pca;
    return ReduceMode::Auto;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cognitive Move Diagram toolkit"};
    app.require_subcommand(1);

    // validate
    std::string validate_path;
    auto* cmd_validate = app.add_subcommand("validate", "Check an experiment file");
    cmd_validate->add_option("file", validate_path, "Experiment file (.json or .csv)")->required();

    // diagram
    std::string diagram_input, diagram_output;
    int diagram_scheme = 1;
    std::string diagram_format = "svg";
    std::string diagram_reduce = "auto";
    int diagram_components = 2;
    bool diagram_scheme3_edges = false;
    int diagram_width = 960, diagram_height = 540;
    ClusterFlags diagram_cluster;
    auto* cmd_diagram = app.add_subcommand("diagram", "Render a Cognitive Move Diagram");
    cmd_diagram->add_option("--input", diagram_input, "Experiment file")->required();
    cmd_diagram->add_option("--output", diagram_output, "Output path ('-' for stdout)")->required();
    cmd_diagram->add_option("--scheme", diagram_scheme, "Encoding scheme")->check(CLI::Range(1, 3));
    cmd_diagram->add_option("--format", diagram_format, "Output format")
        ->check(CLI::IsMember({"svg", "dot", "json"}));
    cmd_diagram->add_option("--reduce", diagram_reduce, "Dimensionality reduction")
        ->check(CLI::IsMember({"auto", "none", "pca"}));
    cmd_diagram->add_option("--components", diagram_components, "PCA component count");
    cmd_diagram->add_flag("--scheme3-edges", diagram_scheme3_edges, "Draw edges under scheme 3");
    cmd_diagram->add_option("--width", diagram_width, "SVG width in px");
    cmd_diagram->add_option("--height", diagram_height, "SVG height in px");
    add_cluster_flags(cmd_diagram, diagram_cluster);

    // emit
    std::string emit_input, emit_selector, emit_output = "-";
    std::string emit_reduce = "auto";
    int emit_components = 2;
    int emit_scheme = 1;
    ClusterFlags emit_cluster;
    auto* cmd_emit = app.add_subcommand("emit", "Write a pipeline intermediate as JSON");
    cmd_emit->add_option("--input", emit_input, "Experiment file")->required();
    cmd_emit->add_option("--emit", emit_selector, "Which intermediate")
        ->required()
        ->check(CLI::IsMember({"diagram", "group-states", "clusters", "acm", "gcm", "pca"}));
    cmd_emit->add_option("--output", emit_output, "Output path ('-' for stdout)");
    cmd_emit->add_option("--scheme", emit_scheme, "Encoding scheme for --emit diagram")
        ->check(CLI::Range(1, 3));
    cmd_emit->add_option("--reduce", emit_reduce, "Dimensionality reduction")
        ->check(CLI::IsMember({"auto", "none", "pca"}));
    cmd_emit->add_option("--components", emit_components, "PCA component count");
    add_cluster_flags(cmd_emit, emit_cluster);

    // synth
    std::string synth_spec_path, synth_output;
    auto* cmd_synth = app.add_subcommand("synth", "Generate a synthetic experiment");
    cmd_synth->add_option("--spec", synth_spec_path, "SynthSpec JSON file")->required();
    cmd_synth->add_option("--output", synth_output, "Output path ('-' for stdout)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage", e.what());
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (*cmd_validate) {
            const IngestReport report = load(validate_path);
            for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
            std::cout << "ok: " << report.experiment.num_agents() << " agents, "
                      << report.experiment.num_outcomes() << " outcomes, "
                      << report.experiment.num_steps() << " steps\n";
            return kExitOk;
        }

        if (*cmd_diagram) {
            const IngestReport report = load(diagram_input);
            PipelineOptions opts;
            opts.cluster = resolve_cluster_config(cmd_diagram, diagram_cluster, report.clustering);
            opts.reduce = parse_reduce_mode(diagram_reduce);
            opts.components = diagram_components;
            opts.scheme = diagram_scheme;
            opts.scheme3_edges = diagram_scheme3_edges;
            const PipelineResult result = run_pipeline(report.experiment, opts);

            std::string content;
            if (diagram_format == "svg") {
                RenderConfig rc;
                rc.width_px = diagram_width;
                rc.height_px = diagram_height;
                content = render_svg(result.diagram, rc);
            } else if (diagram_format == "dot") {
                content = render_dot(result.diagram);
            } else {
                content = diagram_to_json(result.diagram);
            }
            write_file_atomic(diagram_output, content);
            return kExitOk;
        }

        if (*cmd_emit) {
            const IngestReport report = load(emit_input);
            if (emit_selector == "acm") {
                write_file_atomic(emit_output, agent_moves_to_json(report.experiment));
                return kExitOk;
            }
            PipelineOptions opts;
            opts.cluster = resolve_cluster_config(cmd_emit, emit_cluster, report.clustering);
            opts.reduce = parse_reduce_mode(emit_reduce);
            opts.components = emit_components;
            opts.scheme = emit_scheme;
            const PipelineResult result = run_pipeline(report.experiment, opts);

            std::string content;
            if (emit_selector == "diagram") {
                content = diagram_to_json(result.diagram);
            } else if (emit_selector == "group-states") {
                content = group_states_to_json(result.group_states);
            } else if (emit_selector == "clusters") {
                content = partitions_to_json(result.partitions);
            } else if (emit_selector == "gcm") {
                content = group_moves_to_json(group_moves(result.group_states));
            } else {  // pca
                if (!result.pca) throw ConfigError("no PCA model was fit; pass --reduce pca");
                content = pca_to_json(*result.pca);
            }
            write_file_atomic(emit_output, content);
            return kExitOk;
        }

        if (*cmd_synth) {
            const SynthSpec spec = parse_synth_spec(read_file(synth_spec_path));
            write_file_atomic(synth_output, write_json(generate(spec)));
            return kExitOk;
        }
    } catch (const ParseError& e) {
        print_error("parse", e.what());
        return kExitValidation;
    } catch (const ValidationError& e) {
        print_error("validation", e.what());
        return kExitValidation;
    } catch (const ConfigError& e) {
        print_error("config", e.what());
        return kExitValidation;
    } catch (const UsageError& e) {
        print_error("internal", e.what());
        return kExitInternal;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return kExitInternal;
    }
    return kExitInternal;
}
