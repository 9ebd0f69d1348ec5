// Copyright 2026 The wsbmf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "wsbmf/wsbmf.hpp"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

struct SolverFlags {
    wsbmf::Index c = 2;
    wsbmf::Index restarts = 10;
    std::uint64_t seed = 0;
    double gamma = 1.0;
    wsbmf::Index grid = 101;
    std::string priors_path;

    void attach(CLI::App* cmd, bool with_c = true) {
        if (with_c) cmd->add_option("--c", c, "number of communities")->check(CLI::PositiveNumber);
        cmd->add_option("--restarts", restarts, "random restarts")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "master random seed");
        cmd->add_option("--gamma", gamma, "weight of observed pairs")->check(CLI::NonNegativeNumber);
        cmd->add_option("--grid", grid, "threshold grid size")->check(CLI::Range(2, 100000));
        cmd->add_option("--priors", priors_path, "prior constraint file (lines: e|a id1 id2)");
    }

    wsbmf::SolverConfig to_config() const {
        wsbmf::SolverConfig config;
        config.c = c;
        config.restarts = restarts;
        config.seed = seed;
        config.gamma = gamma;
        config.threshold_grid = grid;
        return config;
    }
};

json config_json(const wsbmf::SolverConfig& config) {
    return json{{"c", config.c},
                {"gamma", config.gamma},
                {"als_iters", config.als_iters},
                {"mu_iters", config.mu_iters},
                {"threshold_grid", config.threshold_grid},
                {"restarts", config.restarts},
                {"max_reseeds", config.max_reseeds},
                {"seed", config.seed},
                {"epsilon", config.epsilon},
                {"als_ridge", config.als_ridge}};
}

struct ManifestWriter {
    std::string command;
    json config = json::object();
    std::map<std::string, std::string> input_hashes;
    std::uint64_t seed = 0;
    Clock::time_point start = Clock::now();

    void add_input(const std::string& name, const std::string& bytes) {
        input_hashes[name] = hex64(wsbmf::fnv1a64(bytes));
    }

    void write(const std::string& out_dir) const {
        const double ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        json manifest{{"command", command},
                      {"config", config},
                      {"inputs", json::object()},
                      {"library_version", wsbmf::kVersion},
                      {"seed", seed},
                      {"timing_ms", ms}};
        for (const auto& [name, hash] : input_hashes) manifest["inputs"][name] = hash;
        wsbmf::write_file(out_dir + "/manifest.json", manifest.dump(2) + "\n");
    }
};

std::string ensure_out_dir(const std::string& out) {
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    if (ec) throw wsbmf::InputError("cannot create output directory " + out + ": " + ec.message());
    return out;
}

json cover_json(const wsbmf::CoverTable& table, const wsbmf::DetectionResult* result,
                const wsbmf::SolverConfig* config) {
    json doc{{"format", "wsbmf-cover"}, {"schema_version", 1}};
    doc["c"] = table.cover.c();
    doc["n_delta"] = table.n_delta;
    doc["n_gamma"] = table.cover.n() - table.n_delta;
    if (config) doc["config"] = config_json(*config);
    if (result) {
        doc["objective"] = result->objective;
        doc["density"] = result->density;
        doc["mean_density"] = result->mean_density;
        doc["threshold"] = result->threshold;
        doc["selected_restart"] = result->selected_restart;
        doc["successful_restarts"] = result->successes;
        doc["degenerate"] = result->degenerate;
    }
    const bool with_u = table.continuous.size() > 0;
    wsbmf::Vector entropy;
    if (with_u) entropy = wsbmf::exponential_entropy(table.continuous);
    doc["nodes"] = json::array();
    for (wsbmf::Index v = 0; v < table.cover.n(); ++v) {
        json node{{"id", table.label(v)},
                  {"part", v < table.n_delta ? "delta" : "gamma"},
                  {"communities", table.cover.communities_of(v)},
                  {"outlier", table.cover.is_outlier(v)}};
        if (with_u) {
            node["entropy"] = entropy(v);
            std::vector<double> row(table.continuous.cols());
            for (wsbmf::Index k = 0; k < table.continuous.cols(); ++k) row[k] = table.continuous(v, k);
            node["membership"] = row;
        }
        doc["nodes"].push_back(std::move(node));
    }
    return doc;
}

std::string entropy_tsv(const wsbmf::CoverTable& table) {
    if (table.continuous.size() == 0)
        throw wsbmf::InputError("cover has no continuous membership columns; entropy is undefined");
    const wsbmf::Vector entropy = wsbmf::exponential_entropy(table.continuous);
    std::string out = "# node\tpart\texp_entropy\n";
    for (wsbmf::Index v = 0; v < table.cover.n(); ++v) {
        out += table.label(v);
        out += '\t';
        out += v < table.n_delta ? "delta" : "gamma";
        out += '\t';
        out += wsbmf::detail::format_double(entropy(v));
        out += '\n';
    }
    return out;
}

void write_detection_outputs(const std::string& out_dir, const wsbmf::BipartiteGraph& graph,
                             const wsbmf::DetectionResult& result, const wsbmf::SolverConfig& config,
                             const std::string& format) {
    const wsbmf::CoverTable table =
        wsbmf::make_cover_table(graph, result.cover(), result.continuous);
    if (format == "json")
        wsbmf::write_file(out_dir + "/cover.json", cover_json(table, &result, &config).dump(2) + "\n");
    else
        wsbmf::write_file(out_dir + "/cover.tsv", wsbmf::write_cover_tsv(table));
    wsbmf::write_file(out_dir + "/entropy.tsv", entropy_tsv(table));
}

int run_detect(const std::string& graph_path, const SolverFlags& flags, const std::string& format,
               const std::string& out) {
    ManifestWriter manifest;
    manifest.command = "detect";
    manifest.seed = flags.seed;

    const std::string graph_text = wsbmf::read_file(graph_path);
    manifest.add_input(graph_path, graph_text);
    std::vector<std::string> warnings;
    const wsbmf::BipartiteGraph graph = wsbmf::parse_edgelist(graph_text, &warnings);
    print_warnings(warnings);

    std::optional<wsbmf::PriorConstraints> priors;
    if (!flags.priors_path.empty()) {
        const std::string prior_text = wsbmf::read_file(flags.priors_path);
        manifest.add_input(flags.priors_path, prior_text);
        priors = wsbmf::parse_priors(prior_text, graph, flags.gamma);
    }

    const wsbmf::SolverConfig config = flags.to_config();
    manifest.config = config_json(config);
    manifest.config["format"] = format;
    const wsbmf::DetectionResult result =
        wsbmf::detect(graph, priors ? &*priors : nullptr, config);
    if (result.degenerate) std::cerr << "warning: no observed links; every node is an outlier\n";

    const std::string out_dir = ensure_out_dir(out);
    write_detection_outputs(out_dir, graph, result, config, format);
    manifest.write(out_dir);

    wsbmf::DensityDiagnostics diag;
    wsbmf::partition_density_bipartite(graph, result.cover(), &diag);
    print_warnings(diag.warnings);
    std::cout << "communities " << result.cover().active_communities() << " objective "
              << result.objective << " density " << result.density << " outliers "
              << diag.outliers << '\n';
    return 0;
}

int run_sweep(const std::string& graph_path, const SolverFlags& flags, wsbmf::Index c_min,
              wsbmf::Index c_max, const std::string& format, const std::string& out) {
    if (c_min > c_max) throw wsbmf::InputError("--c-min must not exceed --c-max");
    ManifestWriter manifest;
    manifest.command = "sweep";
    manifest.seed = flags.seed;

    const std::string graph_text = wsbmf::read_file(graph_path);
    manifest.add_input(graph_path, graph_text);
    std::vector<std::string> warnings;
    const wsbmf::BipartiteGraph graph = wsbmf::parse_edgelist(graph_text, &warnings);
    print_warnings(warnings);

    std::optional<wsbmf::PriorConstraints> priors;
    if (!flags.priors_path.empty()) {
        const std::string prior_text = wsbmf::read_file(flags.priors_path);
        manifest.add_input(flags.priors_path, prior_text);
        priors = wsbmf::parse_priors(prior_text, graph, flags.gamma);
    }

    const wsbmf::SolverConfig config = flags.to_config();
    manifest.config = config_json(config);
    manifest.config["c_min"] = c_min;
    manifest.config["c_max"] = c_max;
    const wsbmf::ModelSelection selection =
        wsbmf::select_c(graph, priors ? &*priors : nullptr, config, c_min, c_max);

    json doc{{"schema_version", 1}, {"best_c", selection.best_c}, {"candidates", json::array()}};
    for (const auto& cand : selection.candidates) {
        doc["candidates"].push_back(json{{"c", cand.c},
                                         {"ran", cand.ran},
                                         {"successful_restarts", cand.successes},
                                         {"mean_density", cand.mean_density},
                                         {"best_density", cand.best_density},
                                         {"objective", cand.objective},
                                         {"failure", cand.failure}});
    }
    const std::string out_dir = ensure_out_dir(out);
    wsbmf::write_file(out_dir + "/sweep.json", doc.dump(2) + "\n");
    wsbmf::SolverConfig best_config = config;
    best_config.c = selection.best_c;
    best_config.seed = wsbmf::mix_seed(config.seed, static_cast<std::uint64_t>(selection.best_c));
    write_detection_outputs(out_dir, graph, selection.best, best_config, format);
    manifest.write(out_dir);
    std::cout << "best_c " << selection.best_c << '\n';
    return 0;
}

struct GenerateFlags {
    std::string family;
    double z_out = 0.0;
    wsbmf::Index t = 0;
    double p_in = 0.5;
    double alpha = 0.1;
    wsbmf::Index communities = 5;
    wsbmf::Index per_side = 32;
    double prior_fraction = 0.0;
    double gamma = 1.0;
    std::uint64_t seed = 0;
};

int run_generate(const GenerateFlags& flags, const std::string& out) {
    ManifestWriter manifest;
    manifest.command = "generate";
    manifest.seed = flags.seed;
    manifest.config = json{{"family", flags.family}, {"seed", flags.seed}};

    std::optional<wsbmf::Generated> bench;
    if (flags.family == "classic") {
        manifest.config["communities"] = flags.communities;
        manifest.config["per_side"] = flags.per_side;
        manifest.config["p_in"] = flags.p_in;
        manifest.config["alpha"] = flags.alpha;
        bench = wsbmf::gen_classic(flags.communities, flags.per_side, flags.p_in, flags.alpha, flags.seed);
    } else if (flags.family == "nonoverlap") {
        manifest.config["z_out"] = flags.z_out;
        bench = wsbmf::gen_nonoverlapping(flags.z_out, flags.seed);
    } else if (flags.family == "overlap") {
        manifest.config["t"] = flags.t;
        bench = wsbmf::gen_overlapping(flags.t, flags.seed);
    } else {
        throw wsbmf::InputError("unknown family '" + flags.family + "'; expected classic, nonoverlap, or overlap");
    }

    const std::string out_dir = ensure_out_dir(out);
    wsbmf::write_file(out_dir + "/graph.tsv", wsbmf::write_edgelist(bench->graph));
    const wsbmf::CoverTable truth = wsbmf::make_cover_table(bench->graph, bench->truth);
    wsbmf::write_file(out_dir + "/truth.tsv", wsbmf::write_cover_tsv(truth));
    if (flags.prior_fraction > 0.0) {
        manifest.config["prior_fraction"] = flags.prior_fraction;
        const wsbmf::PriorConstraints priors = wsbmf::sample_priors(
            bench->truth, bench->graph, flags.prior_fraction, flags.gamma, flags.seed);
        wsbmf::write_file(out_dir + "/priors.tsv", wsbmf::write_priors(priors, bench->graph));
    }
    manifest.write(out_dir);
    std::cout << "nodes " << bench->graph.n() << " edges " << bench->graph.edges().size() << '\n';
    return 0;
}

// Reorders `found` rows to match the label order of `truth`; labels must
// coincide as sets.
wsbmf::CoverTable align_tables(const wsbmf::CoverTable& truth, const wsbmf::CoverTable& found) {
    if (truth.cover.n() != found.cover.n())
        throw wsbmf::InputError("covers describe different node counts");
    std::map<std::string, wsbmf::Index> rows;
    for (wsbmf::Index v = 0; v < found.cover.n(); ++v) {
        if (!rows.emplace(found.label(v), v).second)
            throw wsbmf::InputError("duplicate node id '" + found.label(v) + "' in cover");
    }
    std::vector<std::vector<wsbmf::Index>> assignments;
    std::vector<std::string> labels;
    for (wsbmf::Index v = 0; v < truth.cover.n(); ++v) {
        const auto it = rows.find(truth.label(v));
        if (it == rows.end()) throw wsbmf::InputError("node '" + truth.label(v) + "' missing from cover");
        assignments.push_back(found.cover.communities_of(it->second));
        labels.push_back(truth.label(v));
    }
    return wsbmf::CoverTable{wsbmf::CommunityCover(std::move(assignments), found.cover.c()),
                             truth.n_delta, std::move(labels), wsbmf::Matrix()};
}

std::pair<wsbmf::Index, wsbmf::Index> part_range(const wsbmf::CoverTable& table, const std::string& part) {
    if (part == "delta") return {0, table.n_delta};
    if (part == "gamma") return {table.n_delta, table.cover.n()};
    return {0, table.cover.n()};
}

int run_evaluate(const std::string& truth_path, const std::string& found_path, const std::string& mode,
                 const std::string& part, const std::string& out) {
    ManifestWriter manifest;
    manifest.command = "evaluate";
    manifest.config = json{{"mode", mode}, {"part", part}};

    const std::string truth_text = wsbmf::read_file(truth_path);
    const std::string found_text = wsbmf::read_file(found_path);
    manifest.add_input(truth_path, truth_text);
    manifest.add_input(found_path, found_text);
    const wsbmf::CoverTable truth = wsbmf::parse_cover(truth_text);
    const wsbmf::CoverTable found = align_tables(truth, wsbmf::parse_cover(found_text));

    const auto [begin, end] = part_range(truth, part);
    if (begin == end) throw wsbmf::InputError("selected part has no nodes");
    const wsbmf::CommunityCover a = truth.cover.restricted(begin, end);
    const wsbmf::CommunityCover b = found.cover.restricted(begin, end);

    std::vector<std::string> warnings;
    double value = 0.0;
    if (mode == "nmi")
        value = wsbmf::nmi(a, b, &warnings);
    else if (mode == "gnmi")
        value = wsbmf::gnmi(a, b, &warnings);
    else
        throw wsbmf::InputError("mode must be nmi or gnmi");
    print_warnings(warnings);

    const std::string out_dir = ensure_out_dir(out);
    json doc{{"schema_version", 1}, {"mode", mode}, {"part", part}, {"value", value}, {"warnings", warnings}};
    wsbmf::write_file(out_dir + "/score.json", doc.dump(2) + "\n");
    manifest.write(out_dir);
    std::cout << wsbmf::detail::format_double(value) << '\n';
    return 0;
}

int run_entropy(const std::string& cover_path, const std::string& out) {
    ManifestWriter manifest;
    manifest.command = "entropy";
    const std::string text = wsbmf::read_file(cover_path);
    manifest.add_input(cover_path, text);
    const wsbmf::CoverTable table = wsbmf::parse_cover(text);
    const std::string tsv = entropy_tsv(table);
    const std::string out_dir = ensure_out_dir(out);
    wsbmf::write_file(out_dir + "/entropy.tsv", tsv);
    manifest.write(out_dir);
    std::cout << tsv;
    return 0;
}

json stats_json(const std::vector<double>& values) {
    return json{{"mean", wsbmf::mean(values)}, {"std", wsbmf::stddev(values)}, {"values", values}};
}

json stats_json(const std::vector<wsbmf::Index>& values) {
    std::vector<double> as_double(values.begin(), values.end());
    return stats_json(as_double);
}

struct ExperimentFlags {
    std::string name;
    wsbmf::Index reps = 10;
    wsbmf::Index restarts = 10;
    std::uint64_t seed = 0;
    double prior_fraction = 0.05;
    std::vector<double> zout_grid;
    std::vector<wsbmf::Index> t_grid;
    bool estimate_c = true;
    wsbmf::Index jobs = 1;
};

int run_experiment(const ExperimentFlags& flags, const std::string& out) {
    ManifestWriter manifest;
    manifest.command = "experiment";
    manifest.seed = flags.seed;

    wsbmf::ExperimentConfig config;
    config.reps = flags.reps;
    config.restarts = flags.restarts;
    config.seed = flags.seed;
    config.prior_fraction = flags.prior_fraction;
    config.estimate_c = flags.estimate_c;
    config.jobs = flags.jobs;
    if (!flags.zout_grid.empty()) config.zout_grid = flags.zout_grid;
    if (!flags.t_grid.empty()) config.t_grid = flags.t_grid;

    manifest.config = json{{"name", flags.name},
                           {"reps", config.reps},
                           {"restarts", config.restarts},
                           {"seed", config.seed},
                           {"prior_fraction", config.prior_fraction},
                           {"estimate_c", config.estimate_c},
                           {"jobs", config.jobs}};

    json doc{{"schema_version", 1}, {"experiment", flags.name}};
    doc["config"] = manifest.config;
    doc["points"] = json::array();

    if (flags.name == "fig2") {
        manifest.config["zout_grid"] = config.zout_grid;
        doc["config"]["zout_grid"] = config.zout_grid;
        const wsbmf::MixingResult result = wsbmf::run_mixing_experiment(config);
        for (const auto& point : result.points) {
            json row{{"z_out", point.z_out},
                     {"wsbmf", json{{"nmi_all", stats_json(point.nmi_all)},
                                    {"nmi_delta", stats_json(point.nmi_delta)}}},
                     {"with_priors", json{{"nmi_all", stats_json(point.priors_nmi_all)},
                                          {"nmi_delta", stats_json(point.priors_nmi_delta)}}},
                     {"baseline", json{{"nmi_delta", stats_json(point.baseline_nmi_delta)}}}};
            if (!point.estimated_c.empty()) row["estimated_c"] = stats_json(point.estimated_c);
            doc["points"].push_back(std::move(row));
        }
    } else if (flags.name == "fig3") {
        manifest.config["t_grid"] = config.t_grid;
        doc["config"]["t_grid"] = config.t_grid;
        const wsbmf::OverlapResult result = wsbmf::run_overlap_experiment(config);
        for (const auto& point : result.points) {
            json row{{"t", point.t},
                     {"wsbmf", json{{"gnmi_all", stats_json(point.gnmi_all)}}},
                     {"with_priors", json{{"gnmi_all", stats_json(point.priors_gnmi_all)}}},
                     {"baseline", json{{"gnmi_delta", stats_json(point.baseline_gnmi_delta)}}},
                     {"duals_planted", point.duals_planted},
                     {"duals_recovered", point.duals_recovered}};
            if (!point.estimated_c.empty()) row["estimated_c"] = stats_json(point.estimated_c);
            doc["points"].push_back(std::move(row));
        }
    } else {
        throw wsbmf::InputError("unknown experiment '" + flags.name + "'; expected fig2 or fig3");
    }

    const std::string out_dir = ensure_out_dir(out);
    wsbmf::write_file(out_dir + "/" + flags.name + ".json", doc.dump(2) + "\n");
    manifest.write(out_dir);
    std::cout << "wrote " << out_dir << "/" << flags.name << ".json\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted symmetric binary matrix factorization for overlapping bipartite communities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wsbmf::kVersion));

    std::string graph_path, out_dir = ".";
    SolverFlags solver;
    auto* detect_cmd = app.add_subcommand("detect", "detect overlapping communities in an edge list");
    detect_cmd->add_option("graph", graph_path, "bipartite edge-list file")->required();
    solver.attach(detect_cmd);
    detect_cmd->add_option("--out", out_dir, "output directory");
    std::string format = "tsv";
    detect_cmd->add_option("--format", format, "primary output format")
        ->check(CLI::IsMember({"tsv", "json"}));

    wsbmf::Index c_min = 2, c_max = 6;
    std::string sweep_graph, sweep_out = ".", sweep_format = "tsv";
    SolverFlags sweep_solver;
    auto* sweep_cmd = app.add_subcommand("sweep", "scan community counts by partition density");
    sweep_cmd->add_option("graph", sweep_graph, "bipartite edge-list file")->required();
    sweep_cmd->add_option("--c-min", c_min, "smallest candidate count")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--c-max", c_max, "largest candidate count")->check(CLI::PositiveNumber);
    sweep_solver.attach(sweep_cmd, false);
    sweep_cmd->add_option("--format", sweep_format, "cover output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    sweep_cmd->add_option("--out", sweep_out, "output directory");

    GenerateFlags gen;
    std::string gen_out = ".";
    auto* gen_cmd = app.add_subcommand("generate", "write a synthetic benchmark instance");
    gen_cmd->add_option("family", gen.family, "classic | nonoverlap | overlap")->required();
    gen_cmd->add_option("--zout", gen.z_out, "mean out-community degree (nonoverlap)");
    gen_cmd->add_option("--t", gen.t, "dual-membership nodes per consecutive pair (overlap)");
    gen_cmd->add_option("--pin", gen.p_in, "within-community edge probability (classic)");
    gen_cmd->add_option("--alpha", gen.alpha, "between/within probability ratio (classic)");
    gen_cmd->add_option("--communities", gen.communities, "community count (classic)");
    gen_cmd->add_option("--per-side", gen.per_side, "nodes per side per community (classic)");
    gen_cmd->add_option("--prior-fraction", gen.prior_fraction, "also sample this fraction of delta pairs as priors");
    gen_cmd->add_option("--gamma", gen.gamma, "prior constraint weight");
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--out", gen_out, "output directory");

    std::string truth_path, found_path, mode = "nmi", part = "all", eval_out = ".";
    auto* eval_cmd = app.add_subcommand("evaluate", "score a found cover against a reference cover");
    eval_cmd->add_option("truth", truth_path, "reference cover file")->required();
    eval_cmd->add_option("found", found_path, "found cover file")->required();
    eval_cmd->add_option("--mode", mode, "nmi (hard partitions) or gnmi (overlapping covers)")
        ->check(CLI::IsMember({"nmi", "gnmi"}));
    eval_cmd->add_option("--part", part, "score delta, gamma, or all nodes")
        ->check(CLI::IsMember({"delta", "gamma", "all"}));
    eval_cmd->add_option("--out", eval_out, "directory for score.json and manifest");

    std::string entropy_cover, entropy_out = ".";
    auto* entropy_cmd = app.add_subcommand("entropy", "exponential entropy per node from a cover file");
    entropy_cmd->add_option("cover", entropy_cover, "cover file with membership columns")->required();
    entropy_cmd->add_option("--out", entropy_out, "directory for entropy.tsv and manifest");

    ExperimentFlags exp;
    std::string exp_out = ".";
    auto* exp_cmd = app.add_subcommand("experiment", "run a scripted benchmark protocol");
    exp_cmd->add_option("name", exp.name, "fig2 | fig3")->required();
    exp_cmd->add_option("--reps", exp.reps, "seeds per grid point")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--restarts", exp.restarts, "solver restarts")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--seed", exp.seed, "master seed");
    exp_cmd->add_option("--prior-fraction", exp.prior_fraction, "sampled prior pair fraction");
    exp_cmd->add_option("--zout-grid", exp.zout_grid, "z_out grid (fig2)")->delimiter(',');
    exp_cmd->add_option("--t-grid", exp.t_grid, "t grid (fig3)")->delimiter(',');
    exp_cmd->add_flag("--estimate-c,!--no-estimate-c", exp.estimate_c, "run model selection per instance");
    exp_cmd->add_option("--jobs", exp.jobs, "worker threads")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--out", exp_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*detect_cmd) return run_detect(graph_path, solver, format, out_dir);
        if (*sweep_cmd) return run_sweep(sweep_graph, sweep_solver, c_min, c_max, sweep_format, sweep_out);
        if (*gen_cmd) return run_generate(gen, gen_out);
        if (*eval_cmd) return run_evaluate(truth_path, found_path, mode, part, eval_out);
        if (*entropy_cmd) return run_entropy(entropy_cover, entropy_out);
        if (*exp_cmd) return run_experiment(exp, exp_out);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const wsbmf::SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 3;
    } catch (const wsbmf::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
