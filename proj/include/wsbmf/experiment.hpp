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

#ifndef WSBMF_EXPERIMENT_HPP
#define WSBMF_EXPERIMENT_HPP

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "wsbmf/core.hpp"
#include "wsbmf/factorize.hpp"
#include "wsbmf/metrics.hpp"
#include "wsbmf/model_selection.hpp"
#include "wsbmf/synth.hpp"

namespace wsbmf {

struct ExperimentConfig {
    std::vector<double> zout_grid = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<Index> t_grid = {0, 2, 4, 6, 8};
    Index reps = 10;          // seeds per grid point
    Index c = 4;              // planted community count
    Index restarts = 10;
    double gamma = 1.0;
    double prior_fraction = 0.05;
    bool estimate_c = true;   // run model selection per instance
    Index est_c_min = 2;
    Index est_c_max = 8;
    Index jobs = 1;
    std::uint64_t seed = 0;

    void validate() const {
        if (reps < 1) throw InputError("need at least one repetition");
        if (jobs < 1) throw InputError("need at least one worker");
        if (prior_fraction < 0.0 || prior_fraction > 1.0) throw InputError("prior fraction must lie in [0, 1]");
        if (estimate_c && (est_c_min < 1 || est_c_min > est_c_max)) throw InputError("bad estimate range");
    }
};

// One grid point of the mixing experiment; vectors hold one entry per rep.
struct MixingPoint {
    double z_out = 0.0;
    std::vector<double> nmi_all;             // plain solver, all nodes
    std::vector<double> nmi_delta;           // plain solver, delta side only
    std::vector<double> priors_nmi_all;      // with sampled prior constraints
    std::vector<double> priors_nmi_delta;
    std::vector<double> baseline_nmi_delta;  // one-mode projection baseline
    std::vector<Index> estimated_c;          // empty when estimation is off
};

struct MixingResult {
    ExperimentConfig config;
    std::vector<MixingPoint> points;
};

// One grid point of the overlap experiment.
struct OverlapPoint {
    Index t = 0;
    std::vector<double> gnmi_all;
    std::vector<double> priors_gnmi_all;
    std::vector<double> baseline_gnmi_delta;
    std::vector<Index> duals_planted;    // dual-membership delta nodes in truth
    std::vector<Index> duals_recovered;  // of those, found with exactly 2 communities
    std::vector<Index> estimated_c;
};

struct OverlapResult {
    ExperimentConfig config;
    std::vector<OverlapPoint> points;
};

inline double mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

namespace detail {

// Seed streams per role, chosen once so grid edits never reshuffle runs.
inline constexpr std::uint64_t kStreamGraph = 1;
inline constexpr std::uint64_t kStreamPriors = 2;
inline constexpr std::uint64_t kStreamSolve = 3;
inline constexpr std::uint64_t kStreamBaseline = 4;
inline constexpr std::uint64_t kStreamEstimate = 5;

inline std::uint64_t point_seed(std::uint64_t master, std::uint64_t stream, double value, Index rep) {
    const auto scaled = static_cast<std::uint64_t>(std::llround(value * 1000.0));
    return mix_seed(mix_seed(master, stream), scaled, static_cast<std::uint64_t>(rep));
}

// Fixed-size worker pool over an index range; the first thrown exception
// is re-thrown on the caller thread after all workers stop.
template <typename Task>
void run_indexed(Index jobs, Index count, Task&& task) {
    if (jobs <= 1) {
        for (Index i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<Index> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (Index i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> workers;
    const Index spawn = std::min(jobs, count);
    workers.reserve(spawn);
    for (Index w = 0; w < spawn; ++w) workers.emplace_back(worker);
    for (auto& th : workers) th.join();
    if (error) std::rethrow_exception(error);
}

inline std::vector<Index> slice(const std::vector<Index>& labels, Index count) {
    return std::vector<Index>(labels.begin(), labels.begin() + count);
}

}  // namespace detail

// Mixing sweep on the four-block planted family: per z_out and rep, score
// the solver with and without sampled prior constraints (sharing one
// solver seed so the comparison is paired) and the one-mode projection
// baseline, which only sees the delta side. Scores are hardened-label NMI
// against the planted truth.
inline MixingResult run_mixing_experiment(const ExperimentConfig& config) {
    config.validate();
    MixingResult result;
    result.config = config;
    result.points.resize(config.zout_grid.size());
    for (std::size_t p = 0; p < config.zout_grid.size(); ++p) {
        result.points[p].z_out = config.zout_grid[p];
        result.points[p].nmi_all.resize(config.reps);
        result.points[p].nmi_delta.resize(config.reps);
        result.points[p].priors_nmi_all.resize(config.reps);
        result.points[p].priors_nmi_delta.resize(config.reps);
        result.points[p].baseline_nmi_delta.resize(config.reps);
        if (config.estimate_c) result.points[p].estimated_c.resize(config.reps);
    }

    const Index tasks = static_cast<Index>(config.zout_grid.size()) * config.reps;
    detail::run_indexed(config.jobs, tasks, [&](Index task) {
        const std::size_t p = static_cast<std::size_t>(task) / config.reps;
        const Index rep = task % config.reps;
        MixingPoint& point = result.points[p];
        const double z = point.z_out;

        const Generated bench =
            gen_nonoverlapping(z, detail::point_seed(config.seed, detail::kStreamGraph, z, rep));
        std::vector<Index> truth_all(bench.truth.n());
        for (Index v = 0; v < bench.truth.n(); ++v) truth_all[v] = bench.truth.communities_of(v).front();
        const Index nd = bench.graph.n_delta();
        const std::vector<Index> truth_delta = detail::slice(truth_all, nd);

        SolverConfig solver;
        solver.c = config.c;
        solver.gamma = config.gamma;
        solver.restarts = config.restarts;
        solver.seed = detail::point_seed(config.seed, detail::kStreamSolve, z, rep);

        const DetectionResult plain = detect(bench.graph, solver);
        const std::vector<Index> found = argmax_labels(plain.continuous);
        point.nmi_all[rep] = nmi(truth_all, found);
        point.nmi_delta[rep] = nmi(truth_delta, detail::slice(found, nd));

        const PriorConstraints priors =
            sample_priors(bench.truth, bench.graph, config.prior_fraction, config.gamma,
                          detail::point_seed(config.seed, detail::kStreamPriors, z, rep));
        const DetectionResult guided = detect(bench.graph, &priors, solver);
        const std::vector<Index> found_guided = argmax_labels(guided.continuous);
        point.priors_nmi_all[rep] = nmi(truth_all, found_guided);
        point.priors_nmi_delta[rep] = nmi(truth_delta, detail::slice(found_guided, nd));

        SolverConfig base_solver = solver;
        base_solver.seed = detail::point_seed(config.seed, detail::kStreamBaseline, z, rep);
        const UnipartiteGraph projected = project_unipartite(bench.graph, Part::Delta);
        const DetectionResult baseline = detect_unipartite(projected, base_solver);
        point.baseline_nmi_delta[rep] = nmi(truth_delta, argmax_labels(baseline.continuous));

        if (config.estimate_c) {
            SolverConfig est = solver;
            est.seed = detail::point_seed(config.seed, detail::kStreamEstimate, z, rep);
            point.estimated_c[rep] = select_c(bench.graph, est, config.est_c_min, config.est_c_max).best_c;
        }
    });
    return result;
}

// Overlap sweep on the dual-membership family, scored with the
// overlapping-cover mutual information; also counts how many planted dual
// nodes come back with exactly two communities.
inline OverlapResult run_overlap_experiment(const ExperimentConfig& config) {
    config.validate();
    OverlapResult result;
    result.config = config;
    result.points.resize(config.t_grid.size());
    for (std::size_t p = 0; p < config.t_grid.size(); ++p) {
        result.points[p].t = config.t_grid[p];
        result.points[p].gnmi_all.resize(config.reps);
        result.points[p].priors_gnmi_all.resize(config.reps);
        result.points[p].baseline_gnmi_delta.resize(config.reps);
        result.points[p].duals_planted.resize(config.reps);
        result.points[p].duals_recovered.resize(config.reps);
        if (config.estimate_c) result.points[p].estimated_c.resize(config.reps);
    }

    const Index tasks = static_cast<Index>(config.t_grid.size()) * config.reps;
    detail::run_indexed(config.jobs, tasks, [&](Index task) {
        const std::size_t p = static_cast<std::size_t>(task) / config.reps;
        const Index rep = task % config.reps;
        OverlapPoint& point = result.points[p];
        const double t = static_cast<double>(point.t);

        const Generated bench =
            gen_overlapping(point.t, detail::point_seed(config.seed, detail::kStreamGraph, t, rep));
        const Index nd = bench.graph.n_delta();

        SolverConfig solver;
        solver.c = config.c;
        solver.gamma = config.gamma;
        solver.restarts = config.restarts;
        solver.seed = detail::point_seed(config.seed, detail::kStreamSolve, t, rep);

        const DetectionResult plain = detect(bench.graph, solver);
        const CommunityCover found = plain.cover();
        point.gnmi_all[rep] = gnmi(bench.truth, found);

        Index planted = 0, recovered = 0;
        for (Index v = 0; v < nd; ++v) {
            if (bench.truth.communities_of(v).size() != 2) continue;
            ++planted;
            if (found.communities_of(v).size() == 2) ++recovered;
        }
        point.duals_planted[rep] = planted;
        point.duals_recovered[rep] = recovered;

        const PriorConstraints priors =
            sample_priors(bench.truth, bench.graph, config.prior_fraction, config.gamma,
                          detail::point_seed(config.seed, detail::kStreamPriors, t, rep));
        const DetectionResult guided = detect(bench.graph, &priors, solver);
        point.priors_gnmi_all[rep] = gnmi(bench.truth, guided.cover());

        SolverConfig base_solver = solver;
        base_solver.seed = detail::point_seed(config.seed, detail::kStreamBaseline, t, rep);
        const UnipartiteGraph projected = project_unipartite(bench.graph, Part::Delta);
        const DetectionResult baseline = detect_unipartite(projected, base_solver);
        point.baseline_gnmi_delta[rep] =
            gnmi(bench.truth.restricted(0, nd), baseline.cover());

        if (config.estimate_c) {
            SolverConfig est = solver;
            est.seed = detail::point_seed(config.seed, detail::kStreamEstimate, t, rep);
            point.estimated_c[rep] = select_c(bench.graph, est, config.est_c_min, config.est_c_max).best_c;
        }
    });
    return result;
}

}  // namespace wsbmf

#endif  // WSBMF_EXPERIMENT_HPP
