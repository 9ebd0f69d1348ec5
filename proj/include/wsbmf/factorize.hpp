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

#ifndef WSBMF_FACTORIZE_HPP
#define WSBMF_FACTORIZE_HPP

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Cholesky>

#include "wsbmf/core.hpp"
#include "wsbmf/cover.hpp"
#include "wsbmf/density.hpp"
#include "wsbmf/graph.hpp"

namespace wsbmf {

struct SolverConfig {
    Index c = 2;                // number of communities
    double gamma = 1.0;         // weight of observed pairs
    Index als_iters = 10;       // alternating least squares warmup rounds
    Index mu_iters = 100;       // multiplicative update rounds
    Index threshold_grid = 101; // candidate thresholds over [0, max(U)]
    Index restarts = 10;
    Index max_reseeds = 8;      // extra draws when a start degenerates
    std::uint64_t seed = 0;
    double epsilon = 1e-12;     // multiplicative update denominator guard
    double als_ridge = 1e-10;   // Gram regularization when singular

    void validate() const {
        if (c < 1) throw InputError("community count must be at least 1");
        if (gamma < 0) throw InputError("gamma must be nonnegative");
        if (als_iters < 0 || mu_iters < 0) throw InputError("iteration counts must be nonnegative");
        if (threshold_grid < 2) throw InputError("threshold grid needs at least 2 points");
        if (restarts < 1) throw InputError("need at least one restart");
        if (max_reseeds < 0) throw InputError("max_reseeds must be nonnegative");
        if (epsilon <= 0) throw InputError("epsilon must be positive");
    }
};

struct ObjectiveTerms {
    double mismatch = 0.0;  // induced 1-norm of L .* (A - U U^T)
    Index outliers = 0;     // rows of U with no membership
    double total = 0.0;
};

// Objective for a binary membership matrix: the largest column sum of
// |L .* (A - U U^T)| plus one unit per unassigned node.
inline ObjectiveTerms objective_terms(const Matrix& a, const Matrix& l, const Matrix& u) {
    ObjectiveTerms terms;
    const Matrix residual = l.cwiseProduct(a - u * u.transpose());
    terms.mismatch = residual.cwiseAbs().colwise().sum().maxCoeff();
    for (Index i = 0; i < u.rows(); ++i)
        if (u.row(i).sum() <= 0.0) ++terms.outliers;
    terms.total = terms.mismatch + static_cast<double>(terms.outliers);
    return terms;
}

inline double objective_l1(const Matrix& a, const Matrix& l, const Matrix& u) {
    return objective_terms(a, l, u).total;
}

namespace detail {

// Solves G X = R for X with G symmetric positive semidefinite, adding a
// small ridge when the factorization reports failure.
inline Matrix solve_gram(Matrix g, const Matrix& r, double ridge) {
    Eigen::LLT<Matrix> llt(g);
    if (llt.info() == Eigen::Success) return llt.solve(r);
    const double scale = 1.0 + g.trace();
    for (int grow = 0; grow < 3; ++grow) {
        g.diagonal().array() += ridge * scale;
        llt.compute(g);
        if (llt.info() == Eigen::Success) return llt.solve(r);
        ridge *= 1e3;
    }
    throw SolverError("least squares step failed on a singular Gram matrix");
}

}  // namespace detail

// Alternating nonnegative least squares on the cross-part block B: draws
// U1 uniformly from [0,1], then alternates exact least squares solves for
// U2 and U1 with negative entries clipped to zero.
inline std::pair<Matrix, Matrix> als_init(const Matrix& b, Index c, Index iters, Rng& rng,
                                          double ridge = 1e-10) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix u1(b.rows(), c);
    for (Index i = 0; i < u1.rows(); ++i)
        for (Index k = 0; k < c; ++k) u1(i, k) = unit(rng);
    Matrix u2(b.cols(), c);
    for (Index t = 0; t < iters; ++t) {
        u2 = detail::solve_gram(u1.transpose() * u1, u1.transpose() * b, ridge).transpose();
        u2 = u2.cwiseMax(0.0);
        u1 = detail::solve_gram(u2.transpose() * u2, u2.transpose() * b.transpose(), ridge).transpose();
        u1 = u1.cwiseMax(0.0);
    }
    return {std::move(u1), std::move(u2)};
}

// Rescales paired factors so both attain the same column maxima while
// keeping the product U1 U2^T exactly unchanged: column j of U1 is scaled
// by sqrt(d2_j / d1_j) and column j of U2 by its inverse, where d1, d2 are
// the per-column maxima. Throws when a column carries no mass.
inline void normalize_factors(Matrix& u1, Matrix& u2) {
    for (Index k = 0; k < u1.cols(); ++k) {
        const double d1 = u1.col(k).maxCoeff();
        const double d2 = u2.col(k).maxCoeff();
        if (d1 <= 0.0 || d2 <= 0.0) throw DegenerateColumnError(k);
        const double scale = std::sqrt(d2 / d1);
        u1.col(k) *= scale;
        u2.col(k) /= scale;
    }
}

// Multiplicative updates for the weighted symmetric factorization:
//   U <- U .* [(L .* A) U] ./ [(L .* (U U^T)) U + eps]
// followed by row normalization to unit sum. Entries stay nonnegative;
// a row losing all mass aborts the run.
inline Matrix wsnmf_updates(const Matrix& a, const Matrix& l, Matrix u, Index iters,
                            double eps = 1e-12) {
    const Matrix la = l.cwiseProduct(a);
    for (Index t = 0; t < iters; ++t) {
        const Matrix numer = la * u;
        const Matrix denom = ((l.cwiseProduct(u * u.transpose()) * u).array() + eps).matrix();
        u = u.cwiseProduct(numer.cwiseQuotient(denom));
        for (Index i = 0; i < u.rows(); ++i) {
            const double s = u.row(i).sum();
            if (s <= 0.0 || !std::isfinite(s)) throw ZeroRowError(i);
            u.row(i) /= s;
        }
    }
    return u;
}

struct BinaryMembership {
    Matrix values;           // n x c binary
    double threshold = 0.0;  // winning cut
    double objective = 0.0;
};

// Scans a uniform grid of thresholds over [0, max(U)], binarizes U by
// strict comparison at each, and keeps the cut with the lowest objective;
// ties go to the smaller threshold.
inline BinaryMembership threshold_search(const Matrix& a, const Matrix& l, const Matrix& u,
                                         Index grid = 101) {
    if (grid < 2) throw InputError("threshold grid needs at least 2 points");
    const double top = u.maxCoeff();
    BinaryMembership best;
    bool have = false;
    for (Index k = 0; k < grid; ++k) {
        const double cut = top * static_cast<double>(k) / static_cast<double>(grid - 1);
        const Matrix candidate = (u.array() > cut).cast<double>().matrix();
        const double objective = objective_l1(a, l, candidate);
        if (!have || objective < best.objective) {
            best.values = candidate;
            best.threshold = cut;
            best.objective = objective;
            have = true;
        }
        if (top == 0.0) break;
    }
    return best;
}

struct RestartInfo {
    Index restart = 0;
    std::uint64_t seed = 0;
    bool success = false;
    Index reseeds = 0;       // extra initializations consumed
    double objective = 0.0;
    double density = 0.0;
    double threshold = 0.0;
    std::string failure;
};

struct DetectionResult {
    Matrix binary;                // n x c, thresholded memberships
    Matrix continuous;            // n x c, row-stochastic memberships
    double threshold = 0.0;
    double objective = 0.0;
    double density = 0.0;         // partition density of the winner
    double mean_density = 0.0;    // mean over successful restarts
    Index selected_restart = -1;
    Index successes = 0;
    bool degenerate = false;      // no observed links; everything is an outlier
    std::vector<RestartInfo> restarts;

    CommunityCover cover() const { return CommunityCover::from_binary(binary); }
};

using InitFn = std::function<Matrix(Rng&)>;
using DensityFn = std::function<double(const Matrix&)>;

// Restart driver shared by the bipartite and unipartite entry points.
// Each restart draws a start from init_fn, refines it, thresholds it, and
// scores it; the winner has the lowest objective, with ties broken by
// higher partition density and then by restart order. Degenerate starts
// are redrawn up to max_reseeds times.
inline DetectionResult solve_masked(const Matrix& a, const Matrix& l, const SolverConfig& config,
                                    const InitFn& init_fn, const DensityFn& density_fn) {
    config.validate();
    if (a.rows() != a.cols() || l.rows() != l.cols() || a.rows() != l.rows())
        throw InputError("adjacency and mask must be square and equal sized");

    constexpr double kTie = 1e-9;
    DetectionResult result;
    double density_sum = 0.0;
    std::string last_failure = "no restarts ran";

    for (Index r = 0; r < config.restarts; ++r) {
        RestartInfo info;
        info.restart = r;
        for (Index attempt = 0; attempt <= config.max_reseeds; ++attempt) {
            info.seed = mix_seed(config.seed, static_cast<std::uint64_t>(r),
                                 static_cast<std::uint64_t>(attempt));
            info.reseeds = attempt;
            try {
                Rng rng = make_rng(info.seed);
                const Matrix u0 = init_fn(rng);
                const Matrix u = wsnmf_updates(a, l, u0, config.mu_iters, config.epsilon);
                BinaryMembership cut = threshold_search(a, l, u, config.threshold_grid);
                info.success = true;
                info.objective = cut.objective;
                info.threshold = cut.threshold;
                info.density = density_fn(cut.values);

                const bool better =
                    result.selected_restart < 0 || info.objective < result.objective - kTie ||
                    (info.objective < result.objective + kTie && info.density > result.density + kTie);
                if (better) {
                    result.binary = std::move(cut.values);
                    result.continuous = u;
                    result.threshold = cut.threshold;
                    result.objective = info.objective;
                    result.density = info.density;
                    result.selected_restart = r;
                }
                density_sum += info.density;
                ++result.successes;
                break;
            } catch (const SolverError& e) {
                info.success = false;
                info.failure = e.what();
                last_failure = e.what();
            }
        }
        result.restarts.push_back(info);
    }

    if (result.successes == 0) {
        if (l.cwiseProduct(a).cwiseAbs().sum() == 0.0) {
            // Nothing observed: report the empty cover rather than failing.
            result.binary = Matrix::Zero(a.rows(), config.c);
            result.continuous = Matrix::Zero(a.rows(), config.c);
            result.objective = objective_l1(a, l, result.binary);
            result.degenerate = true;
            return result;
        }
        throw SolverError("all " + std::to_string(config.restarts) +
                          " restarts failed; last failure: " + last_failure);
    }
    result.mean_density = density_sum / static_cast<double>(result.successes);
    return result;
}

// Bipartite start: warm up both part factors on the cross block, match
// their column scales, and stack them.
inline InitFn bipartite_init(const Matrix& a, Index n_delta, const SolverConfig& config) {
    const Index n_gamma = a.rows() - n_delta;
    const Matrix b = a.topRightCorner(n_delta, n_gamma);
    return [b, n_delta, n_gamma, config](Rng& rng) {
        auto [u1, u2] = als_init(b, config.c, config.als_iters, rng, config.als_ridge);
        normalize_factors(u1, u2);
        Matrix u0(n_delta + n_gamma, config.c);
        u0.topRows(n_delta) = u1;
        u0.bottomRows(n_gamma) = u2;
        return u0;
    };
}

// Unipartite start: the same warmup applied to the square adjacency, with
// the two factor estimates averaged into one symmetric start.
inline InitFn unipartite_init(const Matrix& a, const SolverConfig& config) {
    return [a, config](Rng& rng) {
        auto [u1, u2] = als_init(a, config.c, config.als_iters, rng, config.als_ridge);
        normalize_factors(u1, u2);
        return Matrix(0.5 * (u1 + u2));
    };
}

// Overlapping community detection on a bipartite graph, optionally with
// same-part prior constraints folded into the adjacency and mask.
inline DetectionResult detect(const BipartiteGraph& graph, const PriorConstraints* priors,
                              const SolverConfig& config) {
    config.validate();
    Matrix a = assemble_adjacency(graph);
    WeightMask mask = assemble_weight_mask(graph, config.gamma);
    if (priors && !priors->empty()) {
        auto [a2, l2] = apply_priors(a, mask, *priors, graph.n_delta());
        a = std::move(a2);
        mask = std::move(l2);
    }
    const DensityFn density_fn = [&graph](const Matrix& binary) {
        return partition_density_bipartite(graph, CommunityCover::from_binary(binary));
    };
    return solve_masked(a, mask.entries(), config, bipartite_init(a, graph.n_delta(), config),
                        density_fn);
}

inline DetectionResult detect(const BipartiteGraph& graph, const SolverConfig& config) {
    return detect(graph, nullptr, config);
}

// Unipartite baseline: every off-diagonal pair is observed.
inline DetectionResult detect_unipartite(const UnipartiteGraph& graph, const SolverConfig& config) {
    config.validate();
    const Matrix a = graph.adjacency();
    Matrix l = Matrix::Constant(graph.n(), graph.n(), config.gamma);
    l.diagonal().setZero();
    const DensityFn density_fn = [&graph](const Matrix& binary) {
        return partition_density_unipartite(graph, CommunityCover::from_binary(binary));
    };
    return solve_masked(a, l, config, unipartite_init(a, config), density_fn);
}

}  // namespace wsbmf

#endif  // WSBMF_FACTORIZE_HPP
