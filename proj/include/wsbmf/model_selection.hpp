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

#ifndef WSBMF_MODEL_SELECTION_HPP
#define WSBMF_MODEL_SELECTION_HPP

#include <utility>
#include <vector>

#include "wsbmf/core.hpp"
#include "wsbmf/factorize.hpp"

namespace wsbmf {

struct CandidateScore {
    Index c = 0;
    bool ran = false;  // at least one successful, non-degenerate restart
    Index successes = 0;
    double mean_density = 0.0;  // mean over successful restarts
    double best_density = 0.0;  // density of the selected restart
    double objective = 0.0;
    std::string failure;
};

struct ModelSelection {
    std::vector<CandidateScore> candidates;
    Index best_c = 0;
    DetectionResult best;  // the detection result at best_c
};

// Scans candidate community counts and keeps the one whose restarts reach
// the highest mean partition density; ties go to the smaller count. Each
// candidate derives its own seed from the base seed and c, so widening the
// range never changes earlier candidates.
inline ModelSelection select_c(const BipartiteGraph& graph, const PriorConstraints* priors,
                               const SolverConfig& base, Index c_min, Index c_max) {
    if (c_min < 1 || c_min > c_max) throw InputError("need 1 <= c_min <= c_max");
    ModelSelection selection;
    bool have = false;
    for (Index c = c_min; c <= c_max; ++c) {
        SolverConfig config = base;
        config.c = c;
        config.seed = mix_seed(base.seed, static_cast<std::uint64_t>(c));
        CandidateScore score;
        score.c = c;
        try {
            DetectionResult result = detect(graph, priors, config);
            score.successes = result.successes;
            score.mean_density = result.mean_density;
            score.best_density = result.density;
            score.objective = result.objective;
            score.ran = !result.degenerate && result.successes > 0;
            if (score.ran && (!have || score.mean_density > selection.best.mean_density)) {
                selection.best_c = c;
                selection.best = std::move(result);
                have = true;
            }
        } catch (const SolverError& e) {
            score.failure = e.what();
        }
        selection.candidates.push_back(std::move(score));
    }
    if (!have) throw SolverError("no candidate community count produced a usable factorization");
    return selection;
}

inline ModelSelection select_c(const BipartiteGraph& graph, const SolverConfig& base, Index c_min,
                               Index c_max) {
    return select_c(graph, nullptr, base, c_min, c_max);
}

}  // namespace wsbmf

#endif  // WSBMF_MODEL_SELECTION_HPP
