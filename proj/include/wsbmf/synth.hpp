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

#ifndef WSBMF_SYNTH_HPP
#define WSBMF_SYNTH_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "wsbmf/core.hpp"
#include "wsbmf/cover.hpp"
#include "wsbmf/graph.hpp"

namespace wsbmf {

struct Generated {
    BipartiteGraph graph;
    CommunityCover truth;
};

namespace detail {

// Bernoulli cross-part edges with a per-pair probability callback.
template <typename Prob>
std::vector<BipartiteGraph::Edge> bernoulli_edges(Index n_delta, Index n_gamma, Rng& rng,
                                                  Prob&& probability) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<BipartiteGraph::Edge> edges;
    for (Index d = 0; d < n_delta; ++d)
        for (Index g = 0; g < n_gamma; ++g)
            if (unit(rng) < probability(d, g)) edges.emplace_back(d, g);
    return edges;
}

}  // namespace detail

// Planted benchmark with equal blocks on both sides: cross-part pairs
// inside a community connect with probability p_in, pairs across
// communities with alpha * p_in.
inline Generated gen_classic(Index communities, Index per_side, double p_in, double alpha,
                             std::uint64_t seed) {
    if (communities < 1 || per_side < 1) throw InputError("need at least one community and one node per side");
    if (p_in <= 0.0 || p_in > 1.0) throw InputError("p_in must lie in (0, 1]");
    if (alpha < 0.0 || alpha > 1.0) throw InputError("alpha must lie in [0, 1]");
    const Index n_side = communities * per_side;
    Rng rng = make_rng(seed);
    auto edges = detail::bernoulli_edges(n_side, n_side, rng, [&](Index d, Index g) {
        return d / per_side == g / per_side ? p_in : alpha * p_in;
    });
    std::vector<std::vector<Index>> assign(2 * n_side);
    for (Index d = 0; d < n_side; ++d) assign[d] = {d / per_side};
    for (Index g = 0; g < n_side; ++g) assign[n_side + g] = {g / per_side};
    return {BipartiteGraph(n_side, n_side, std::move(edges)),
            CommunityCover(std::move(assign), communities)};
}

// Four planted communities of 32 + 32 nodes; every node averages 16 edges
// split as z_in = 16 - z_out inside its community (rate z_in / 32) and
// z_out outside (rate z_out / 96).
inline Generated gen_nonoverlapping(double z_out, std::uint64_t seed) {
    if (z_out < 0.0 || z_out > 16.0) throw InputError("z_out must lie in [0, 16]");
    constexpr Index kBlocks = 4, kSize = 32;
    const double p_in = (16.0 - z_out) / 32.0;
    const double p_out = z_out / 96.0;
    Rng rng = make_rng(seed);
    auto edges = detail::bernoulli_edges(kBlocks * kSize, kBlocks * kSize, rng, [&](Index d, Index g) {
        return d / kSize == g / kSize ? p_in : p_out;
    });
    std::vector<std::vector<Index>> assign(2 * kBlocks * kSize);
    for (Index v = 0; v < kBlocks * kSize; ++v) {
        assign[v] = {v / kSize};
        assign[kBlocks * kSize + v] = {v / kSize};
    }
    return {BipartiteGraph(kBlocks * kSize, kBlocks * kSize, std::move(edges)),
            CommunityCover(std::move(assign), kBlocks)};
}

// Overlapping variant: the last t Delta nodes of blocks 0..2 additionally
// join the next community, giving 3t dual-membership Delta nodes and
// community sizes 32, 32+t, 32+t, 32+t on the Delta side. Gamma
// memberships stay unique. Each membership draws own-community edges at
// rate z_in / 32; pairs with no shared community connect at z_out / 96.
inline Generated gen_overlapping(Index t, std::uint64_t seed, double z_in = 10.0,
                                 double z_out = 6.0) {
    if (t < 0 || t > 32) throw InputError("t must lie in [0, 32]");
    if (z_in < 0.0 || z_in > 32.0) throw InputError("z_in must lie in [0, 32]");
    if (z_out < 0.0 || z_out > 96.0) throw InputError("z_out must lie in [0, 96]");
    constexpr Index kBlocks = 4, kSize = 32;
    const Index n_side = kBlocks * kSize;
    std::vector<std::vector<Index>> delta_comms(n_side);
    for (Index d = 0; d < n_side; ++d) {
        const Index block = d / kSize;
        delta_comms[d] = {block};
        if (block + 1 < kBlocks && d % kSize >= kSize - t) delta_comms[d].push_back(block + 1);
    }
    const double p_in = z_in / 32.0;
    const double p_out = z_out / 96.0;
    Rng rng = make_rng(seed);
    auto edges = detail::bernoulli_edges(n_side, n_side, rng, [&](Index d, Index g) {
        const Index gb = g / kSize;
        const auto& comms = delta_comms[d];
        return std::find(comms.begin(), comms.end(), gb) != comms.end() ? p_in : p_out;
    });
    std::vector<std::vector<Index>> assign(2 * n_side);
    for (Index d = 0; d < n_side; ++d) assign[d] = delta_comms[d];
    for (Index g = 0; g < n_side; ++g) assign[n_side + g] = {g / kSize};
    return {BipartiteGraph(n_side, n_side, std::move(edges)),
            CommunityCover(std::move(assign), kBlocks)};
}

// Samples floor(fraction * pairs) distinct same-part pairs uniformly
// without replacement and labels each by the ground truth: pairs sharing a
// community become existence constraints, the rest absence constraints.
inline PriorConstraints sample_priors(const CommunityCover& truth, const BipartiteGraph& graph,
                                      double fraction, double gamma, std::uint64_t seed,
                                      Part side = Part::Delta) {
    if (fraction < 0.0 || fraction > 1.0) throw InputError("fraction must lie in [0, 1]");
    if (truth.n() != graph.n()) throw InputError("truth cover does not match graph");
    const Index n_side = side == Part::Delta ? graph.n_delta() : graph.n_gamma();
    const Index offset = side == Part::Delta ? 0 : graph.n_delta();
    std::vector<PriorConstraints::Pair> pool;
    pool.reserve(static_cast<std::size_t>(n_side) * (n_side - 1) / 2);
    for (Index a = 0; a < n_side; ++a)
        for (Index b = a + 1; b < n_side; ++b) pool.emplace_back(offset + a, offset + b);
    const std::size_t want = static_cast<std::size_t>(fraction * static_cast<double>(pool.size()));

    Rng rng = make_rng(mix_seed(seed, side == Part::Delta ? 0 : 1));
    std::vector<PriorConstraints::Pair> existence, absence;
    for (std::size_t i = 0; i < want; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
        std::swap(pool[i], pool[pick(rng)]);
        const auto& [u, v] = pool[i];
        const auto& cu = truth.communities_of(u);
        const auto& cv = truth.communities_of(v);
        std::vector<Index> shared;
        std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(shared));
        (shared.empty() ? absence : existence).push_back(pool[i]);
    }
    return PriorConstraints(std::move(existence), std::move(absence), gamma);
}

}  // namespace wsbmf

#endif  // WSBMF_SYNTH_HPP
