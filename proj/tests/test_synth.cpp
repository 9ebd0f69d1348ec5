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

#include <catch2/catch_amalgamated.hpp>

#include "wsbmf/wsbmf.hpp"

namespace {

using wsbmf::BipartiteGraph;
using wsbmf::Index;

Index count_within(const BipartiteGraph& g, Index block_size) {
    Index within = 0;
    for (const auto& [d, gm] : g.edges())
        if (d / block_size == gm / block_size) ++within;
    return within;
}

}  // namespace

TEST_CASE("classic benchmark validates its parameters") {
    REQUIRE_THROWS_AS(wsbmf::gen_classic(0, 4, 0.5, 0.0, 1), wsbmf::InputError);
    REQUIRE_THROWS_AS(wsbmf::gen_classic(2, 0, 0.5, 0.0, 1), wsbmf::InputError);
    REQUIRE_THROWS_AS(wsbmf::gen_classic(2, 4, 0.0, 0.0, 1), wsbmf::InputError);
    REQUIRE_THROWS_AS(wsbmf::gen_classic(2, 4, 1.1, 0.0, 1), wsbmf::InputError);
    REQUIRE_THROWS_AS(wsbmf::gen_classic(2, 4, 0.5, -0.1, 1), wsbmf::InputError);
    REQUIRE_THROWS_AS(wsbmf::gen_classic(2, 4, 0.5, 1.1, 1), wsbmf::InputError);
}

TEST_CASE("classic benchmark with alpha 0 stays block diagonal") {
    const auto gen = wsbmf::gen_classic(3, 5, 0.8, 0.0, 7);
    REQUIRE(gen.graph.n_delta() == 15);
    REQUIRE(gen.graph.n_gamma() == 15);
    REQUIRE(!gen.graph.edges().empty());
    REQUIRE(count_within(gen.graph, 5) == static_cast<Index>(gen.graph.edges().size()));

    REQUIRE(gen.truth.c() == 3);
    REQUIRE(gen.truth.is_hard());
    for (Index v = 0; v < gen.truth.n(); ++v)
        REQUIRE(gen.truth.communities_of(v) == std::vector<Index>{(v % 15) / 5});
}

TEST_CASE("classic benchmark with alpha 1 is a uniform random bigraph") {
    // 100 draws of a 24 x 24 Bernoulli(0.5) cross block: the pooled edge
    // count concentrates around 28800 with sigma 120.
    Index total = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        total += static_cast<Index>(wsbmf::gen_classic(3, 8, 0.5, 1.0, seed).graph.edges().size());
    REQUIRE(std::abs(total - 28800) < 3 * 120);
}

TEST_CASE("classic benchmark edge rates track p_in and alpha") {
    // 4 communities of 10 + 10 at p_in 0.9, alpha 0.1. Within-block cells
    // per graph: 400 at rate 0.9; cross cells: 1200 at rate 0.09.
    Index within = 0, cross = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto gen = wsbmf::gen_classic(4, 10, 0.9, 0.1, seed);
        const Index w = count_within(gen.graph, 10);
        within += w;
        cross += static_cast<Index>(gen.graph.edges().size()) - w;
    }
    REQUIRE(std::abs(within - 18000) < 3 * 43);
    REQUIRE(std::abs(cross - 5400) < 3 * 71);
}

TEST_CASE("classic benchmark is deterministic per seed") {
    const auto a = wsbmf::gen_classic(3, 8, 0.5, 0.3, 11);
    const auto b = wsbmf::gen_classic(3, 8, 0.5, 0.3, 11);
    const auto c = wsbmf::gen_classic(3, 8, 0.5, 0.3, 12);
    REQUIRE(a.graph.edges() == b.graph.edges());
    REQUIRE(a.graph.edges() != c.graph.edges());
}

TEST_CASE("mixing benchmark validates and spans its z_out range") {
    REQUIRE_THROWS_AS(wsbmf::gen_nonoverlapping(-0.1, 1), wsbmf::InputError);
    REQUIRE_THROWS_AS(wsbmf::gen_nonoverlapping(16.1, 1), wsbmf::InputError);

    const auto pure = wsbmf::gen_nonoverlapping(0.0, 5);
    REQUIRE(pure.graph.n_delta() == 128);
    REQUIRE(pure.graph.n_gamma() == 128);
    REQUIRE(pure.truth.c() == 4);
    REQUIRE(pure.truth.is_hard());
    REQUIRE(count_within(pure.graph, 32) == static_cast<Index>(pure.graph.edges().size()));
    // 4096 within cells at rate 0.5.
    REQUIRE(std::abs(static_cast<Index>(pure.graph.edges().size()) - 2048) < 6 * 32);

    const auto inverted = wsbmf::gen_nonoverlapping(16.0, 5);
    REQUIRE(count_within(inverted.graph, 32) == 0);
}

TEST_CASE("mixing benchmark holds mean degree near 16") {
    // z_out 8: expected 2048 edges per graph, sigma about 41.
    Index total = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        total += static_cast<Index>(wsbmf::gen_nonoverlapping(8.0, seed).graph.edges().size());
    REQUIRE(std::abs(total - 20480) < 3 * 131);
}

TEST_CASE("overlap benchmark validates and plants 3t dual nodes") {
    REQUIRE_THROWS_AS(wsbmf::gen_overlapping(-1, 1), wsbmf::InputError);
    REQUIRE_THROWS_AS(wsbmf::gen_overlapping(33, 1), wsbmf::InputError);
    REQUIRE_THROWS_AS(wsbmf::gen_overlapping(4, 1, 33.0), wsbmf::InputError);
    REQUIRE_THROWS_AS(wsbmf::gen_overlapping(4, 1, 10.0, 97.0), wsbmf::InputError);

    const auto none = wsbmf::gen_overlapping(0, 3);
    REQUIRE(none.truth.is_hard());
    REQUIRE(none.graph.n() == 256);

    const auto gen = wsbmf::gen_overlapping(8, 3);
    REQUIRE(gen.graph.n() == 256);
    Index duals = 0;
    for (Index d = 0; d < 128; ++d) {
        const auto& comms = gen.truth.communities_of(d);
        if (comms.size() == 2) {
            ++duals;
            // Dual nodes sit at the tail of blocks 0..2 and join the next.
            REQUIRE(d / 32 < 3);
            REQUIRE(d % 32 >= 24);
            REQUIRE(comms == std::vector<Index>{d / 32, d / 32 + 1});
        } else {
            REQUIRE(comms == std::vector<Index>{d / 32});
        }
    }
    REQUIRE(duals == 24);
    for (Index g = 128; g < 256; ++g) REQUIRE(gen.truth.communities_of(g).size() == 1);

    // Delta-side community sizes 32, 40, 40, 40.
    std::vector<Index> delta_size(4, 0);
    for (Index k = 0; k < 4; ++k)
        for (Index v : gen.truth.members(k))
            if (v < 128) ++delta_size[k];
    REQUIRE(delta_size == std::vector<Index>{32, 40, 40, 40});

    const auto full = wsbmf::gen_overlapping(32, 3);
    Index full_duals = 0;
    for (Index d = 0; d < 128; ++d)
        if (full.truth.communities_of(d).size() == 2) ++full_duals;
    REQUIRE(full_duals == 96);
}

TEST_CASE("overlap benchmark keeps single-membership degree near z_in + z_out") {
    // Block 3 nodes are never dual: expected degree 32 * (10/32) + 96 * (6/96).
    double total = 0.0;
    Index count = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto gen = wsbmf::gen_overlapping(8, seed);
        std::vector<Index> degree(128, 0);
        for (const auto& [d, g] : gen.graph.edges()) ++degree[d];
        for (Index d = 96; d < 128; ++d) {
            total += degree[d];
            ++count;
        }
    }
    // 320 nodes, per-node variance about 15, so the mean has sigma ~ 0.22.
    REQUIRE(std::abs(total / count - 16.0) < 3 * 0.22);
}

TEST_CASE("prior sampling validates, counts, and labels by co-membership") {
    const auto gen = wsbmf::gen_classic(2, 3, 1.0, 0.0, 2);
    REQUIRE_THROWS_AS(wsbmf::sample_priors(gen.truth, gen.graph, -0.1, 1.0, 1), wsbmf::InputError);
    REQUIRE_THROWS_AS(wsbmf::sample_priors(gen.truth, gen.graph, 1.1, 1.0, 1), wsbmf::InputError);
    const auto other = wsbmf::gen_classic(2, 4, 1.0, 0.0, 2);
    REQUIRE_THROWS_AS(wsbmf::sample_priors(other.truth, gen.graph, 0.5, 1.0, 1), wsbmf::InputError);

    REQUIRE(wsbmf::sample_priors(gen.truth, gen.graph, 0.0, 1.0, 1).empty());

    // All 15 Delta pairs: 6 within-block, 9 across.
    const auto all = wsbmf::sample_priors(gen.truth, gen.graph, 1.0, 2.5, 1);
    REQUIRE(all.size() == 15);
    REQUIRE(all.existence().size() == 6);
    REQUIRE(all.absence().size() == 9);
    REQUIRE(all.gamma() == 2.5);
    for (const auto& [u, v] : all.existence()) {
        REQUIRE(v < gen.graph.n_delta());
        REQUIRE(gen.truth.communities_of(u) == gen.truth.communities_of(v));
    }
    for (const auto& [u, v] : all.absence())
        REQUIRE(gen.truth.communities_of(u) != gen.truth.communities_of(v));

    // Gamma side pairs live in the Gamma index range.
    const auto gside = wsbmf::sample_priors(gen.truth, gen.graph, 1.0, 1.0, 1, wsbmf::Part::Gamma);
    REQUIRE(gside.size() == 15);
    for (const auto& [u, v] : gside.existence()) REQUIRE(u >= gen.graph.n_delta());
    for (const auto& [u, v] : gside.absence()) REQUIRE(u >= gen.graph.n_delta());
}

TEST_CASE("prior sampling respects planted overlap") {
    const auto gen = wsbmf::gen_overlapping(8, 6);
    const auto priors = wsbmf::sample_priors(gen.truth, gen.graph, 1.0, 1.0, 4);
    REQUIRE(priors.size() == 128 * 127 / 2);
    for (const auto& [u, v] : priors.existence()) {
        const auto& cu = gen.truth.communities_of(u);
        const auto& cv = gen.truth.communities_of(v);
        std::vector<Index> shared;
        std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(),
                              std::back_inserter(shared));
        REQUIRE(!shared.empty());
    }
}

TEST_CASE("prior sampling takes the documented fraction and is deterministic") {
    const auto gen = wsbmf::gen_nonoverlapping(3.0, 1);
    const auto p1 = wsbmf::sample_priors(gen.truth, gen.graph, 0.05, 1.0, 9);
    const auto p2 = wsbmf::sample_priors(gen.truth, gen.graph, 0.05, 1.0, 9);
    // floor(0.05 * 128 * 127 / 2) pairs.
    REQUIRE(p1.size() == 406);
    REQUIRE(p1.existence() == p2.existence());
    REQUIRE(p1.absence() == p2.absence());

    const auto p3 = wsbmf::sample_priors(gen.truth, gen.graph, 0.05, 1.0, 10);
    REQUIRE(p1.existence() != p3.existence());
}
