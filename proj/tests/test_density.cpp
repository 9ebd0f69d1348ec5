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
using wsbmf::CommunityCover;
using wsbmf::Index;
using wsbmf::Matrix;

// Pairwise re-count of the overlaid projection weight: same-part pairs
// contribute their number of shared neighbors, cross-part pairs contribute
// one per edge.
double brute_force_m(const Matrix& b) {
    double m = 0.0;
    for (Index p = 0; p < b.rows(); ++p)
        for (Index q = p + 1; q < b.rows(); ++q)
            for (Index g = 0; g < b.cols(); ++g) m += b(p, g) * b(q, g);
    for (Index p = 0; p < b.cols(); ++p)
        for (Index q = p + 1; q < b.cols(); ++q)
            for (Index d = 0; d < b.rows(); ++d) m += b(d, p) * b(d, q);
    m += b.sum();
    return m;
}

// Independent evaluation of the bipartite partition density from first
// principles, mirroring the published formula without sharing code paths.
double brute_force_density(const BipartiteGraph& g, const CommunityCover& cover) {
    const Matrix b = g.cross_block();
    std::vector<Index> memberships(cover.n());
    for (Index v = 0; v < cover.n(); ++v)
        memberships[v] = static_cast<Index>(cover.communities_of(v).size());

    double population = cover.outlier_count();
    for (Index k = 0; k < cover.c(); ++k) population += cover.members(k).size();

    double density = 0.0;
    for (Index k = 0; k < cover.c(); ++k) {
        const auto members = cover.members(k);
        if (members.empty()) continue;
        std::vector<Index> ds, gs;
        Index q = 1;
        for (Index v : members) {
            q = std::max(q, memberships[v]);
            if (v < g.n_delta())
                ds.push_back(v);
            else
                gs.push_back(v - g.n_delta());
        }
        if (ds.empty() || gs.empty()) continue;
        Matrix sub(ds.size(), gs.size());
        for (std::size_t r = 0; r < ds.size(); ++r)
            for (std::size_t s = 0; s < gs.size(); ++s) sub(r, s) = b(ds[r], gs[s]);
        const double nd = static_cast<double>(ds.size());
        const double ng = static_cast<double>(gs.size());
        const double m = brute_force_m(sub);
        const double m_max = nd * (nd - 1.0) / 2.0 * ng + ng * (ng - 1.0) / 2.0 * nd + nd * ng;
        const double m_min = (nd - 1.0) + (ng - 1.0) + (nd + ng - 1.0);
        if (m_max == m_min) continue;
        density += (1.0 / q) * (members.size() / population) * (m - m_min) / (m_max - m_min);
    }
    return density;
}

BipartiteGraph two_bicliques22() {
    return BipartiteGraph(4, 4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
}

}  // namespace

TEST_CASE("subnetwork counts on the hand-checked shapes") {
    // Complete biclique 2+2.
    const auto biclique = wsbmf::subnetwork_counts(Matrix::Ones(2, 2));
    REQUIRE(biclique.m == 8.0);
    REQUIRE(biclique.m_max == 8.0);
    REQUIRE(biclique.m_min == 5.0);

    // Perfect matching 2+2.
    const auto matching = wsbmf::subnetwork_counts(Matrix::Identity(2, 2));
    REQUIRE(matching.m == 2.0);
    REQUIRE(matching.m_max == 8.0);
    REQUIRE(matching.m_min == 5.0);

    // Single edge 1+1: all three counts collapse.
    const auto edge = wsbmf::subnetwork_counts(Matrix::Ones(1, 1));
    REQUIRE(edge.m == 1.0);
    REQUIRE(edge.m_max == 1.0);
    REQUIRE(edge.m_min == 1.0);
}

TEST_CASE("subnetwork counts match the pairwise oracle exhaustively") {
    for (Index nd = 1; nd <= 3; ++nd)
        for (Index ng = 1; ng <= 3; ++ng) {
            const Index cells = nd * ng;
            for (Index code = 0; code < (Index{1} << cells); ++code) {
                Matrix b(nd, ng);
                for (Index i = 0; i < cells; ++i) b(i / ng, i % ng) = (code >> i) & 1;
                const auto counts = wsbmf::subnetwork_counts(b);
                REQUIRE(counts.m == brute_force_m(b));
                REQUIRE(counts.m_max ==
                        nd * (nd - 1.0) / 2.0 * ng + ng * (ng - 1.0) / 2.0 * nd + nd * ng);
                REQUIRE(counts.m_min == (nd - 1.0) + (ng - 1.0) + (nd + ng - 1.0));
            }
        }
}

TEST_CASE("a community term is 1 exactly for complete bicliques") {
    for (Index code = 0; code < (1 << 9); ++code) {
        Matrix b(3, 3);
        for (Index i = 0; i < 9; ++i) b(i / 3, i % 3) = (code >> i) & 1;
        const auto counts = wsbmf::subnetwork_counts(b);
        const double term = (counts.m - counts.m_min) / (counts.m_max - counts.m_min);
        if (code == (1 << 9) - 1)
            REQUIRE(term == 1.0);
        else
            REQUIRE(term < 1.0);
    }
}

TEST_CASE("partition density on the hand-checked covers") {
    const BipartiteGraph g = two_bicliques22();

    std::vector<std::vector<Index>> planted(8);
    for (Index d = 0; d < 4; ++d) planted[d] = {d / 2};
    for (Index gm = 0; gm < 4; ++gm) planted[4 + gm] = {gm / 2};
    wsbmf::DensityDiagnostics diag;
    REQUIRE(wsbmf::partition_density_bipartite(g, CommunityCover(planted, 2), &diag) ==
            Catch::Approx(1.0));
    REQUIRE(diag.population == 8);
    REQUIRE(diag.outliers == 0);
    REQUIRE(diag.communities.size() == 2);
    REQUIRE(diag.communities[0].q == 1);
    REQUIRE(diag.warnings.empty());

    // One community holding a perfect matching: negative density.
    const BipartiteGraph match(2, 2, {{0, 0}, {1, 1}});
    const CommunityCover all({{0}, {0}, {0}, {0}}, 1);
    REQUIRE(wsbmf::partition_density_bipartite(match, all) == Catch::Approx(-1.0));

    // Empty cover: zero by the empty sum.
    const CommunityCover outliers({{}, {}, {}, {}}, 1);
    wsbmf::DensityDiagnostics empty_diag;
    REQUIRE(wsbmf::partition_density_bipartite(match, outliers, &empty_diag) == 0.0);
    REQUIRE(empty_diag.outliers == 4);
    REQUIRE(empty_diag.population == 4);
}

TEST_CASE("degenerate and one-sided communities contribute zero") {
    const BipartiteGraph g(2, 2, {{0, 0}, {1, 1}});

    // Community 0 is a single edge, community 1 is the other.
    const CommunityCover pairs({{0}, {1}, {0}, {1}}, 2);
    wsbmf::DensityDiagnostics diag;
    REQUIRE(wsbmf::partition_density_bipartite(g, pairs, &diag) == 0.0);
    REQUIRE(diag.communities[0].degenerate);
    REQUIRE(diag.communities[1].degenerate);

    // A community with members on one side only warns and contributes zero.
    const CommunityCover lopsided({{0}, {0}, {1}, {1}}, 2);
    wsbmf::DensityDiagnostics warn_diag;
    REQUIRE(wsbmf::partition_density_bipartite(g, lopsided, &warn_diag) == 0.0);
    REQUIRE(warn_diag.communities[0].one_sided);
    REQUIRE(warn_diag.communities[1].one_sided);
    REQUIRE(warn_diag.warnings.size() == 2);
}

TEST_CASE("overlap raises q and outliers enter the population") {
    // d1 belongs to both complete 2x2 blocks.
    const BipartiteGraph g(4, 4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
                                  {2, 2}, {2, 3}});
    const CommunityCover cover({{0}, {0, 1}, {1}, {}, {0}, {0}, {1}, {1}}, 2);
    wsbmf::DensityDiagnostics diag;
    const double density = wsbmf::partition_density_bipartite(g, cover, &diag);
    // Both communities are complete 2+2 bicliques with q = 2; N = 4+4+1.
    REQUIRE(density == Catch::Approx(0.5 * 4.0 / 9.0 + 0.5 * 4.0 / 9.0));
    REQUIRE(diag.population == 9);
    REQUIRE(diag.outliers == 1);
    REQUIRE(diag.communities[0].q == 2);
    REQUIRE(diag.communities[1].q == 2);
}

TEST_CASE("bipartite density matches the brute-force oracle on random covers") {
    wsbmf::Rng rng = wsbmf::make_rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> nmemb(0, 2);
    std::uniform_int_distribution<Index> comm(0, 2);

    for (int trial = 0; trial < 100; ++trial) {
        const Index nd = 5, ng = 6;
        std::vector<BipartiteGraph::Edge> edges;
        for (Index d = 0; d < nd; ++d)
            for (Index g = 0; g < ng; ++g)
                if (unit(rng) < 0.4) edges.emplace_back(d, g);
        const BipartiteGraph g(nd, ng, edges);

        std::vector<std::vector<Index>> assign(g.n());
        for (auto& comms : assign) {
            const int k = nmemb(rng);
            for (int i = 0; i < k; ++i) comms.push_back(comm(rng));
        }
        const CommunityCover cover(assign, 3);
        const double expected = brute_force_density(g, cover);
        REQUIRE(wsbmf::partition_density_bipartite(g, cover) == Catch::Approx(expected).margin(1e-12));
    }
}

TEST_CASE("density is invariant under community relabeling") {
    const BipartiteGraph g = two_bicliques22();
    std::vector<std::vector<Index>> assign(8);
    for (Index d = 0; d < 4; ++d) assign[d] = {d / 2};
    for (Index gm = 0; gm < 4; ++gm) assign[4 + gm] = {gm / 2};
    std::vector<std::vector<Index>> swapped = assign;
    for (auto& comms : swapped)
        for (Index& k : comms) k = 1 - k;
    REQUIRE(wsbmf::partition_density_bipartite(g, CommunityCover(assign, 2)) ==
            wsbmf::partition_density_bipartite(g, CommunityCover(swapped, 2)));
}

TEST_CASE("unipartite density on the hand-checked graphs") {
    using wsbmf::UnipartiteGraph;

    std::vector<UnipartiteGraph::Edge> k5;
    for (Index a = 0; a < 5; ++a)
        for (Index b = a + 1; b < 5; ++b) k5.emplace_back(a, b);
    const CommunityCover one({{0}, {0}, {0}, {0}, {0}}, 1);
    REQUIRE(wsbmf::partition_density_unipartite(UnipartiteGraph(5, k5), one) == Catch::Approx(1.0));

    const UnipartiteGraph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    REQUIRE(wsbmf::partition_density_unipartite(path, one) == 0.0);

    const UnipartiteGraph triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const CommunityCover pair({{0}, {0}, {0}, {1}, {1}, {1}}, 2);
    REQUIRE(wsbmf::partition_density_unipartite(triangles, pair) == Catch::Approx(1.0));

    // Size <= 2 communities are degenerate and contribute zero.
    const UnipartiteGraph tiny(3, {{0, 1}});
    const CommunityCover split({{0}, {0}, {1}}, 2);
    REQUIRE(wsbmf::partition_density_unipartite(tiny, split) == 0.0);
}

TEST_CASE("unipartite density matches a brute-force evaluation") {
    using wsbmf::UnipartiteGraph;
    wsbmf::Rng rng = wsbmf::make_rng(123);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> nmemb(0, 2);
    std::uniform_int_distribution<Index> comm(0, 2);

    for (int trial = 0; trial < 50; ++trial) {
        const Index n = 7;
        std::vector<UnipartiteGraph::Edge> edges;
        for (Index a = 0; a < n; ++a)
            for (Index b = a + 1; b < n; ++b)
                if (unit(rng) < 0.35) edges.emplace_back(a, b);
        const UnipartiteGraph g(n, edges);

        std::vector<std::vector<Index>> assign(n);
        for (auto& comms : assign) {
            const int k = nmemb(rng);
            for (int i = 0; i < k; ++i) comms.push_back(comm(rng));
        }
        const CommunityCover cover(assign, 3);

        std::vector<Index> memberships(n);
        for (Index v = 0; v < n; ++v) memberships[v] = cover.communities_of(v).size();
        double population = cover.outlier_count();
        for (Index k = 0; k < 3; ++k) population += cover.members(k).size();
        double expected = 0.0;
        for (Index k = 0; k < 3; ++k) {
            const auto members = cover.members(k);
            if (members.empty()) continue;
            Index q = 1;
            double m = 0.0;
            for (std::size_t x = 0; x < members.size(); ++x) {
                q = std::max(q, memberships[members[x]]);
                for (std::size_t y = x + 1; y < members.size(); ++y)
                    if (g.has_edge(members[x], members[y])) m += 1.0;
            }
            const double sz = static_cast<double>(members.size());
            const double m_max = sz * (sz - 1.0) / 2.0;
            const double m_min = sz - 1.0;
            if (m_max == m_min) continue;
            expected += (1.0 / q) * (sz / population) * (m - m_min) / (m_max - m_min);
        }
        REQUIRE(wsbmf::partition_density_unipartite(g, cover) ==
                Catch::Approx(expected).margin(1e-12));
    }
}

TEST_CASE("model selection prefers the planted community count") {
    const BipartiteGraph g = two_bicliques22();
    wsbmf::SolverConfig base;
    base.restarts = 5;
    base.seed = 4;
    const auto selection = wsbmf::select_c(g, base, 1, 3);
    REQUIRE(selection.best_c == 2);
    REQUIRE(selection.candidates.size() == 3);
    REQUIRE(selection.candidates[1].c == 2);
    REQUIRE(selection.candidates[1].ran);
    REQUIRE(selection.candidates[1].mean_density == Catch::Approx(1.0));
    REQUIRE(selection.best.objective == 0.0);

    // A single complete biclique peaks at one community.
    std::vector<BipartiteGraph::Edge> full;
    for (Index d = 0; d < 3; ++d)
        for (Index gm = 0; gm < 3; ++gm) full.emplace_back(d, gm);
    const auto single = wsbmf::select_c(BipartiteGraph(3, 3, full), base, 1, 3);
    REQUIRE(single.best_c == 1);
}

TEST_CASE("model selection is deterministic and validates its range") {
    const BipartiteGraph g = two_bicliques22();
    wsbmf::SolverConfig base;
    base.restarts = 3;
    base.seed = 9;
    const auto s1 = wsbmf::select_c(g, base, 1, 3);
    const auto s2 = wsbmf::select_c(g, base, 1, 3);
    REQUIRE(s1.best_c == s2.best_c);
    REQUIRE((s1.best.binary.array() == s2.best.binary.array()).all());
    for (std::size_t i = 0; i < s1.candidates.size(); ++i) {
        REQUIRE(s1.candidates[i].mean_density == s2.candidates[i].mean_density);
        REQUIRE(s1.candidates[i].objective == s2.candidates[i].objective);
    }

    REQUIRE_THROWS_AS(wsbmf::select_c(g, base, 0, 3), wsbmf::InputError);
    REQUIRE_THROWS_AS(wsbmf::select_c(g, base, 3, 2), wsbmf::InputError);
}
