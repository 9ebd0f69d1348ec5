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

#ifndef WSBMF_DENSITY_HPP
#define WSBMF_DENSITY_HPP

#include <string>
#include <vector>

#include "wsbmf/core.hpp"
#include "wsbmf/cover.hpp"
#include "wsbmf/graph.hpp"

namespace wsbmf {

// Link counts of one community subnetwork: actual links m, the maximum
// m_max a community of that shape could hold, and the minimum m_min it
// needs to be connected.
struct SubnetworkCounts {
    double m = 0.0;
    double m_max = 0.0;
    double m_min = 0.0;
};

struct CommunityDensity {
    Index community = 0;
    Index size = 0;        // member count (both parts for bipartite)
    Index size_delta = 0;  // bipartite only
    Index size_gamma = 0;  // bipartite only
    Index q = 1;           // largest membership count among members
    SubnetworkCounts counts;
    double term = 0.0;  // contribution to the partition density sum
    bool degenerate = false;
    bool one_sided = false;
};

struct DensityDiagnostics {
    std::vector<CommunityDensity> communities;
    Index population = 0;  // sum of community sizes plus outliers
    Index outliers = 0;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<Index> membership_counts(const CommunityCover& cover) {
    std::vector<Index> counts(cover.n());
    for (Index v = 0; v < cover.n(); ++v)
        counts[v] = static_cast<Index>(cover.communities_of(v).size());
    return counts;
}

}  // namespace detail

// Counts for a bipartite community holding the induced cross-part block
// b_sub. The community subnetwork overlays both one-mode projections on
// the bipartite links: within-part link weight is the number of shared
// neighbors, so m = (sum of off-diagonal entries of
// [[BB^T, B], [B^T, B^T B]]) / 2. The densest shape is two cliques plus a
// complete biclique; the sparsest connected shape is a spanning tree on
// each projection plus a spanning tree across.
inline SubnetworkCounts subnetwork_counts(const Matrix& b_sub) {
    const Index nd = b_sub.rows();
    const Index ng = b_sub.cols();
    SubnetworkCounts counts;
    if (nd == 0 || ng == 0) return counts;
    const Matrix bbt = b_sub * b_sub.transpose();
    const Matrix btb = b_sub.transpose() * b_sub;
    const double off_delta = bbt.sum() - bbt.trace();
    const double off_gamma = btb.sum() - btb.trace();
    counts.m = (off_delta + off_gamma + 2.0 * b_sub.sum()) / 2.0;
    const double fd = static_cast<double>(nd);
    const double fg = static_cast<double>(ng);
    counts.m_max = fd * (fd - 1.0) / 2.0 * fg + fg * (fg - 1.0) / 2.0 * fd + fd * fg;
    counts.m_min = (fd - 1.0) + (fg - 1.0) + (fd + fg - 1.0);
    return counts;
}

// Counts for a unipartite community subgraph with n nodes and m links.
inline SubnetworkCounts subnetwork_counts_unipartite(Index n, double m) {
    SubnetworkCounts counts;
    counts.m = m;
    const double fn = static_cast<double>(n);
    counts.m_max = fn * (fn - 1.0) / 2.0;
    counts.m_min = fn - 1.0;
    return counts;
}

// Partition density of a cover over a bipartite graph: each community
// contributes (1/q) * (size / population) * (m - m_min) / (m_max - m_min),
// where q is the largest membership count among its members. Degenerate
// communities (m_max == m_min) and one-sided communities contribute zero.
inline double partition_density_bipartite(const BipartiteGraph& g, const CommunityCover& cover,
                                          DensityDiagnostics* diag = nullptr) {
    if (cover.n() != g.n()) throw InputError("cover size does not match graph");
    const Matrix b = g.cross_block();
    const std::vector<Index> memberships = detail::membership_counts(cover);

    DensityDiagnostics local;
    local.outliers = cover.outlier_count();
    local.population = local.outliers;

    std::vector<CommunityDensity> comms;
    for (Index k = 0; k < cover.c(); ++k) {
        const std::vector<Index> members = cover.members(k);
        if (members.empty()) continue;
        CommunityDensity cd;
        cd.community = k;
        cd.size = static_cast<Index>(members.size());
        std::vector<Index> delta_members, gamma_members;
        for (Index v : members) {
            cd.q = std::max(cd.q, memberships[v]);
            if (v < g.n_delta())
                delta_members.push_back(v);
            else
                gamma_members.push_back(v - g.n_delta());
        }
        cd.size_delta = static_cast<Index>(delta_members.size());
        cd.size_gamma = static_cast<Index>(gamma_members.size());
        local.population += cd.size;

        if (delta_members.empty() || gamma_members.empty()) {
            cd.one_sided = true;
            local.warnings.push_back("community " + std::to_string(k) +
                                     " has members on one side only; contributes zero density");
            comms.push_back(cd);
            continue;
        }
        Matrix b_sub(cd.size_delta, cd.size_gamma);
        for (Index r = 0; r < cd.size_delta; ++r)
            for (Index s = 0; s < cd.size_gamma; ++s) b_sub(r, s) = b(delta_members[r], gamma_members[s]);
        cd.counts = subnetwork_counts(b_sub);
        if (cd.counts.m_max == cd.counts.m_min) {
            cd.degenerate = true;
            comms.push_back(cd);
            continue;
        }
        comms.push_back(cd);
    }

    double density = 0.0;
    for (auto& cd : comms) {
        if (cd.one_sided || cd.degenerate) continue;
        cd.term = (1.0 / static_cast<double>(cd.q)) *
                  (static_cast<double>(cd.size) / static_cast<double>(local.population)) *
                  (cd.counts.m - cd.counts.m_min) / (cd.counts.m_max - cd.counts.m_min);
        density += cd.term;
    }
    local.communities = std::move(comms);
    if (diag) *diag = std::move(local);
    return density;
}

// Unipartite partition density with the same community weighting; links
// are plain induced edges.
inline double partition_density_unipartite(const UnipartiteGraph& g, const CommunityCover& cover,
                                           DensityDiagnostics* diag = nullptr) {
    if (cover.n() != g.n()) throw InputError("cover size does not match graph");
    const std::vector<Index> memberships = detail::membership_counts(cover);

    DensityDiagnostics local;
    local.outliers = cover.outlier_count();
    local.population = local.outliers;

    std::vector<CommunityDensity> comms;
    for (Index k = 0; k < cover.c(); ++k) {
        const std::vector<Index> members = cover.members(k);
        if (members.empty()) continue;
        CommunityDensity cd;
        cd.community = k;
        cd.size = static_cast<Index>(members.size());
        for (Index v : members) cd.q = std::max(cd.q, memberships[v]);
        local.population += cd.size;

        double m = 0.0;
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y)
                if (g.has_edge(members[x], members[y])) m += 1.0;
        cd.counts = subnetwork_counts_unipartite(cd.size, m);
        if (cd.counts.m_max == cd.counts.m_min) cd.degenerate = true;
        comms.push_back(cd);
    }

    double density = 0.0;
    for (auto& cd : comms) {
        if (cd.degenerate) continue;
        cd.term = (1.0 / static_cast<double>(cd.q)) *
                  (static_cast<double>(cd.size) / static_cast<double>(local.population)) *
                  (cd.counts.m - cd.counts.m_min) / (cd.counts.m_max - cd.counts.m_min);
        density += cd.term;
    }
    local.communities = std::move(comms);
    if (diag) *diag = std::move(local);
    return density;
}

}  // namespace wsbmf

#endif  // WSBMF_DENSITY_HPP
