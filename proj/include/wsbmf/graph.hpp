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

#ifndef WSBMF_GRAPH_HPP
#define WSBMF_GRAPH_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "wsbmf/core.hpp"

namespace wsbmf {

enum class Part { Delta, Gamma };

// Undirected bipartite graph. Delta nodes occupy global indices
// 0..n_delta-1 and Gamma nodes n_delta..n-1, so block formulas on the
// assembled matrices are positional.
class BipartiteGraph {
  public:
    using Edge = std::pair<Index, Index>;  // (delta index, gamma index)

    BipartiteGraph(Index n_delta, Index n_gamma, std::vector<Edge> edges,
                   std::vector<std::string> delta_labels = {},
                   std::vector<std::string> gamma_labels = {})
        : n_delta_(n_delta),
          n_gamma_(n_gamma),
          edges_(std::move(edges)),
          delta_labels_(std::move(delta_labels)),
          gamma_labels_(std::move(gamma_labels)) {
        if (n_delta_ < 0 || n_gamma_ < 0) throw InputError("negative part size");
        for (const auto& [d, g] : edges_) {
            if (d < 0 || d >= n_delta_ || g < 0 || g >= n_gamma_)
                throw InputError("edge endpoint out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw InputError("duplicate edge");
        if (!delta_labels_.empty() && static_cast<Index>(delta_labels_.size()) != n_delta_)
            throw InputError("delta label count mismatch");
        if (!gamma_labels_.empty() && static_cast<Index>(gamma_labels_.size()) != n_gamma_)
            throw InputError("gamma label count mismatch");
    }

    Index n_delta() const { return n_delta_; }
    Index n_gamma() const { return n_gamma_; }
    Index n() const { return n_delta_ + n_gamma_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(Index d, Index g) const {
        return std::binary_search(edges_.begin(), edges_.end(), Edge{d, g});
    }

    std::string delta_label(Index i) const {
        return delta_labels_.empty() ? "d" + std::to_string(i) : delta_labels_[i];
    }
    std::string gamma_label(Index j) const {
        return gamma_labels_.empty() ? "g" + std::to_string(j) : gamma_labels_[j];
    }
    // Label of a node by its global index.
    std::string label(Index v) const {
        return v < n_delta_ ? delta_label(v) : gamma_label(v - n_delta_);
    }
    bool has_labels() const { return !delta_labels_.empty() || !gamma_labels_.empty(); }

    // The n_delta x n_gamma cross-part block B.
    Matrix cross_block() const {
        Matrix b = Matrix::Zero(n_delta_, n_gamma_);
        for (const auto& [d, g] : edges_) b(d, g) = 1.0;
        return b;
    }

  private:
    Index n_delta_, n_gamma_;
    std::vector<Edge> edges_;
    std::vector<std::string> delta_labels_, gamma_labels_;
};

// Simple undirected unipartite graph; target of one-mode projections.
class UnipartiteGraph {
  public:
    using Edge = std::pair<Index, Index>;  // normalized lo < hi

    UnipartiteGraph(Index n, std::vector<Edge> edges, std::vector<std::string> labels = {})
        : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
        if (n_ < 0) throw InputError("negative node count");
        for (auto& [a, b] : edges_) {
            if (a == b) throw InputError("self loop");
            if (a > b) std::swap(a, b);
            if (a < 0 || b >= n_) throw InputError("edge endpoint out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        if (!labels_.empty() && static_cast<Index>(labels_.size()) != n_)
            throw InputError("label count mismatch");
    }

    Index n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::string label(Index v) const { return labels_.empty() ? "v" + std::to_string(v) : labels_[v]; }

    bool has_edge(Index a, Index b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
    }

    Matrix adjacency() const {
        Matrix a = Matrix::Zero(n_, n_);
        for (const auto& [u, v] : edges_) a(u, v) = a(v, u) = 1.0;
        return a;
    }

  private:
    Index n_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

// M-partite layered graph: edges connect consecutive parts only.
class MultipartiteGraph {
  public:
    using Edge = std::pair<Index, Index>;  // indices local to the two parts

    MultipartiteGraph(std::vector<Index> part_sizes, std::vector<std::vector<Edge>> layer_edges)
        : part_sizes_(std::move(part_sizes)), layer_edges_(std::move(layer_edges)) {
        if (part_sizes_.size() < 2) throw InputError("multipartite graph needs at least two parts");
        if (layer_edges_.size() != part_sizes_.size() - 1)
            throw InputError("expected one edge set per consecutive part pair");
        for (Index s : part_sizes_)
            if (s <= 0) throw InputError("part sizes must be positive");
        for (std::size_t l = 0; l < layer_edges_.size(); ++l) {
            auto& edges = layer_edges_[l];
            for (const auto& [a, b] : edges) {
                if (a < 0 || a >= part_sizes_[l] || b < 0 || b >= part_sizes_[l + 1])
                    throw InputError("layer edge endpoint out of range");
            }
            std::sort(edges.begin(), edges.end());
            if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
                throw InputError("duplicate layer edge");
        }
    }

    Index parts() const { return static_cast<Index>(part_sizes_.size()); }
    const std::vector<Index>& part_sizes() const { return part_sizes_; }
    const std::vector<std::vector<Edge>>& layer_edges() const { return layer_edges_; }
    Index n() const {
        Index total = 0;
        for (Index s : part_sizes_) total += s;
        return total;
    }
    // Global index of the first node of part p.
    Index part_offset(Index p) const {
        Index off = 0;
        for (Index q = 0; q < p; ++q) off += part_sizes_[q];
        return off;
    }

  private:
    std::vector<Index> part_sizes_;
    std::vector<std::vector<Edge>> layer_edges_;
};

// Symmetric nonnegative weight matrix L with zero diagonal. Entries select
// which adjacency entries the objective observes; zero means missing
// information. Individual entries may be edited to express per-pair
// reliability.
class WeightMask {
  public:
    WeightMask(Matrix entries, double gamma) : entries_(std::move(entries)), gamma_(gamma) {
        if (gamma_ < 0) throw InputError("gamma must be nonnegative");
        if (entries_.rows() != entries_.cols()) throw InputError("weight mask must be square");
        for (Index i = 0; i < entries_.rows(); ++i) {
            if (entries_(i, i) != 0.0) throw InputError("weight mask diagonal must be zero");
            for (Index j = i + 1; j < entries_.cols(); ++j) {
                if (entries_(i, j) < 0.0) throw InputError("weight mask entries must be nonnegative");
                if (entries_(i, j) != entries_(j, i)) throw InputError("weight mask must be symmetric");
            }
        }
    }

    const Matrix& entries() const { return entries_; }
    double gamma() const { return gamma_; }
    Index n() const { return entries_.rows(); }
    double operator()(Index i, Index j) const { return entries_(i, j); }

    // Sets both symmetric positions; the diagonal stays untouchable.
    void set(Index i, Index j, double w) {
        if (i == j) throw InputError("weight mask diagonal must stay zero");
        if (w < 0) throw InputError("weight mask entries must be nonnegative");
        entries_(i, j) = entries_(j, i) = w;
    }

  private:
    Matrix entries_;
    double gamma_;
};

// Same-part pair constraints: existence pairs are known co-members,
// absence pairs are known non-members. Pairs use global node indices.
class PriorConstraints {
  public:
    using Pair = std::pair<Index, Index>;

    PriorConstraints(std::vector<Pair> existence, std::vector<Pair> absence, double gamma = 1.0)
        : existence_(std::move(existence)), absence_(std::move(absence)), gamma_(gamma) {
        if (gamma_ < 0) throw InputError("prior gamma must be nonnegative");
        normalize(existence_);
        normalize(absence_);
        std::vector<Pair> both;
        std::set_intersection(existence_.begin(), existence_.end(), absence_.begin(), absence_.end(),
                              std::back_inserter(both));
        if (!both.empty())
            throw InputError("pair (" + std::to_string(both.front().first) + "," +
                             std::to_string(both.front().second) +
                             ") appears in both existence and absence constraints");
    }

    const std::vector<Pair>& existence() const { return existence_; }
    const std::vector<Pair>& absence() const { return absence_; }
    double gamma() const { return gamma_; }
    bool empty() const { return existence_.empty() && absence_.empty(); }
    std::size_t size() const { return existence_.size() + absence_.size(); }

    // Checks that every pair stays within one part of a graph split at
    // n_delta. Cross-part knowledge belongs in the edge set, not here.
    void validate_for(Index n_delta, Index n) const {
        auto check = [&](const std::vector<Pair>& pairs) {
            for (const auto& [a, b] : pairs) {
                if (a < 0 || b >= n) throw InputError("constraint index out of range");
                if ((a < n_delta) != (b < n_delta))
                    throw InputError("constraint pair (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") spans both parts");
            }
        };
        check(existence_);
        check(absence_);
    }

  private:
    static void normalize(std::vector<Pair>& pairs) {
        for (auto& [a, b] : pairs) {
            if (a == b) throw InputError("constraint pair may not be a self-pair");
            if (a > b) std::swap(a, b);
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    }

    std::vector<Pair> existence_, absence_;
    double gamma_;
};

// A = [[0, B], [B^T, 0]]: symmetric, zero diagonal, zero within-part blocks.
inline Matrix assemble_adjacency(const BipartiteGraph& g) {
    Matrix a = Matrix::Zero(g.n(), g.n());
    for (const auto& [d, gm] : g.edges()) {
        a(d, g.n_delta() + gm) = 1.0;
        a(g.n_delta() + gm, d) = 1.0;
    }
    return a;
}

// L = gamma on both cross-part blocks, zero elsewhere: every cross-part
// pair is observed (edge or not), within-part pairs are missing.
inline WeightMask assemble_weight_mask(const BipartiteGraph& g, double gamma) {
    if (gamma < 0) throw InputError("gamma must be nonnegative");
    Matrix l = Matrix::Zero(g.n(), g.n());
    l.block(0, g.n_delta(), g.n_delta(), g.n_gamma()).setConstant(gamma);
    l.block(g.n_delta(), 0, g.n_gamma(), g.n_delta()).setConstant(gamma);
    return WeightMask(std::move(l), gamma);
}

// Writes prior knowledge into the within-part blocks: existence pairs get
// A=1, absence pairs A=0, and both become observed (L=gamma). Idempotent.
inline std::pair<Matrix, WeightMask> apply_priors(const Matrix& a, const WeightMask& l,
                                                  const PriorConstraints& priors, Index n_delta) {
    if (a.rows() != l.n()) throw InputError("adjacency and mask sizes differ");
    priors.validate_for(n_delta, a.rows());
    Matrix a2 = a;
    WeightMask l2 = l;
    for (const auto& [i, j] : priors.existence()) {
        a2(i, j) = a2(j, i) = 1.0;
        l2.set(i, j, priors.gamma());
    }
    for (const auto& [i, j] : priors.absence()) {
        a2(i, j) = a2(j, i) = 0.0;
        l2.set(i, j, priors.gamma());
    }
    return {std::move(a2), std::move(l2)};
}

// Block layout for M parts: B blocks on the first super/sub diagonal of
// the M x M block grid, zero elsewhere; L carries gamma exactly where a B
// block sits. For M=2 this reduces to the bipartite assemblers.
inline std::pair<Matrix, WeightMask> assemble_multipartite(const MultipartiteGraph& g, double gamma) {
    if (gamma < 0) throw InputError("gamma must be nonnegative");
    const Index n = g.n();
    Matrix a = Matrix::Zero(n, n);
    Matrix l = Matrix::Zero(n, n);
    for (Index p = 0; p + 1 < g.parts(); ++p) {
        const Index off_a = g.part_offset(p);
        const Index off_b = g.part_offset(p + 1);
        l.block(off_a, off_b, g.part_sizes()[p], g.part_sizes()[p + 1]).setConstant(gamma);
        l.block(off_b, off_a, g.part_sizes()[p + 1], g.part_sizes()[p]).setConstant(gamma);
        for (const auto& [i, j] : g.layer_edges()[p]) {
            a(off_a + i, off_b + j) = 1.0;
            a(off_b + j, off_a + i) = 1.0;
        }
    }
    return {std::move(a), WeightMask(std::move(l), gamma)};
}

// One-mode projection: two nodes of the chosen part are adjacent iff they
// share at least one neighbor in the other part.
inline UnipartiteGraph project_unipartite(const BipartiteGraph& g, Part side) {
    const Index n_keep = side == Part::Delta ? g.n_delta() : g.n_gamma();
    const Index n_other = side == Part::Delta ? g.n_gamma() : g.n_delta();
    std::vector<std::vector<Index>> neighbors(n_other);
    for (const auto& [d, gm] : g.edges()) {
        if (side == Part::Delta)
            neighbors[gm].push_back(d);
        else
            neighbors[d].push_back(gm);
    }
    std::vector<UnipartiteGraph::Edge> edges;
    for (const auto& shared : neighbors)
        for (std::size_t x = 0; x < shared.size(); ++x)
            for (std::size_t y = x + 1; y < shared.size(); ++y)
                edges.emplace_back(shared[x], shared[y]);
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(n_keep);
        for (Index v = 0; v < n_keep; ++v)
            labels.push_back(side == Part::Delta ? g.delta_label(v) : g.gamma_label(v));
    }
    return UnipartiteGraph(n_keep, std::move(edges), std::move(labels));
}

}  // namespace wsbmf

#endif  // WSBMF_GRAPH_HPP
