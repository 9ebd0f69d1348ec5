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

#ifndef WSBMF_METRICS_HPP
#define WSBMF_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "wsbmf/core.hpp"
#include "wsbmf/cover.hpp"

namespace wsbmf {

namespace detail {

// Maps arbitrary labels onto 0..k-1 preserving first appearance.
inline std::vector<Index> relabel(const std::vector<Index>& labels, Index& k) {
    std::map<Index, Index> ids;
    std::vector<Index> out;
    out.reserve(labels.size());
    for (Index label : labels) {
        auto [it, fresh] = ids.emplace(label, static_cast<Index>(ids.size()));
        (void)fresh;
        out.push_back(it->second);
    }
    k = static_cast<Index>(ids.size());
    return out;
}

inline double xlogx(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

inline void warn(std::vector<std::string>* warnings, const std::string& msg) {
    if (warnings) warnings->push_back(msg);
}

}  // namespace detail

// Normalized mutual information between two hard partitions: the mutual
// information of the confusion counts divided by the geometric mean of the
// two label entropies (natural logs). A single-cluster partition makes the
// ratio 0/0; by convention that scores 0, with a warning.
inline double nmi(const std::vector<Index>& x, const std::vector<Index>& y,
                  std::vector<std::string>* warnings = nullptr) {
    if (x.empty() || x.size() != y.size()) throw InputError("partitions must be nonempty and equal sized");
    Index cx = 0, cy = 0;
    const std::vector<Index> a = detail::relabel(x, cx);
    const std::vector<Index> b = detail::relabel(y, cy);
    if (cx < 2 || cy < 2) {
        detail::warn(warnings, "a partition has a single cluster; returning 0");
        return 0.0;
    }
    Matrix counts = Matrix::Zero(cx, cy);
    for (std::size_t v = 0; v < a.size(); ++v) counts(a[v], b[v]) += 1.0;
    const Vector row = counts.rowwise().sum();
    const Vector col = counts.colwise().sum();
    const double n = static_cast<double>(a.size());

    double info = 0.0;
    for (Index i = 0; i < cx; ++i)
        for (Index j = 0; j < cy; ++j)
            if (counts(i, j) > 0.0) info += counts(i, j) * std::log(counts(i, j) * n / (row(i) * col(j)));
    double hx = 0.0, hy = 0.0;
    for (Index i = 0; i < cx; ++i) hx += row(i) * std::log(row(i) / n);
    for (Index j = 0; j < cy; ++j) hy += col(j) * std::log(col(j) / n);
    const double value = info / std::sqrt(hx * hy);
    return std::clamp(value, 0.0, 1.0);
}

// Hard-cover convenience wrapper; throws unless both covers assign every
// node exactly one community.
inline double nmi(const CommunityCover& x, const CommunityCover& y,
                  std::vector<std::string>* warnings = nullptr) {
    if (x.n() != y.n()) throw InputError("covers must describe the same node set");
    if (!x.is_hard() || !y.is_hard())
        throw InputError("nmi needs hard partitions; use gnmi for overlapping covers");
    std::vector<Index> a(x.n()), b(y.n());
    for (Index v = 0; v < x.n(); ++v) {
        a[v] = x.communities_of(v).front();
        b[v] = y.communities_of(v).front();
    }
    return nmi(a, b, warnings);
}

namespace detail {

struct IndicatorCover {
    // One membership bitset per non-empty community.
    std::vector<std::vector<bool>> sets;
    std::vector<double> sizes;
};

inline IndicatorCover indicators(const CommunityCover& cover) {
    IndicatorCover ind;
    for (Index k = 0; k < cover.c(); ++k) {
        const std::vector<Index> m = cover.members(k);
        if (m.empty()) continue;
        std::vector<bool> bits(cover.n(), false);
        for (Index v : m) bits[v] = true;
        ind.sets.push_back(std::move(bits));
        ind.sizes.push_back(static_cast<double>(m.size()));
    }
    return ind;
}

// Mean normalized conditional entropy of cover X's indicators given the
// best admissible match in cover Y. Candidate matches whose joint
// distribution is closer to anti-correlation than correlation are
// rejected; with no admissible match the community keeps its full entropy.
inline double conditional_entropy_norm(const IndicatorCover& x, const IndicatorCover& y, double n) {
    double total = 0.0;
    for (std::size_t k = 0; k < x.sets.size(); ++k) {
        const double p1 = x.sizes[k] / n;
        const double hk = -xlogx(p1) - xlogx(1.0 - p1);
        if (hk <= 0.0) continue;  // indicator carries no information
        double best = hk;
        for (std::size_t l = 0; l < y.sets.size(); ++l) {
            double n11 = 0.0;
            for (std::size_t v = 0; v < x.sets[k].size(); ++v)
                if (x.sets[k][v] && y.sets[l][v]) n11 += 1.0;
            const double p11 = n11 / n;
            const double p10 = x.sizes[k] / n - p11;
            const double p01 = y.sizes[l] / n - p11;
            const double p00 = 1.0 - p11 - p10 - p01;
            const double h11 = -xlogx(p11), h10 = -xlogx(p10);
            const double h01 = -xlogx(p01), h00 = -xlogx(p00);
            if (h11 + h00 < h01 + h10) continue;
            const double q1 = y.sizes[l] / n;
            const double hy = -xlogx(q1) - xlogx(1.0 - q1);
            best = std::min(best, h11 + h10 + h01 + h00 - hy);
        }
        total += std::max(best, 0.0) / hk;
    }
    return total / static_cast<double>(x.sets.size());
}

}  // namespace detail

// Normalized mutual information generalized to overlapping covers via
// per-community indicator variables and best-match conditional entropies:
//   NMI = 1 - (H(X|Y)_norm + H(Y|X)_norm) / 2.
// Hard partitions with at least two communities on both sides fall back to
// the confusion-matrix nmi, whose value the indicator construction only
// approximates; docs/gnmi.md derives both routes and why they differ.
inline double gnmi(const CommunityCover& x, const CommunityCover& y,
                   std::vector<std::string>* warnings = nullptr) {
    if (x.n() != y.n()) throw InputError("covers must describe the same node set");
    if (x.n() == 0) throw InputError("covers must be nonempty");
    const detail::IndicatorCover ix = detail::indicators(x);
    const detail::IndicatorCover iy = detail::indicators(y);
    if (ix.sets.empty() || iy.sets.empty()) {
        detail::warn(warnings, "a cover has no non-empty community; returning 0");
        return 0.0;
    }
    if (x.is_hard() && y.is_hard() && ix.sets.size() >= 2 && iy.sets.size() >= 2)
        return nmi(x, y, warnings);
    const double n = static_cast<double>(x.n());
    const double hxy = detail::conditional_entropy_norm(ix, iy, n);
    const double hyx = detail::conditional_entropy_norm(iy, ix, n);
    return std::clamp(1.0 - 0.5 * (hxy + hyx), 0.0, 1.0);
}

// Exponential entropy e^{H_i} per row, H_i = -sum_j U_ij ln U_ij with
// 0 ln 0 = 0. Row-stochastic rows land in [1, c]; a deterministic row
// scores 1 and a uniform row scores c.
inline Vector exponential_entropy(const Matrix& u) {
    Vector h = Vector::Zero(u.rows());
    for (Index i = 0; i < u.rows(); ++i) {
        for (Index j = 0; j < u.cols(); ++j) {
            if (u(i, j) < 0.0) throw InputError("membership strengths must be nonnegative");
            h(i) -= detail::xlogx(u(i, j));
        }
    }
    return h.array().exp();
}

inline Vector exponential_entropy(const Matrix& u, const std::vector<Index>& subset) {
    const Vector full = exponential_entropy(u);
    Vector out(static_cast<Index>(subset.size()));
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= u.rows()) throw InputError("subset index out of range");
        out(static_cast<Index>(i)) = full(subset[i]);
    }
    return out;
}

// Hardens a continuous membership matrix: each node takes its strongest
// community, ties resolved toward the smaller index.
inline std::vector<Index> argmax_labels(const Matrix& u) {
    if (u.cols() == 0) throw InputError("membership matrix has no columns");
    std::vector<Index> labels(u.rows());
    for (Index i = 0; i < u.rows(); ++i) {
        Index best = 0;
        for (Index j = 1; j < u.cols(); ++j)
            if (u(i, j) > u(i, best)) best = j;
        labels[i] = best;
    }
    return labels;
}

}  // namespace wsbmf

#endif  // WSBMF_METRICS_HPP
