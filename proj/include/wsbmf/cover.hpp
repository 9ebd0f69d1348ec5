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

#ifndef WSBMF_COVER_HPP
#define WSBMF_COVER_HPP

#include <vector>

#include "wsbmf/core.hpp"

namespace wsbmf {

// Overlapping community assignment: one sorted community index list per
// node. Empty list means outlier. Node order matches the global index
// order of whatever graph the cover describes.
class CommunityCover {
  public:
    CommunityCover(std::vector<std::vector<Index>> assignments, Index c)
        : assignments_(std::move(assignments)), c_(c) {
        if (c_ < 0) throw InputError("community count must be nonnegative");
        for (auto& comms : assignments_) {
            std::sort(comms.begin(), comms.end());
            comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
            for (Index k : comms)
                if (k < 0 || k >= c_) throw InputError("community index out of range");
        }
    }

    // Columns of a binary membership matrix become communities.
    static CommunityCover from_binary(const Matrix& u) {
        std::vector<std::vector<Index>> assign(u.rows());
        for (Index i = 0; i < u.rows(); ++i)
            for (Index k = 0; k < u.cols(); ++k)
                if (u(i, k) != 0.0) assign[i].push_back(k);
        return CommunityCover(std::move(assign), u.cols());
    }

    Index n() const { return static_cast<Index>(assignments_.size()); }
    Index c() const { return c_; }
    const std::vector<Index>& communities_of(Index v) const { return assignments_[v]; }
    const std::vector<std::vector<Index>>& assignments() const { return assignments_; }

    bool is_outlier(Index v) const { return assignments_[v].empty(); }
    Index outlier_count() const {
        Index count = 0;
        for (const auto& comms : assignments_)
            if (comms.empty()) ++count;
        return count;
    }

    // Hard partition: every node in exactly one community.
    bool is_hard() const {
        for (const auto& comms : assignments_)
            if (comms.size() != 1) return false;
        return true;
    }

    std::vector<Index> members(Index k) const {
        std::vector<Index> result;
        for (Index v = 0; v < n(); ++v)
            for (Index comm : assignments_[v])
                if (comm == k) result.push_back(v);
        return result;
    }

    // Number of non-empty communities.
    Index active_communities() const {
        std::vector<bool> seen(c_, false);
        for (const auto& comms : assignments_)
            for (Index k : comms) seen[k] = true;
        return static_cast<Index>(std::count(seen.begin(), seen.end(), true));
    }

    // Cover restricted to nodes [begin, end); community indices unchanged.
    CommunityCover restricted(Index begin, Index end) const {
        if (begin < 0 || end > n() || begin > end) throw InputError("invalid node range");
        std::vector<std::vector<Index>> assign(assignments_.begin() + begin, assignments_.begin() + end);
        return CommunityCover(std::move(assign), c_);
    }

    // Binary n x c membership matrix.
    Matrix to_binary() const {
        Matrix u = Matrix::Zero(n(), c_);
        for (Index v = 0; v < n(); ++v)
            for (Index k : assignments_[v]) u(v, k) = 1.0;
        return u;
    }

    bool operator==(const CommunityCover& other) const {
        return c_ == other.c_ && assignments_ == other.assignments_;
    }

  private:
    std::vector<std::vector<Index>> assignments_;
    Index c_;
};

}  // namespace wsbmf

#endif  // WSBMF_COVER_HPP
