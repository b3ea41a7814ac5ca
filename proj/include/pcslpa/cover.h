// Copyright 2026 The pcslpa Authors
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

#ifndef PCSLPA_COVER_H_
#define PCSLPA_COVER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "pcslpa/graph.h"

namespace pcslpa {

// A set of possibly overlapping communities. Each community is stored as a
// sorted, duplicate-free node list; empty communities and communities with
// identical member sets are collapsed on construction (first occurrence
// wins, order otherwise preserved).
class Cover {
 public:
  using Community = std::vector<NodeId>;

  Cover() = default;
  explicit Cover(std::vector<Community> communities);

  const std::vector<Community>& communities() const { return communities_; }
  int64_t size() const { return static_cast<int64_t>(communities_.size()); }
  bool empty() const { return communities_.empty(); }

  // One past the largest member id; 0 for an empty cover.
  NodeId node_bound() const { return node_bound_; }

  // Indices of the communities containing `v`, ascending. Empty for nodes
  // that are uncovered or beyond node_bound().
  std::span<const int32_t> Memberships(NodeId v) const;

  bool Covers(NodeId v) const { return !Memberships(v).empty(); }

  // Nodes that belong to at least one community, ascending.
  std::vector<NodeId> CoveredNodes() const;

  // Drops every node for which `keep[v]` is false (or v >= keep.size()),
  // then renormalizes.
  Cover Restrict(const std::vector<bool>& keep) const;

  // Same cover with communities sorted lexicographically; used to compare
  // covers up to community order.
  Cover Canonical() const;

  friend bool operator==(const Cover& a, const Cover& b) {
    return a.communities_ == b.communities_;
  }

 private:
  std::vector<Community> communities_;
  NodeId node_bound_ = 0;
  std::vector<int64_t> member_offsets_{0};
  std::vector<int32_t> member_index_;
};

}  // namespace pcslpa

#endif  // PCSLPA_COVER_H_
