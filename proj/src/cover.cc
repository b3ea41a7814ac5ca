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

#include "pcslpa/cover.h"

#include <algorithm>
#include <set>
#include <utility>

namespace pcslpa {

Cover::Cover(std::vector<Community> communities) {
  std::set<Community> seen;
  for (Community& c : communities) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty() || !seen.insert(c).second) continue;
    node_bound_ = std::max(node_bound_, c.back() + 1);
    communities_.push_back(std::move(c));
  }

  std::vector<int64_t> counts(node_bound_, 0);
  for (const Community& c : communities_) {
    for (NodeId v : c) ++counts[v];
  }
  member_offsets_.assign(node_bound_ + 1, 0);
  for (NodeId v = 0; v < node_bound_; ++v) {
    member_offsets_[v + 1] = member_offsets_[v] + counts[v];
  }
  member_index_.resize(member_offsets_.back());
  std::vector<int64_t> cursor(member_offsets_.begin(),
                              member_offsets_.end() - 1);
  for (int32_t k = 0; k < static_cast<int32_t>(communities_.size()); ++k) {
    for (NodeId v : communities_[k]) member_index_[cursor[v]++] = k;
  }
}

std::span<const int32_t> Cover::Memberships(NodeId v) const {
  if (v < 0 || v >= node_bound_) return {};
  return {member_index_.data() + member_offsets_[v],
          member_index_.data() + member_offsets_[v + 1]};
}

std::vector<NodeId> Cover::CoveredNodes() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < node_bound_; ++v) {
    if (member_offsets_[v + 1] > member_offsets_[v]) out.push_back(v);
  }
  return out;
}

Cover Cover::Restrict(const std::vector<bool>& keep) const {
  std::vector<Community> kept;
  kept.reserve(communities_.size());
  for (const Community& c : communities_) {
    Community r;
    for (NodeId v : c) {
      if (static_cast<size_t>(v) < keep.size() && keep[v]) r.push_back(v);
    }
    kept.push_back(std::move(r));
  }
  return Cover(std::move(kept));
}

Cover Cover::Canonical() const {
  std::vector<Community> sorted = communities_;
  std::sort(sorted.begin(), sorted.end());
  return Cover(std::move(sorted));
}

}  // namespace pcslpa
