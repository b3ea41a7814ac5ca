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

#include "pcslpa/graph.h"

#include <algorithm>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace pcslpa {

NodeId IdMap::Intern(absl::string_view token) {
  auto [it, inserted] = ids_.try_emplace(std::string(token), size());
  if (inserted) tokens_.emplace_back(token);
  return it->second;
}

std::optional<NodeId> IdMap::Find(absl::string_view token) const {
  auto it = ids_.find(token);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

IdMap IdMap::Sequential(NodeId n) {
  IdMap map;
  for (NodeId i = 0; i < n; ++i) map.Intern(std::to_string(i));
  return map;
}

absl::StatusOr<Graph> Graph::FromEdges(
    NodeId num_nodes, std::span<const std::pair<NodeId, NodeId>> edges,
    int64_t* dropped_self_loops, int64_t* dropped_duplicates) {
  if (num_nodes < 0) {
    return absl::InvalidArgumentError("negative node count");
  }
  int64_t self_loops = 0;
  std::vector<std::pair<NodeId, NodeId>> canonical;
  canonical.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
      return absl::OutOfRangeError(absl::StrCat(
          "edge (", u, ", ", v, ") outside node range [0, ", num_nodes, ")"));
    }
    if (u == v) {
      ++self_loops;
      continue;
    }
    canonical.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canonical.begin(), canonical.end());
  const auto last = std::unique(canonical.begin(), canonical.end());
  const int64_t duplicates = std::distance(last, canonical.end());
  canonical.erase(last, canonical.end());

  Graph g;
  g.num_nodes_ = num_nodes;
  g.num_edges_ = static_cast<int64_t>(canonical.size());
  std::vector<int64_t> degree(num_nodes, 0);
  for (auto [u, v] : canonical) {
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(num_nodes + 1, 0);
  for (NodeId v = 0; v < num_nodes; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.adjacency_.resize(2 * canonical.size());
  std::vector<int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : canonical) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  for (NodeId v = 0; v < num_nodes; ++v) {
    std::sort(g.adjacency_.begin() + g.offsets_[v],
              g.adjacency_.begin() + g.offsets_[v + 1]);
  }

  if (dropped_self_loops != nullptr) *dropped_self_loops = self_loops;
  if (dropped_duplicates != nullptr) *dropped_duplicates = duplicates;
  return g;
}

absl::StatusOr<int64_t> Graph::Degree(NodeId v) const {
  if (v < 0 || v >= num_nodes_) {
    return absl::OutOfRangeError(
        absl::StrCat("node ", v, " outside [0, ", num_nodes_, ")"));
  }
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= num_nodes_ || v >= num_nodes_) return false;
  const auto nbrs = Neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::Edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(num_edges_);
  for (NodeId u = 0; u < num_nodes_; ++u) {
    for (NodeId v : Neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace pcslpa
