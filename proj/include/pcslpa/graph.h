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

#ifndef PCSLPA_GRAPH_H_
#define PCSLPA_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace pcslpa {

// Dense internal node index in [0, num_nodes).
using NodeId = int32_t;

// Bijection between the tokens found in input files and dense node ids.
// Ids are handed out in first-appearance order.
class IdMap {
 public:
  IdMap() = default;

  // Returns the id for `token`, assigning the next free id if it is new.
  NodeId Intern(absl::string_view token);

  std::optional<NodeId> Find(absl::string_view token) const;

  // Requires 0 <= id < size().
  const std::string& External(NodeId id) const { return tokens_[id]; }

  NodeId size() const { return static_cast<NodeId>(tokens_.size()); }

  // Identity map "0".."n-1", used for generated networks.
  static IdMap Sequential(NodeId n);

 private:
  std::vector<std::string> tokens_;
  absl::flat_hash_map<std::string, NodeId> ids_;
};

// Undirected simple graph in compressed sparse row form. Neighbor lists are
// sorted, free of self-loops and duplicates, and symmetric. Immutable once
// built.
class Graph {
 public:
  Graph() = default;

  // Builds a graph over `num_nodes` nodes. Self-loops and repeated edges
  // (in either orientation) are dropped; `dropped_self_loops` and
  // `dropped_duplicates` receive the counts when non-null. Fails if an
  // endpoint is out of range.
  static absl::StatusOr<Graph> FromEdges(
      NodeId num_nodes, std::span<const std::pair<NodeId, NodeId>> edges,
      int64_t* dropped_self_loops = nullptr,
      int64_t* dropped_duplicates = nullptr);

  NodeId num_nodes() const { return num_nodes_; }
  int64_t num_edges() const { return num_edges_; }

  // Requires 0 <= v < num_nodes().
  std::span<const NodeId> Neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  // Checked degree lookup.
  absl::StatusOr<int64_t> Degree(NodeId v) const;

  bool HasEdge(NodeId u, NodeId v) const;

  // Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<std::pair<NodeId, NodeId>> Edges() const;

 private:
  NodeId num_nodes_ = 0;
  int64_t num_edges_ = 0;
  std::vector<int64_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

}  // namespace pcslpa

#endif  // PCSLPA_GRAPH_H_
