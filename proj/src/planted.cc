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

#include "pcslpa/planted.h"

#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pcslpa/rng.h"

namespace pcslpa {

absl::StatusOr<PlantedNetwork> GeneratePlantedOverlap(
    const PlantedOverlapParams& p) {
  if (p.communities < 1 || p.community_size < 1) {
    return absl::InvalidArgumentError(
        "community count and size must be positive");
  }
  if (p.overlap < 0) return absl::InvalidArgumentError("negative overlap");
  // Interior communities give `overlap` nodes to each neighbor.
  const int shared = p.communities > 2 ? 2 * p.overlap
                     : p.communities == 2 ? p.overlap
                                          : 0;
  if (shared >= p.community_size) {
    return absl::InvalidArgumentError(absl::StrCat(
        "overlap ", p.overlap, " leaves communities of size ",
        p.community_size, " without exclusive members"));
  }
  if (!(p.p_out >= 0.0 && p.p_in <= 1.0 && p.p_in > p.p_out)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need 0 <= p_out < p_in <= 1, got p_in=", p.p_in, " p_out=", p.p_out));
  }

  const NodeId stride = p.community_size - p.overlap;
  const NodeId n = p.communities * p.community_size -
                   (p.communities - 1) * p.overlap;
  std::vector<Cover::Community> communities(p.communities);
  for (int c = 0; c < p.communities; ++c) {
    for (NodeId i = 0; i < p.community_size; ++i) {
      communities[c].push_back(c * stride + i);
    }
  }
  Cover truth(std::move(communities));

  Rng rng(p.seed);
  std::bernoulli_distribution inside(p.p_in);
  std::bernoulli_distribution across(p.p_out);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      bool same = false;
      for (int32_t a : truth.Memberships(u)) {
        for (int32_t b : truth.Memberships(v)) same = same || a == b;
      }
      if (same ? inside(rng) : across(rng)) edges.emplace_back(u, v);
    }
  }
  auto graph = Graph::FromEdges(n, edges);
  if (!graph.ok()) return graph.status();
  return PlantedNetwork{*std::move(graph), IdMap::Sequential(n),
                        std::move(truth)};
}

}  // namespace pcslpa
