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

#include "pcslpa/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"

namespace pcslpa {
namespace {

// -p log2 p for p = count / n, with 0 log 0 = 0.
double PartialEntropy(int64_t count, double n) {
  if (count <= 0) return 0.0;
  const double p = static_cast<double>(count) / n;
  return -p * std::log2(p);
}

}  // namespace

double NormalizedConditionalEntropy(const Cover& x, const Cover& y,
                                    int64_t universe_size) {
  if (x.empty()) return 1.0;
  const double n = static_cast<double>(universe_size);
  std::vector<int64_t> overlap(y.size());
  double sum = 0.0;
  for (const auto& xk : x.communities()) {
    std::fill(overlap.begin(), overlap.end(), 0);
    for (NodeId v : xk) {
      for (int32_t l : y.Memberships(v)) ++overlap[l];
    }
    const int64_t size_x = static_cast<int64_t>(xk.size());
    const double h_x =
        PartialEntropy(size_x, n) + PartialEntropy(universe_size - size_x, n);
    if (h_x <= 0.0) continue;

    double best = h_x;
    for (int64_t l = 0; l < y.size(); ++l) {
      const int64_t both = overlap[l];
      const int64_t only_x = size_x - both;
      const int64_t only_y =
          static_cast<int64_t>(y.communities()[l].size()) - both;
      const int64_t neither = universe_size - both - only_x - only_y;
      const double h11 = PartialEntropy(both, n);
      const double h00 = PartialEntropy(neither, n);
      const double h10 = PartialEntropy(only_x, n);
      const double h01 = PartialEntropy(only_y, n);
      if (h11 + h00 < h01 + h10) continue;
      const double joint = h11 + h00 + h10 + h01;
      const double h_y = PartialEntropy(both + only_y, n) +
                         PartialEntropy(neither + only_x, n);
      best = std::min(best, joint - h_y);
    }
    sum += std::clamp(best / h_x, 0.0, 1.0);
  }
  return sum / static_cast<double>(x.size());
}

absl::StatusOr<double> OverlappingNmi(const Cover& x, const Cover& y,
                                      std::span<const NodeId> universe) {
  if (universe.empty()) return absl::InvalidArgumentError("empty universe");
  NodeId bound = 0;
  for (NodeId v : universe) {
    if (v < 0) return absl::InvalidArgumentError("negative node in universe");
    bound = std::max(bound, v + 1);
  }
  std::vector<bool> keep(bound, false);
  int64_t size = 0;
  for (NodeId v : universe) {
    if (!keep[v]) {
      keep[v] = true;
      ++size;
    }
  }
  const Cover rx = x.Restrict(keep);
  const Cover ry = y.Restrict(keep);
  if (rx.empty() && ry.empty()) return 1.0;
  const double hxy = NormalizedConditionalEntropy(rx, ry, size);
  const double hyx = NormalizedConditionalEntropy(ry, rx, size);
  return std::clamp(1.0 - 0.5 * (hxy + hyx), 0.0, 1.0);
}

CoverStats ComputeCoverStats(const Cover& cover, int64_t num_nodes) {
  CoverStats stats;
  stats.community_count = cover.size();
  if (cover.empty()) return stats;
  stats.min_size = std::numeric_limits<int64_t>::max();
  for (const auto& c : cover.communities()) {
    const int64_t s = static_cast<int64_t>(c.size());
    stats.min_size = std::min(stats.min_size, s);
    stats.max_size = std::max(stats.max_size, s);
  }
  for (NodeId v = 0; v < cover.node_bound(); ++v) {
    const int64_t k = static_cast<int64_t>(cover.Memberships(v).size());
    if (k > 0) ++stats.covered_nodes;
    if (k > 1) ++stats.overlapping_nodes;
    stats.max_memberships = std::max(stats.max_memberships, k);
  }
  const int64_t denom = num_nodes > 0 ? num_nodes : stats.covered_nodes;
  stats.overlapping_fraction =
      static_cast<double>(stats.overlapping_nodes) / static_cast<double>(denom);
  return stats;
}

}  // namespace pcslpa
