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

#include "pcslpa/truth_filter.h"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace pcslpa {

double InternalDensity(const Graph& g, const Cover::Community& community) {
  const int64_t s = static_cast<int64_t>(community.size());
  if (s < 2) return 0.0;
  int64_t inside = 0;
  for (NodeId u : community) {
    if (u >= g.num_nodes()) continue;
    for (NodeId v : g.Neighbors(u)) {
      if (u < v && std::binary_search(community.begin(), community.end(), v)) {
        ++inside;
      }
    }
  }
  return static_cast<double>(inside) / static_cast<double>(s * (s - 1) / 2);
}

Cover FilterTruth(const Graph& g, const Cover& raw,
                  const TruthFilterOptions& options, TruthFilterStats* stats) {
  TruthFilterStats local;
  std::vector<Cover::Community> communities = raw.communities();
  local.input = static_cast<int64_t>(communities.size());

  if (options.keep_largest > 0 &&
      static_cast<int64_t>(communities.size()) > options.keep_largest) {
    std::stable_sort(communities.begin(), communities.end(),
                     [](const auto& a, const auto& b) {
                       return a.size() > b.size();
                     });
    communities.resize(options.keep_largest);
  }
  local.after_largest = static_cast<int64_t>(communities.size());

  if (options.drop_sparse_quartile && !communities.empty()) {
    std::vector<double> density(communities.size());
    for (size_t i = 0; i < communities.size(); ++i) {
      density[i] = InternalDensity(g, communities[i]);
    }
    std::vector<size_t> order(communities.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return density[a] < density[b];
    });
    std::vector<bool> drop(communities.size(), false);
    const size_t quartile = communities.size() / 4;
    for (size_t i = 0; i < quartile; ++i) drop[order[i]] = true;
    std::vector<Cover::Community> kept;
    for (size_t i = 0; i < communities.size(); ++i) {
      if (!drop[i]) kept.push_back(std::move(communities[i]));
    }
    communities = std::move(kept);
  }
  local.after_density = static_cast<int64_t>(communities.size());

  Cover deduped(std::move(communities));
  local.after_dedup = deduped.size();

  std::vector<Cover::Community> sized;
  for (const auto& c : deduped.communities()) {
    if (static_cast<int64_t>(c.size()) >= options.min_size) sized.push_back(c);
  }
  Cover out(std::move(sized));
  local.output = out.size();
  if (stats != nullptr) *stats = local;
  return out;
}

}  // namespace pcslpa
