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

#ifndef PCSLPA_METRICS_H_
#define PCSLPA_METRICS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "pcslpa/cover.h"
#include "pcslpa/graph.h"

namespace pcslpa {

// Overlapping normalized mutual information (Lancichinetti, Fortunato and
// Kertesz, 2009). Each community is treated as a binary membership variable
// over `universe`; for every community X_k the best-matching Y_l minimizes
// H(X_k | Y_l) / H(X_k), where only candidates with
// h(11) + h(00) >= h(01) + h(10) are admissible (otherwise the conditional
// entropy is taken to be H(X_k)). The score is
//   1 - (H(X|Y)_norm + H(Y|X)_norm) / 2.
// Both covers are restricted to `universe` first; communities with zero
// entropy contribute 0. Entropies are in bits. Fails on an empty universe.
// The result lies in [0, 1] and is symmetric in its arguments.
absl::StatusOr<double> OverlappingNmi(const Cover& x, const Cover& y,
                                      std::span<const NodeId> universe);

// Normalized conditional entropy H(X|Y)_norm, exposed for testing. Covers
// must already be restricted to a universe of `universe_size` nodes.
double NormalizedConditionalEntropy(const Cover& x, const Cover& y,
                                    int64_t universe_size);

struct CoverStats {
  int64_t community_count = 0;
  int64_t min_size = 0;
  int64_t max_size = 0;
  int64_t covered_nodes = 0;
  int64_t overlapping_nodes = 0;   // nodes in two or more communities
  double overlapping_fraction = 0.0;  // of num_nodes
  int64_t max_memberships = 0;
};

// `num_nodes` is the denominator for overlapping_fraction; pass 0 to use
// the covered node count.
CoverStats ComputeCoverStats(const Cover& cover, int64_t num_nodes = 0);

}  // namespace pcslpa

#endif  // PCSLPA_METRICS_H_
