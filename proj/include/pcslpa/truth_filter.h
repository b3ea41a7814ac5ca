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

#ifndef PCSLPA_TRUTH_FILTER_H_
#define PCSLPA_TRUTH_FILTER_H_

#include <cstdint>

#include "pcslpa/cover.h"
#include "pcslpa/graph.h"

namespace pcslpa {

// Ground-truth preprocessing for real networks with annotated communities.
struct TruthFilterOptions {
  // Keep only this many of the largest communities (0 keeps all).
  int64_t keep_largest = 5000;
  // Discard the quarter of the remaining communities with the lowest
  // internal density.
  bool drop_sparse_quartile = true;
  int64_t min_size = 5;
};

struct TruthFilterStats {
  int64_t input = 0;
  int64_t after_largest = 0;
  int64_t after_density = 0;
  int64_t after_dedup = 0;
  int64_t output = 0;
};

// Edges with both endpoints in `community` divided by |community| choose 2;
// 0 for communities with fewer than two members.
double InternalDensity(const Graph& g, const Cover::Community& community);

// Largest-k selection (stable for equal sizes), then the density quartile,
// then duplicate removal, then the size floor.
Cover FilterTruth(const Graph& g, const Cover& raw,
                  const TruthFilterOptions& options,
                  TruthFilterStats* stats = nullptr);

}  // namespace pcslpa

#endif  // PCSLPA_TRUTH_FILTER_H_
