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

#ifndef PCSLPA_PLANTED_H_
#define PCSLPA_PLANTED_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "pcslpa/cover.h"
#include "pcslpa/graph.h"

namespace pcslpa {

// A chain of equally sized communities in which consecutive communities
// share `overlap` nodes. Node pairs that share a community are joined with
// probability p_in, all other pairs with probability p_out. Test fixture
// generator; not an LFR benchmark.
struct PlantedOverlapParams {
  int communities = 2;
  int community_size = 10;
  int overlap = 0;
  double p_in = 0.9;
  double p_out = 0.05;
  uint64_t seed = 0;
};

struct PlantedNetwork {
  Graph graph;
  IdMap ids;
  Cover truth;
};

// Node count is communities * community_size - (communities - 1) * overlap.
// Fails unless 0 <= p_out < p_in <= 1 and the shared blocks leave every
// community with at least one node of its own.
absl::StatusOr<PlantedNetwork> GeneratePlantedOverlap(
    const PlantedOverlapParams& params);

}  // namespace pcslpa

#endif  // PCSLPA_PLANTED_H_
