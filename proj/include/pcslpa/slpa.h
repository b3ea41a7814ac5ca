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

#ifndef PCSLPA_SLPA_H_
#define PCSLPA_SLPA_H_

// Speaker-listener label propagation (SLPA).
//
// Every node keeps a memory of the labels it has heard. In each evaluation
// pass every node listens once: each of its speakers draws a label from its
// own memory with probability proportional to frequency, and the listener
// records the most popular received label. Post-processing turns each
// memory into a distribution and keeps the labels whose probability is at
// least a threshold r; nodes that keep the same label form a community.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pcslpa/cover.h"
#include "pcslpa/graph.h"
#include "pcslpa/rng.h"

namespace pcslpa {

// Labels are the ids of the nodes that originated them.
using Label = NodeId;

// Multiset of labels with occurrence counts. Entries are kept sorted by
// label so iteration order (and therefore sampling) is deterministic.
class LabelMemory {
 public:
  struct Entry {
    Label label;
    int64_t count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  LabelMemory() = default;
  explicit LabelMemory(Label own) : entries_{{own, 1}}, total_(1) {}

  // Adds `count` (> 0) occurrences of `label`.
  void Add(Label label, int64_t count = 1);

  // Sets the count of `label` to max(current, count). Returns the increase.
  int64_t RaiseTo(Label label, int64_t count);

  // Removes every occurrence of `label`. Returns the number removed.
  int64_t Erase(Label label);

  int64_t Count(Label label) const;
  bool Contains(Label label) const { return Count(label) > 0; }

  // Highest count; 0 when empty.
  int64_t MaxCount() const;

  // Label with the highest count, ties broken towards the lowest label.
  // Requires !empty().
  Label TopLabel() const;

  // Every label whose count equals MaxCount(), ascending.
  std::vector<Label> TopLabels() const;

  std::span<const Entry> entries() const { return entries_; }
  int64_t total() const { return total_; }
  int64_t distinct() const { return static_cast<int64_t>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const LabelMemory&, const LabelMemory&) = default;

 private:
  std::vector<Entry> entries_;
  int64_t total_ = 0;
};

enum class ListenerSchedule {
  // Every node listens exactly once per pass, in a freshly shuffled order.
  kSweep,
  // Each pass draws num_nodes listeners uniformly with replacement.
  kUniformDraws,
};

struct SlpaParams {
  int iterations = 100;  // T
  double threshold = 0.1;  // r
  uint64_t seed = 0;
  ListenerSchedule schedule = ListenerSchedule::kSweep;

  absl::Status Validate() const;
};

// {v: 1} for every node v.
std::vector<LabelMemory> InitMemories(const Graph& g);

// Draws a label with probability count / total.
absl::StatusOr<Label> Speak(const LabelMemory& memory, Rng& rng);

// Returns a label of maximal multiplicity in `received`, ties broken
// uniformly at random.
absl::StatusOr<Label> Listen(std::span<const Label> received, Rng& rng);

// Listener order for one pass under `schedule`.
std::vector<NodeId> ListenerOrder(NodeId num_nodes, ListenerSchedule schedule,
                                  Rng& rng);

// One evaluation pass. Listeners without speakers are left unchanged.
// Returns the number of listening events that added a label.
int64_t EvaluationPass(const Graph& g, std::vector<LabelMemory>& memories,
                       Rng& rng,
                       ListenerSchedule schedule = ListenerSchedule::kSweep);

// Label probabilities count / total in label order.
std::vector<std::pair<Label, double>> LabelDistribution(
    const LabelMemory& memory);

// Labels of `memory` that survive threshold `r` (probability < r is
// deleted). If nothing survives the top label is kept.
std::vector<Label> RetainedLabels(const LabelMemory& memory, double r);

// Groups nodes by retained label; one community per label, in label order.
Cover PostProcess(std::span<const LabelMemory> memories, double r);

absl::StatusOr<Cover> RunSlpa(const Graph& g, const SlpaParams& params);

}  // namespace pcslpa

#endif  // PCSLPA_SLPA_H_
