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

#include "pcslpa/slpa.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "absl/strings/str_cat.h"

namespace pcslpa {
namespace {

auto FindEntry(std::vector<LabelMemory::Entry>& entries, Label label) {
  return std::lower_bound(
      entries.begin(), entries.end(), label,
      [](const LabelMemory::Entry& e, Label l) { return e.label < l; });
}

}  // namespace

void LabelMemory::Add(Label label, int64_t count) {
  auto it = FindEntry(entries_, label);
  if (it != entries_.end() && it->label == label) {
    it->count += count;
  } else {
    entries_.insert(it, Entry{label, count});
  }
  total_ += count;
}

int64_t LabelMemory::RaiseTo(Label label, int64_t count) {
  auto it = FindEntry(entries_, label);
  if (it != entries_.end() && it->label == label) {
    if (it->count >= count) return 0;
    const int64_t delta = count - it->count;
    it->count = count;
    total_ += delta;
    return delta;
  }
  if (count <= 0) return 0;
  entries_.insert(it, Entry{label, count});
  total_ += count;
  return count;
}

int64_t LabelMemory::Erase(Label label) {
  auto it = FindEntry(entries_, label);
  if (it == entries_.end() || it->label != label) return 0;
  const int64_t removed = it->count;
  total_ -= removed;
  entries_.erase(it);
  return removed;
}

int64_t LabelMemory::Count(Label label) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), label,
      [](const Entry& e, Label l) { return e.label < l; });
  return (it != entries_.end() && it->label == label) ? it->count : 0;
}

int64_t LabelMemory::MaxCount() const {
  int64_t best = 0;
  for (const Entry& e : entries_) best = std::max(best, e.count);
  return best;
}

Label LabelMemory::TopLabel() const {
  // Entries are label-ordered, so the first strict maximum wins ties.
  const Entry* best = &entries_.front();
  for (const Entry& e : entries_) {
    if (e.count > best->count) best = &e;
  }
  return best->label;
}

std::vector<Label> LabelMemory::TopLabels() const {
  const int64_t max_count = MaxCount();
  std::vector<Label> out;
  for (const Entry& e : entries_) {
    if (e.count == max_count) out.push_back(e.label);
  }
  return out;
}

absl::Status SlpaParams::Validate() const {
  if (iterations < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("iterations must be >= 1, got ", iterations));
  }
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("threshold must lie in [0, 1], got ", threshold));
  }
  return absl::OkStatus();
}

std::vector<LabelMemory> InitMemories(const Graph& g) {
  std::vector<LabelMemory> memories;
  memories.reserve(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) memories.emplace_back(v);
  return memories;
}

absl::StatusOr<Label> Speak(const LabelMemory& memory, Rng& rng) {
  if (memory.empty()) {
    return absl::FailedPreconditionError("speak from empty memory");
  }
  std::uniform_int_distribution<int64_t> pick(0, memory.total() - 1);
  int64_t x = pick(rng);
  for (const auto& e : memory.entries()) {
    if (x < e.count) return e.label;
    x -= e.count;
  }
  return memory.entries().back().label;
}

absl::StatusOr<Label> Listen(std::span<const Label> received, Rng& rng) {
  if (received.empty()) {
    return absl::FailedPreconditionError("listen with no received labels");
  }
  std::vector<Label> sorted(received.begin(), received.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Label> best;
  size_t best_run = 0;
  for (size_t i = 0; i < sorted.size();) {
    size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const size_t run = j - i;
    if (run > best_run) {
      best_run = run;
      best.assign(1, sorted[i]);
    } else if (run == best_run) {
      best.push_back(sorted[i]);
    }
    i = j;
  }
  if (best.size() == 1) return best.front();
  std::uniform_int_distribution<size_t> pick(0, best.size() - 1);
  return best[pick(rng)];
}

std::vector<NodeId> ListenerOrder(NodeId num_nodes, ListenerSchedule schedule,
                                  Rng& rng) {
  std::vector<NodeId> order(num_nodes);
  if (schedule == ListenerSchedule::kSweep) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
  } else if (num_nodes > 0) {
    std::uniform_int_distribution<NodeId> pick(0, num_nodes - 1);
    for (NodeId& v : order) v = pick(rng);
  }
  return order;
}

int64_t EvaluationPass(const Graph& g, std::vector<LabelMemory>& memories,
                       Rng& rng, ListenerSchedule schedule) {
  int64_t events = 0;
  std::vector<Label> received;
  for (NodeId listener : ListenerOrder(g.num_nodes(), schedule, rng)) {
    const auto speakers = g.Neighbors(listener);
    if (speakers.empty()) continue;
    received.clear();
    for (NodeId s : speakers) received.push_back(*Speak(memories[s], rng));
    memories[listener].Add(*Listen(received, rng));
    ++events;
  }
  return events;
}

std::vector<std::pair<Label, double>> LabelDistribution(
    const LabelMemory& memory) {
  std::vector<std::pair<Label, double>> out;
  out.reserve(memory.distinct());
  const double total = static_cast<double>(memory.total());
  for (const auto& e : memory.entries()) {
    out.emplace_back(e.label, static_cast<double>(e.count) / total);
  }
  return out;
}

std::vector<Label> RetainedLabels(const LabelMemory& memory, double r) {
  std::vector<Label> kept;
  if (memory.empty()) return kept;
  for (const auto& [label, p] : LabelDistribution(memory)) {
    if (!(p < r)) kept.push_back(label);
  }
  if (kept.empty()) kept.push_back(memory.TopLabel());
  return kept;
}

Cover PostProcess(std::span<const LabelMemory> memories, double r) {
  std::map<Label, Cover::Community> groups;
  for (NodeId v = 0; v < static_cast<NodeId>(memories.size()); ++v) {
    for (Label label : RetainedLabels(memories[v], r)) {
      groups[label].push_back(v);
    }
  }
  std::vector<Cover::Community> communities;
  communities.reserve(groups.size());
  for (auto& [label, members] : groups) communities.push_back(std::move(members));
  return Cover(std::move(communities));
}

absl::StatusOr<Cover> RunSlpa(const Graph& g, const SlpaParams& params) {
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  Rng rng(params.seed);
  std::vector<LabelMemory> memories = InitMemories(g);
  for (int t = 0; t < params.iterations; ++t) {
    EvaluationPass(g, memories, rng, params.schedule);
  }
  return PostProcess(memories, params.threshold);
}

}  // namespace pcslpa
