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

#include "pcslpa/pcslpa.h"

#include <algorithm>
#include <iterator>

#include "absl/strings/str_cat.h"

namespace pcslpa {
namespace {

bool SharesCommunity(const Cover& cover, NodeId u, NodeId v) {
  const auto mu = cover.Memberships(u);
  const auto mv = cover.Memberships(v);
  auto a = mu.begin();
  auto b = mv.begin();
  while (a != mu.end() && b != mv.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

bool TransferBlocked(const std::vector<LabelMemory>& memories,
                     const ConstraintIndex& index, NodeId receiver,
                     Label label, TransferBlockRule rule) {
  for (NodeId partner : index.CannotLinkPartners(receiver)) {
    const LabelMemory& m = memories[partner];
    if (m.empty()) continue;
    if (rule == TransferBlockRule::kPartnerTopLabel ? m.TopLabel() == label
                                                     : m.Contains(label)) {
      return true;
    }
  }
  return false;
}

void Accumulate(MustLinkRepairStats& into, const MustLinkRepairStats& s) {
  into.pairs += s.pairs;
  into.already_shared += s.already_shared;
  into.exchanges += s.exchanges;
  into.transfers += s.transfers;
  into.blocked_transfers += s.blocked_transfers;
  into.blocked_pairs += s.blocked_pairs;
}

void Accumulate(CannotLinkRepairStats& into, const CannotLinkRepairStats& s) {
  into.pairs += s.pairs;
  into.deletions += s.deletions;
  into.guard_redirects += s.guard_redirects;
  into.guard_hits += s.guard_hits;
}

}  // namespace

absl::Status PcSlpaParams::Validate() const {
  if (absl::Status s = base.Validate(); !s.ok()) return s;
  if (repair.kind == RepairSchedule::Kind::kEveryKPasses && repair.every < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("repair interval must be >= 1, got ", repair.every));
  }
  return absl::OkStatus();
}

void WriteRepairReport(const RepairReport& r, std::ostream& out) {
  out << "repair_rounds=" << r.repair_rounds << '\n'
      << "ml_pairs=" << r.must_link.pairs << '\n'
      << "ml_already_shared=" << r.must_link.already_shared << '\n'
      << "ml_exchanges=" << r.must_link.exchanges << '\n'
      << "ml_transfers=" << r.must_link.transfers << '\n'
      << "ml_blocked_transfers=" << r.must_link.blocked_transfers << '\n'
      << "ml_blocked_pairs=" << r.must_link.blocked_pairs << '\n'
      << "cl_pairs=" << r.cannot_link.pairs << '\n'
      << "cl_deletions=" << r.cannot_link.deletions << '\n'
      << "cl_guard_redirects=" << r.cannot_link.guard_redirects << '\n'
      << "cl_guard_hits=" << r.cannot_link.guard_hits << '\n'
      << "cl_pairs_co_clustered=" << r.cl_pairs_co_clustered << '\n'
      << "ml_pairs_co_clustered=" << r.ml_pairs_co_clustered << '\n';
}

std::vector<LabelMemory> InitConstrained(const Graph& g,
                                         const ConstraintStore& store) {
  std::vector<LabelMemory> memories = InitMemories(g);
  for (const NodePair& p : store.must_links()) {
    if (p.second >= g.num_nodes()) continue;
    memories[p.first].Add(p.second);
    memories[p.second].Add(p.first);
  }
  return memories;
}

std::vector<NodeId> ConstrainedSpeakerSet(const Graph& g,
                                          const ConstraintIndex& index,
                                          NodeId listener) {
  const auto nbrs = g.Neighbors(listener);
  const auto must = index.MustLinkPartners(listener);
  const auto cannot = index.CannotLinkPartners(listener);
  std::vector<NodeId> merged;
  merged.reserve(nbrs.size() + must.size());
  std::set_union(nbrs.begin(), nbrs.end(), must.begin(), must.end(),
                 std::back_inserter(merged));
  std::vector<NodeId> speakers;
  speakers.reserve(merged.size());
  std::set_difference(merged.begin(), merged.end(), cannot.begin(),
                      cannot.end(), std::back_inserter(speakers));
  std::erase(speakers, listener);
  return speakers;
}

int64_t ConstrainedEvaluationPass(const Graph& g, const ConstraintIndex& index,
                                  std::vector<LabelMemory>& memories, Rng& rng,
                                  ListenerSchedule schedule) {
  int64_t events = 0;
  std::vector<Label> received;
  for (NodeId listener : ListenerOrder(g.num_nodes(), schedule, rng)) {
    const std::vector<NodeId> speakers =
        ConstrainedSpeakerSet(g, index, listener);
    if (speakers.empty()) continue;
    received.clear();
    for (NodeId s : speakers) received.push_back(*Speak(memories[s], rng));
    // A label may reach the listener through third parties even though its
    // origin is a cannot-link partner.
    std::erase_if(received, [&](Label l) {
      return index.IsCannotLink(listener, l);
    });
    if (received.empty()) continue;
    memories[listener].Add(*Listen(received, rng));
    ++events;
  }
  return events;
}

MustLinkRepairStats RepairMustLink(std::vector<LabelMemory>& memories,
                                   const ConstraintStore& store,
                                   const ConstraintIndex& index,
                                   TransferBlockRule rule) {
  MustLinkRepairStats stats;
  for (const NodePair& p : store.must_links()) {
    LabelMemory& mu = memories[p.first];
    LabelMemory& mv = memories[p.second];
    ++stats.pairs;
    if (mu.empty() || mv.empty()) continue;
    const Label top_u = mu.TopLabel();
    const Label top_v = mv.TopLabel();
    if (top_u == top_v) {
      ++stats.already_shared;
      continue;
    }
    ++stats.exchanges;
    const bool block_u =
        TransferBlocked(memories, index, p.first, top_v, rule);
    const bool block_v =
        TransferBlocked(memories, index, p.second, top_u, rule);
    const int64_t max_u = mu.MaxCount();
    const int64_t max_v = mv.MaxCount();
    if (block_u) {
      ++stats.blocked_transfers;
    } else {
      mu.RaiseTo(top_v, max_u);
      ++stats.transfers;
    }
    if (block_v) {
      ++stats.blocked_transfers;
    } else {
      mv.RaiseTo(top_u, max_v);
      ++stats.transfers;
    }
    if (block_u || block_v) ++stats.blocked_pairs;
  }
  return stats;
}

CannotLinkRepairStats RepairCannotLink(std::vector<LabelMemory>& memories,
                                       const ConstraintStore& store, Rng& rng) {
  CannotLinkRepairStats stats;
  std::vector<Label> common;
  for (const NodePair& p : store.cannot_links()) {
    ++stats.pairs;
    LabelMemory& mu = memories[p.first];
    LabelMemory& mv = memories[p.second];
    common.clear();
    const auto eu = mu.entries();
    const auto ev = mv.entries();
    for (auto a = eu.begin(), b = ev.begin(); a != eu.end() && b != ev.end();) {
      if (a->label == b->label) {
        common.push_back(a->label);
        ++a;
        ++b;
      } else if (a->label < b->label) {
        ++a;
      } else {
        ++b;
      }
    }
    for (Label label : common) {
      const int64_t cu = mu.Count(label);
      const int64_t cv = mv.Count(label);
      bool lose_u = cu < cv;
      if (cu == cv) lose_u = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
      LabelMemory& loser = lose_u ? mu : mv;
      LabelMemory& other = lose_u ? mv : mu;
      if (loser.distinct() > 1) {
        loser.Erase(label);
        ++stats.deletions;
      } else if (other.distinct() > 1) {
        other.Erase(label);
        ++stats.deletions;
        ++stats.guard_redirects;
      } else {
        ++stats.guard_hits;
      }
    }
  }
  return stats;
}

absl::StatusOr<PcSlpaResult> RunPcSlpa(const Graph& g,
                                       const ConstraintStore& store,
                                       const PcSlpaParams& params) {
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  auto index = ConstraintIndex::Build(store, g.num_nodes());
  if (!index.ok()) return index.status();

  Rng rng(params.base.seed);
  std::vector<LabelMemory> memories = InitConstrained(g, store);
  PcSlpaResult result;
  auto repair = [&] {
    ++result.report.repair_rounds;
    Accumulate(result.report.must_link,
               RepairMustLink(memories, store, *index, params.block_rule));
    Accumulate(result.report.cannot_link,
               RepairCannotLink(memories, store, rng));
  };

  const int passes = params.base.iterations;
  for (int t = 1; t <= passes; ++t) {
    ConstrainedEvaluationPass(g, *index, memories, rng, params.base.schedule);
    if (params.repair.kind == RepairSchedule::Kind::kEveryKPasses &&
        t % params.repair.every == 0 && t < passes) {
      repair();
    }
  }
  repair();

  result.cover = PostProcess(memories, params.base.threshold);
  for (const NodePair& p : store.cannot_links()) {
    if (SharesCommunity(result.cover, p.first, p.second)) {
      ++result.report.cl_pairs_co_clustered;
    }
  }
  for (const NodePair& p : store.must_links()) {
    if (SharesCommunity(result.cover, p.first, p.second)) {
      ++result.report.ml_pairs_co_clustered;
    }
  }
  return result;
}

}  // namespace pcslpa
