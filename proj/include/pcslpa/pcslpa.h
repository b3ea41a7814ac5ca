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

#ifndef PCSLPA_PCSLPA_H_
#define PCSLPA_PCSLPA_H_

// Pairwise-constrained speaker-listener label propagation.
//
// Must-link partners seed each other's memories and always act as speakers
// for one another; cannot-link partners never speak to each other, and a
// listener rejects any label that originated at one of its cannot-link
// partners. A repair step then (a) pushes must-linked nodes towards a
// shared dominant label and (b) strips labels shared across cannot-link
// pairs, before the usual threshold post-processing.

#include <cstdint>
#include <ostream>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pcslpa/constraints.h"
#include "pcslpa/cover.h"
#include "pcslpa/graph.h"
#include "pcslpa/rng.h"
#include "pcslpa/slpa.h"

namespace pcslpa {

struct RepairSchedule {
  enum class Kind {
    kAfterEvaluation,  // once, after the last pass
    kEveryKPasses,     // after every k-th pass, and after the last pass
  };
  Kind kind = Kind::kAfterEvaluation;
  int every = 1;
};

// Which cannot-link partners block a must-link label transfer of L to w.
enum class TransferBlockRule {
  kPartnerTopLabel,   // a cl-partner of w has L as its top label
  kPartnerHasLabel,   // a cl-partner of w holds L anywhere in memory
};

struct PcSlpaParams {
  SlpaParams base;
  RepairSchedule repair;
  TransferBlockRule block_rule = TransferBlockRule::kPartnerTopLabel;

  absl::Status Validate() const;
};

struct MustLinkRepairStats {
  int64_t pairs = 0;
  int64_t already_shared = 0;
  int64_t exchanges = 0;        // pairs whose top labels differed
  int64_t transfers = 0;        // label transfers applied
  int64_t blocked_transfers = 0;
  int64_t blocked_pairs = 0;    // pairs with at least one blocked direction
};

struct CannotLinkRepairStats {
  int64_t pairs = 0;
  int64_t deletions = 0;        // labels removed from a memory
  int64_t guard_redirects = 0;  // deletion moved to the other endpoint
  int64_t guard_hits = 0;       // shared label left in place
};

struct RepairReport {
  int64_t repair_rounds = 0;
  MustLinkRepairStats must_link;
  CannotLinkRepairStats cannot_link;
  // Evaluated on the final cover.
  int64_t cl_pairs_co_clustered = 0;
  int64_t ml_pairs_co_clustered = 0;
};

// Writes the report as "key=value" lines.
void WriteRepairReport(const RepairReport& report, std::ostream& out);

struct PcSlpaResult {
  Cover cover;
  RepairReport report;
};

// Own label per node, then every must-link pair exchanges labels (count 1).
std::vector<LabelMemory> InitConstrained(const Graph& g,
                                         const ConstraintStore& store);

// (neighbors ∪ must-link partners) \ cannot-link partners \ {listener},
// ascending.
std::vector<NodeId> ConstrainedSpeakerSet(const Graph& g,
                                          const ConstraintIndex& index,
                                          NodeId listener);

// Evaluation pass over constrained speaker sets. Labels that originated at
// a cannot-link partner of the listener are discarded before voting; if
// nothing survives the listener is unchanged. Returns the number of labels
// added.
int64_t ConstrainedEvaluationPass(
    const Graph& g, const ConstraintIndex& index,
    std::vector<LabelMemory>& memories, Rng& rng,
    ListenerSchedule schedule = ListenerSchedule::kSweep);

// For each must-link pair in canonical order whose top labels differ, each
// endpoint receives the other's top label with its count raised to the
// receiver's current maximum, unless the transfer is blocked under `rule`.
MustLinkRepairStats RepairMustLink(
    std::vector<LabelMemory>& memories, const ConstraintStore& store,
    const ConstraintIndex& index,
    TransferBlockRule rule = TransferBlockRule::kPartnerTopLabel);

// For each cannot-link pair in canonical order and each label both hold,
// removes the label from the endpoint with the smaller count (ties random).
// A deletion that would empty a memory is applied to the other endpoint
// instead; if that would empty it too, the label stays (guard hit).
CannotLinkRepairStats RepairCannotLink(std::vector<LabelMemory>& memories,
                                       const ConstraintStore& store, Rng& rng);

absl::StatusOr<PcSlpaResult> RunPcSlpa(const Graph& g,
                                       const ConstraintStore& store,
                                       const PcSlpaParams& params);

}  // namespace pcslpa

#endif  // PCSLPA_PCSLPA_H_
