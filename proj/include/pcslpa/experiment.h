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

#ifndef PCSLPA_EXPERIMENT_H_
#define PCSLPA_EXPERIMENT_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pcslpa/constraints.h"
#include "pcslpa/cover.h"
#include "pcslpa/graph.h"
#include "pcslpa/io.h"
#include "pcslpa/pcslpa.h"
#include "pcslpa/slpa.h"

namespace pcslpa {

enum class Algorithm { kSlpa, kPcSlpa };

// Which nodes NMI is computed over.
enum class UniverseMode {
  kCovered,  // nodes in at least one ground-truth community
  kAll,      // every graph node
};

absl::StatusOr<Algorithm> ParseAlgorithm(absl::string_view name);
std::string AlgorithmName(Algorithm algorithm);
absl::StatusOr<UniverseMode> ParseUniverseMode(absl::string_view name);

struct Dataset {
  std::string name;
  Graph graph;
  IdMap ids;
  Cover truth;
};

absl::StatusOr<Dataset> LoadDataset(const std::string& name,
                                    const std::string& edges_path,
                                    const std::string& truth_path,
                                    const CoverLoadOptions& truth_options);

std::vector<NodeId> EvaluationUniverse(const Dataset& data, UniverseMode mode);

struct ExperimentConfig {
  std::string network = "network";
  std::string edges_path;
  std::string truth_path;
  Algorithm algorithm = Algorithm::kPcSlpa;
  // Ignored by SLPA, which always runs a single cell at pct 0.
  std::vector<double> budget_pcts = {0.01, 0.02, 0.03, 0.04, 0.05};
  int iterations = 100;
  double threshold = 0.1;
  int runs = 20;
  uint64_t seed = 0;
  int64_t min_comm_size = 1;
  UniverseMode universe = UniverseMode::kCovered;
  double init_fraction = 0.5;
  ListenerSchedule schedule = ListenerSchedule::kSweep;
  RepairSchedule repair;
  TransferBlockRule block_rule = TransferBlockRule::kPartnerTopLabel;
  // Worker threads for independent runs; results do not depend on it.
  int threads = 1;

  absl::Status Validate() const;
};

struct RunResult {
  std::string network;
  std::string algorithm;  // "slpa", "pcslpa", or an external method name
  double pct = 0.0;
  int run = 0;
  uint64_t seed = 0;
  double nmi = 0.0;
  double millis = 0.0;
  int64_t queries = 0;
  RepairReport report;
};

// Seed for run `run` of budget cell `pct`: the base seed xor a SplitMix64
// hash of the pct bit pattern and the run index.
uint64_t DeriveRunSeed(uint64_t base, double pct, int run);

// Runs every (pct, run) cell against a loaded dataset. Results are ordered
// by pct then run regardless of thread count.
absl::StatusOr<std::vector<RunResult>> RunExperiment(
    const ExperimentConfig& config, const Dataset& data);

// Loads config.edges_path / config.truth_path, then runs.
absl::StatusOr<std::vector<RunResult>> RunExperiment(
    const ExperimentConfig& config);

// Scores an externally produced cover against the dataset's ground truth.
absl::StatusOr<RunResult> ScoreExternalCover(const Dataset& data,
                                             const std::string& algorithm,
                                             const Cover& cover,
                                             UniverseMode universe);

// Results CSV, header
//   network,algo,pct,seed,nmi,ms,run,queries,ml_exchanges,
//   ml_blocked_transfers,cl_deletions,cl_guard_hits,cl_co_clustered
// With include_timing = false the ms column is left empty so that output is
// reproducible byte for byte.
void WriteResultsCsv(const std::vector<RunResult>& results, std::ostream& out,
                     bool include_timing = true);
absl::StatusOr<std::vector<RunResult>> ReadResultsCsv(std::istream& in);

}  // namespace pcslpa

#endif  // PCSLPA_EXPERIMENT_H_
