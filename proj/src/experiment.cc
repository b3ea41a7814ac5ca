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

#include "pcslpa/experiment.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>
#include <utility>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "pcslpa/metrics.h"
#include "pcslpa/rng.h"

namespace pcslpa {
namespace {

constexpr char kCsvHeader[] =
    "network,algo,pct,seed,nmi,ms,run,queries,ml_exchanges,"
    "ml_blocked_transfers,cl_deletions,cl_guard_hits,cl_co_clustered";

// Stream tag for constraint selection, kept apart from propagation.
constexpr uint64_t kSelectionStream = 1;

struct Cell {
  double pct;
  int run;
};

absl::StatusOr<RunResult> RunCell(const ExperimentConfig& config,
                                  const Dataset& data,
                                  const std::vector<NodeId>& universe,
                                  const Cell& cell) {
  RunResult result;
  result.network = config.network;
  result.algorithm = AlgorithmName(config.algorithm);
  result.pct = cell.pct;
  result.run = cell.run;
  result.seed = DeriveRunSeed(config.seed, cell.pct, cell.run);

  SlpaParams slpa;
  slpa.iterations = config.iterations;
  slpa.threshold = config.threshold;
  slpa.seed = result.seed;
  slpa.schedule = config.schedule;

  const auto start = std::chrono::steady_clock::now();
  Cover cover;
  if (config.algorithm == Algorithm::kSlpa) {
    auto detected = RunSlpa(data.graph, slpa);
    if (!detected.ok()) return detected.status();
    cover = *std::move(detected);
  } else {
    auto budget = Budget::ForPairs(cell.pct, data.graph.num_nodes());
    if (!budget.ok()) return budget.status();
    GroundTruthOracle oracle(data.truth);
    Rng selection_rng(SubstreamSeed(result.seed, kSelectionStream));
    SelectionOptions options;
    options.init_fraction = config.init_fraction;
    auto selection = SelectConstraints(data.graph, oracle, *budget, options,
                                       selection_rng);
    if (!selection.ok()) return selection.status();
    result.queries = selection->store.queries_used();

    PcSlpaParams params;
    params.base = slpa;
    params.repair = config.repair;
    params.block_rule = config.block_rule;
    auto detected = RunPcSlpa(data.graph, selection->store, params);
    if (!detected.ok()) return detected.status();
    cover = std::move(detected->cover);
    result.report = detected->report;
  }
  auto nmi = OverlappingNmi(data.truth, cover, universe);
  if (!nmi.ok()) return nmi.status();
  result.nmi = *nmi;
  result.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return result;
}

}  // namespace

absl::StatusOr<Algorithm> ParseAlgorithm(absl::string_view name) {
  if (name == "slpa") return Algorithm::kSlpa;
  if (name == "pcslpa") return Algorithm::kPcSlpa;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown algorithm '", name, "' (expected slpa|pcslpa)"));
}

std::string AlgorithmName(Algorithm algorithm) {
  return algorithm == Algorithm::kSlpa ? "slpa" : "pcslpa";
}

absl::StatusOr<UniverseMode> ParseUniverseMode(absl::string_view name) {
  if (name == "covered") return UniverseMode::kCovered;
  if (name == "all") return UniverseMode::kAll;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown universe '", name, "' (expected covered|all)"));
}

absl::StatusOr<Dataset> LoadDataset(const std::string& name,
                                    const std::string& edges_path,
                                    const std::string& truth_path,
                                    const CoverLoadOptions& truth_options) {
  auto loaded = LoadEdgeListFile(edges_path);
  if (!loaded.ok()) return loaded.status();
  auto truth = LoadCoverFile(truth_path, loaded->ids, truth_options);
  if (!truth.ok()) return truth.status();
  return Dataset{name, std::move(loaded->graph), std::move(loaded->ids),
                 *std::move(truth)};
}

std::vector<NodeId> EvaluationUniverse(const Dataset& data, UniverseMode mode) {
  if (mode == UniverseMode::kCovered) {
    std::vector<NodeId> covered = data.truth.CoveredNodes();
    std::erase_if(covered,
                  [&](NodeId v) { return v >= data.graph.num_nodes(); });
    return covered;
  }
  std::vector<NodeId> all(data.graph.num_nodes());
  for (NodeId v = 0; v < data.graph.num_nodes(); ++v) all[v] = v;
  return all;
}

absl::Status ExperimentConfig::Validate() const {
  if (runs < 1) return absl::InvalidArgumentError("runs must be >= 1");
  if (threads < 1) return absl::InvalidArgumentError("threads must be >= 1");
  if (network.find(',') != std::string::npos) {
    return absl::InvalidArgumentError("network name must not contain ','");
  }
  if (algorithm == Algorithm::kPcSlpa && budget_pcts.empty()) {
    return absl::InvalidArgumentError("pcslpa needs at least one budget pct");
  }
  for (double pct : budget_pcts) {
    if (!(pct >= 0.0 && pct <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("budget pct must lie in [0, 1], got ", pct));
    }
  }
  if (!(init_fraction > 0.0 && init_fraction <= 1.0)) {
    return absl::InvalidArgumentError("init_fraction must lie in (0, 1]");
  }
  PcSlpaParams params;
  params.base.iterations = iterations;
  params.base.threshold = threshold;
  params.repair = repair;
  return params.Validate();
}

uint64_t DeriveRunSeed(uint64_t base, double pct, int run) {
  const uint64_t cell = MixBits(std::bit_cast<uint64_t>(pct)) ^
                        MixBits(static_cast<uint64_t>(run) + 1);
  return base ^ MixBits(cell);
}

absl::StatusOr<std::vector<RunResult>> RunExperiment(
    const ExperimentConfig& config, const Dataset& data) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  const std::vector<NodeId> universe = EvaluationUniverse(data, config.universe);
  if (universe.empty()) {
    return absl::FailedPreconditionError(
        absl::StrCat(data.name, ": evaluation universe is empty"));
  }

  std::vector<Cell> cells;
  const std::vector<double> pcts = config.algorithm == Algorithm::kSlpa
                                       ? std::vector<double>{0.0}
                                       : config.budget_pcts;
  for (double pct : pcts) {
    for (int run = 0; run < config.runs; ++run) cells.push_back({pct, run});
  }

  std::vector<absl::StatusOr<RunResult>> slots(
      cells.size(), absl::UnknownError("not run"));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < cells.size(); i = next++) {
      slots[i] = RunCell(config, data, universe, cells[i]);
    }
  };
  const int workers =
      std::min<int>(config.threads, static_cast<int>(cells.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  std::vector<RunResult> results;
  results.reserve(cells.size());
  for (auto& slot : slots) {
    if (!slot.ok()) return slot.status();
    results.push_back(*std::move(slot));
  }
  return results;
}

absl::StatusOr<std::vector<RunResult>> RunExperiment(
    const ExperimentConfig& config) {
  CoverLoadOptions options;
  options.min_size = config.min_comm_size;
  auto data = LoadDataset(config.network, config.edges_path,
                          config.truth_path, options);
  if (!data.ok()) return data.status();
  return RunExperiment(config, *data);
}

absl::StatusOr<RunResult> ScoreExternalCover(const Dataset& data,
                                             const std::string& algorithm,
                                             const Cover& cover,
                                             UniverseMode universe) {
  const std::vector<NodeId> nodes = EvaluationUniverse(data, universe);
  auto nmi = OverlappingNmi(data.truth, cover, nodes);
  if (!nmi.ok()) return nmi.status();
  RunResult result;
  result.network = data.name;
  result.algorithm = algorithm;
  result.nmi = *nmi;
  return result;
}

void WriteResultsCsv(const std::vector<RunResult>& results, std::ostream& out,
                     bool include_timing) {
  out << kCsvHeader << '\n';
  for (const RunResult& r : results) {
    out << absl::StrFormat(
        "%s,%s,%.6g,%d,%.6f,%s,%d,%d,%d,%d,%d,%d,%d\n", r.network,
        r.algorithm, r.pct, r.seed, r.nmi,
        include_timing ? absl::StrFormat("%.3f", r.millis) : "", r.run,
        r.queries, r.report.must_link.exchanges,
        r.report.must_link.blocked_transfers, r.report.cannot_link.deletions,
        r.report.cannot_link.guard_hits, r.report.cl_pairs_co_clustered);
  }
}

absl::StatusOr<std::vector<RunResult>> ReadResultsCsv(std::istream& in) {
  std::vector<RunResult> results;
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    return absl::InvalidArgumentError("missing or unexpected results header");
  }
  int64_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string> f = absl::StrSplit(line, ',');
    auto bad = [&] {
      return absl::InvalidArgumentError(
          absl::StrCat("results line ", line_number, ": malformed"));
    };
    if (f.size() != 13) return bad();
    RunResult r;
    r.network = f[0];
    r.algorithm = f[1];
    bool ok = absl::SimpleAtod(f[2], &r.pct) &&
              absl::SimpleAtoi(f[3], &r.seed) &&
              absl::SimpleAtod(f[4], &r.nmi) &&
              (f[5].empty() || absl::SimpleAtod(f[5], &r.millis)) &&
              absl::SimpleAtoi(f[6], &r.run) &&
              absl::SimpleAtoi(f[7], &r.queries) &&
              absl::SimpleAtoi(f[8], &r.report.must_link.exchanges) &&
              absl::SimpleAtoi(f[9], &r.report.must_link.blocked_transfers) &&
              absl::SimpleAtoi(f[10], &r.report.cannot_link.deletions) &&
              absl::SimpleAtoi(f[11], &r.report.cannot_link.guard_hits) &&
              absl::SimpleAtoi(f[12], &r.report.cl_pairs_co_clustered);
    if (!ok) return bad();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace pcslpa
