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

// Command-line front end: experiments, scoring, constraint selection and
// fixture generation.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "pcslpa/constraints.h"
#include "pcslpa/experiment.h"
#include "pcslpa/io.h"
#include "pcslpa/metrics.h"
#include "pcslpa/pcslpa.h"
#include "pcslpa/planted.h"
#include "pcslpa/report.h"
#include "pcslpa/truth_filter.h"

namespace pcslpa {
namespace {

struct Flags {
  std::string edges;
  std::string truth;
  std::string algo = "pcslpa";
  std::vector<double> budget_pcts;
  int iterations = 100;
  double threshold = 0.1;
  int runs = 20;
  uint64_t seed = 0;
  std::string out;
  std::string universe = "covered";
  int64_t min_comm_size = 1;
  std::string network;
  double init_fraction = 0.5;
  int threads = 1;
  bool no_timing = false;
  std::string schedule = "sweep";
  int repair_every = 0;
  bool strict_block = false;
  bool lenient_truth = false;

  // Subcommand specific.
  std::string cover;
  std::string constraints;
  std::string repair_report;
  std::string summary_out;
  std::vector<std::string> merge;
  std::vector<std::string> external;
  std::string report;
  std::string text_out;
  std::string edges_out;
  std::string truth_out;
  int communities = 2;
  int community_size = 10;
  int overlap = 0;
  double p_in = 0.9;
  double p_out = 0.05;
  int64_t keep_largest = 5000;
  bool no_density_filter = false;
};

absl::Status WriteTo(const std::string& path,
                     const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return absl::OkStatus();
  }
  std::ofstream out(path);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write ", path));
  write(out);
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string NetworkName(const Flags& f) {
  if (!f.network.empty()) return f.network;
  std::string stem = f.edges.substr(f.edges.find_last_of('/') + 1);
  return stem.substr(0, stem.find('.'));
}

absl::StatusOr<ExperimentConfig> MakeConfig(const Flags& f) {
  ExperimentConfig c;
  c.network = NetworkName(f);
  c.edges_path = f.edges;
  c.truth_path = f.truth;
  if (f.algo != "both") {
    auto algo = ParseAlgorithm(f.algo);
    if (!algo.ok()) return algo.status();
    c.algorithm = *algo;
  }
  if (!f.budget_pcts.empty()) c.budget_pcts = f.budget_pcts;
  c.iterations = f.iterations;
  c.threshold = f.threshold;
  c.runs = f.runs;
  c.seed = f.seed;
  c.min_comm_size = f.min_comm_size;
  auto universe = ParseUniverseMode(f.universe);
  if (!universe.ok()) return universe.status();
  c.universe = *universe;
  c.init_fraction = f.init_fraction;
  c.threads = f.threads;
  if (f.schedule == "uniform_draws") {
    c.schedule = ListenerSchedule::kUniformDraws;
  } else if (f.schedule != "sweep") {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown listener schedule '", f.schedule,
        "' (expected sweep|uniform_draws)"));
  }
  if (f.repair_every > 0) {
    c.repair = {RepairSchedule::Kind::kEveryKPasses, f.repair_every};
  }
  if (f.strict_block) c.block_rule = TransferBlockRule::kPartnerHasLabel;
  return c;
}

absl::StatusOr<Dataset> LoadFor(const Flags& f) {
  if (f.edges.empty() || f.truth.empty()) {
    return absl::InvalidArgumentError("--edges and --truth are required");
  }
  CoverLoadOptions options;
  options.min_size = f.min_comm_size;
  if (f.lenient_truth) options.unknown_tokens = UnknownTokenPolicy::kSkip;
  return LoadDataset(NetworkName(f), f.edges, f.truth, options);
}

absl::Status CmdRun(const Flags& f) {
  if (f.algo == "both") {
    return absl::InvalidArgumentError("--algo both is only valid for sweep");
  }
  auto config = MakeConfig(f);
  if (!config.ok()) return config.status();
  auto data = LoadFor(f);
  if (!data.ok()) return data.status();
  auto results = RunExperiment(*config, *data);
  if (!results.ok()) return results.status();
  if (!f.summary_out.empty()) {
    absl::Status s = WriteTo(f.summary_out, [&](std::ostream& out) {
      out << SummaryCsv(*results);
    });
    if (!s.ok()) return s;
  }
  return WriteTo(f.out, [&](std::ostream& out) {
    WriteResultsCsv(*results, out, !f.no_timing);
  });
}

// Per-run results from the given CSVs, a fresh experiment when --edges is
// set, and scores for every --external NAME=PATH cover.
absl::Status CmdSweep(const Flags& f) {
  std::vector<RunResult> results;
  for (const std::string& path : f.merge) {
    std::ifstream in(path);
    if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
    auto loaded = ReadResultsCsv(in);
    if (!loaded.ok()) {
      return absl::Status(loaded.status().code(),
                          absl::StrCat(path, ": ", loaded.status().message()));
    }
    results.insert(results.end(), loaded->begin(), loaded->end());
  }
  if (!f.edges.empty()) {
    auto config = MakeConfig(f);
    if (!config.ok()) return config.status();
    auto data = LoadFor(f);
    if (!data.ok()) return data.status();
    if (f.algo == "both") {
      for (Algorithm a : {Algorithm::kSlpa, Algorithm::kPcSlpa}) {
        config->algorithm = a;
        auto run = RunExperiment(*config, *data);
        if (!run.ok()) return run.status();
        results.insert(results.end(), run->begin(), run->end());
      }
    } else {
      auto run = RunExperiment(*config, *data);
      if (!run.ok()) return run.status();
      results.insert(results.end(), run->begin(), run->end());
    }
    for (const std::string& entry : f.external) {
      std::pair<std::string, std::string> kv =
          absl::StrSplit(entry, absl::MaxSplits('=', 1));
      if (kv.first.empty() || kv.second.empty()) {
        return absl::InvalidArgumentError(
            absl::StrCat("--external expects NAME=PATH, got '", entry, "'"));
      }
      CoverLoadOptions options;
      options.unknown_tokens = UnknownTokenPolicy::kSkip;
      auto cover = LoadCoverFile(kv.second, data->ids, options);
      if (!cover.ok()) return cover.status();
      auto scored = ScoreExternalCover(*data, kv.first, *cover, config->universe);
      if (!scored.ok()) return scored.status();
      results.push_back(*scored);
    }
  } else if (!f.external.empty()) {
    return absl::InvalidArgumentError("--external needs --edges and --truth");
  }
  if (results.empty()) {
    return absl::InvalidArgumentError(
        "nothing to report: pass --merge files or --edges/--truth");
  }
  if (!f.summary_out.empty()) {
    absl::Status s = WriteTo(f.summary_out, [&](std::ostream& out) {
      out << SummaryCsv(results);
    });
    if (!s.ok()) return s;
  }
  return WriteTo(f.out,
                 [&](std::ostream& out) { out << SweepReportCsv(results); });
}

absl::Status CmdNmi(const Flags& f) {
  if (f.truth.empty() || f.cover.empty()) {
    return absl::InvalidArgumentError("--truth and --cover are required");
  }
  auto universe_mode = ParseUniverseMode(f.universe);
  if (!universe_mode.ok()) return universe_mode.status();
  IdMap ids;
  NodeId graph_nodes = 0;
  if (!f.edges.empty()) {
    auto loaded = LoadEdgeListFile(f.edges);
    if (!loaded.ok()) return loaded.status();
    ids = std::move(loaded->ids);
    graph_nodes = loaded->graph.num_nodes();
  } else if (*universe_mode == UniverseMode::kAll) {
    return absl::InvalidArgumentError("--universe all needs --edges");
  }
  auto load = [&](const std::string& path,
                  int64_t min_size) -> absl::StatusOr<Cover> {
    std::ifstream in(path);
    if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
    absl::StatusOr<Cover> c =
        f.edges.empty() ? LoadCoverInterning(in, ids, min_size)
                        : LoadCover(in, ids, {.min_size = min_size});
    if (!c.ok()) {
      return absl::Status(c.status().code(),
                          absl::StrCat(path, ": ", c.status().message()));
    }
    return c;
  };
  auto truth = load(f.truth, f.min_comm_size);
  if (!truth.ok()) return truth.status();
  auto cover = load(f.cover, 1);
  if (!cover.ok()) return cover.status();

  std::vector<NodeId> universe;
  if (*universe_mode == UniverseMode::kCovered) {
    universe = truth->CoveredNodes();
  } else {
    for (NodeId v = 0; v < graph_nodes; ++v) universe.push_back(v);
  }
  auto nmi = OverlappingNmi(*truth, *cover, universe);
  if (!nmi.ok()) return nmi.status();
  std::cout << absl::StrFormat("%.6f\n", *nmi);
  return absl::OkStatus();
}

absl::Status CmdDetect(const Flags& f) {
  if (f.algo == "both") {
    return absl::InvalidArgumentError("--algo both is only valid for sweep");
  }
  if (f.edges.empty()) return absl::InvalidArgumentError("--edges is required");
  auto config = MakeConfig(f);
  if (!config.ok()) return config.status();
  auto loaded = LoadEdgeListFile(f.edges);
  if (!loaded.ok()) return loaded.status();

  PcSlpaParams params;
  params.base = {.iterations = f.iterations,
                 .threshold = f.threshold,
                 .seed = f.seed,
                 .schedule = config->schedule};
  params.repair = config->repair;
  params.block_rule = config->block_rule;

  Cover cover;
  if (config->algorithm == Algorithm::kSlpa) {
    auto c = RunSlpa(loaded->graph, params.base);
    if (!c.ok()) return c.status();
    cover = *std::move(c);
  } else {
    ConstraintStore store;
    if (!f.constraints.empty()) {
      auto s = LoadConstraintsFile(f.constraints, loaded->ids);
      if (!s.ok()) return s.status();
      store = *std::move(s);
    }
    auto r = RunPcSlpa(loaded->graph, store, params);
    if (!r.ok()) return r.status();
    cover = std::move(r->cover);
    if (!f.repair_report.empty()) {
      absl::Status s = WriteTo(f.repair_report, [&](std::ostream& out) {
        WriteRepairReport(r->report, out);
      });
      if (!s.ok()) return s;
    }
  }
  return WriteTo(f.out,
                 [&](std::ostream& out) { WriteCover(cover, loaded->ids, out); });
}

absl::Status CmdSelect(const Flags& f) {
  auto data = LoadFor(f);
  if (!data.ok()) return data.status();
  if (f.budget_pcts.size() != 1) {
    return absl::InvalidArgumentError("select-constraints takes one --budget-pct");
  }
  auto budget = Budget::ForPairs(f.budget_pcts.front(), data->graph.num_nodes());
  if (!budget.ok()) return budget.status();
  Rng rng(f.seed);
  auto sel = SelectConstraints(data->graph, GroundTruthOracle(data->truth),
                               *budget, {.init_fraction = f.init_fraction}, rng);
  if (!sel.ok()) return sel.status();
  std::cerr << absl::StrFormat(
      "queries=%d/%d must_link=%d cannot_link=%d random=%d triad=%d\n",
      sel->store.queries_used(), budget->max_queries,
      sel->store.must_links().size(), sel->store.cannot_links().size(),
      sel->report.random_queries, sel->report.triad_queries);
  return WriteTo(f.out, [&](std::ostream& out) {
    WriteConstraints(sel->store, data->ids, out);
  });
}

absl::Status CmdFilterTruth(const Flags& f) {
  auto data = LoadFor(f);
  if (!data.ok()) return data.status();
  TruthFilterOptions options;
  options.keep_largest = f.keep_largest;
  options.drop_sparse_quartile = !f.no_density_filter;
  options.min_size = f.min_comm_size;
  TruthFilterStats stats;
  const Cover filtered = FilterTruth(data->graph, data->truth, options, &stats);
  std::cerr << absl::StrFormat(
      "communities: input=%d largest=%d density=%d dedup=%d output=%d\n",
      stats.input, stats.after_largest, stats.after_density, stats.after_dedup,
      stats.output);
  return WriteTo(f.out, [&](std::ostream& out) {
    WriteCover(filtered, data->ids, out);
  });
}

absl::Status CmdGenPlanted(const Flags& f) {
  if (f.edges_out.empty() || f.truth_out.empty()) {
    return absl::InvalidArgumentError("--edges-out and --truth-out are required");
  }
  auto net = GeneratePlantedOverlap({.communities = f.communities,
                                     .community_size = f.community_size,
                                     .overlap = f.overlap,
                                     .p_in = f.p_in,
                                     .p_out = f.p_out,
                                     .seed = f.seed});
  if (!net.ok()) return net.status();
  absl::Status s = WriteTo(f.edges_out, [&](std::ostream& out) {
    WriteEdgeList(net->graph, net->ids, out);
  });
  if (!s.ok()) return s;
  return WriteTo(f.truth_out, [&](std::ostream& out) {
    WriteCover(net->truth, net->ids, out);
  });
}

absl::Status CmdWinLoss(const Flags& f) {
  if (f.report.empty()) return absl::InvalidArgumentError("--report is required");
  auto text = ReadFile(f.report);
  if (!text.ok()) return text.status();
  std::istringstream in(*text);
  auto matrix = ParseSweepReport(in);
  if (!matrix.ok()) return matrix.status();
  auto table = ComputeWinLoss(*matrix);
  if (!table.ok()) return table.status();
  if (!f.out.empty()) {
    absl::Status s = WriteTo(
        f.out, [&](std::ostream& out) { out << WinLossCsv(*table); });
    if (!s.ok()) return s;
  }
  return WriteTo(f.text_out,
                 [&](std::ostream& out) { out << WinLossText(*table); });
}

}  // namespace
}  // namespace pcslpa

int main(int argc, char** argv) {
  using pcslpa::Flags;
  Flags f;
  CLI::App app{"Pairwise-constrained overlapping community detection"};
  app.set_config("--config", "", "key=value file; flags override it");
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--edges", f.edges, "Edge list");
  app.add_option("--truth", f.truth, "Ground-truth cover");
  app.add_option("--algo", f.algo, "slpa | pcslpa (sweep also accepts both)");
  app.add_option("--budget-pct", f.budget_pcts,
                 "Constraint budget as a fraction of node pairs (repeatable)");
  app.add_option("--T", f.iterations, "Evaluation passes")->capture_default_str();
  app.add_option("--r", f.threshold, "Post-processing threshold")
      ->capture_default_str();
  app.add_option("--runs", f.runs, "Runs per budget cell")->capture_default_str();
  app.add_option("--seed", f.seed, "Base seed")->capture_default_str();
  app.add_option("--out", f.out, "Output path (default stdout)");
  app.add_option("--universe", f.universe, "covered | all")
      ->capture_default_str();
  app.add_option("--min-comm-size", f.min_comm_size,
                 "Drop ground-truth communities below this size")
      ->capture_default_str();
  app.add_option("--network", f.network, "Network name in reports");
  app.add_option("--init-fraction", f.init_fraction,
                 "Budget share for the first random batch")
      ->capture_default_str();
  app.add_option("--threads", f.threads, "Worker threads")->capture_default_str();
  app.add_flag("--no-timing", f.no_timing, "Leave the ms column empty");
  app.add_option("--listener-schedule", f.schedule, "sweep | uniform_draws")
      ->capture_default_str();
  app.add_option("--repair-every", f.repair_every,
                 "Also repair after every k-th pass (0 = only at the end)");
  app.add_flag("--strict-block", f.strict_block,
               "Block must-link transfers when a cannot-link partner holds "
               "the label anywhere");
  app.add_flag("--lenient-truth", f.lenient_truth,
               "Skip ground-truth tokens that are not graph nodes");

  auto* run = app.add_subcommand("run", "Seeded runs over budget cells; results CSV");
  run->add_option("--summary-out", f.summary_out, "Mean/stddev per cell");

  auto* sweep = app.add_subcommand(
      "sweep", "Mean-NMI table, networks by algorithm/budget");
  sweep->add_option("--merge", f.merge, "Results CSVs to include")
      ->check(CLI::ExistingFile);
  sweep->add_option("--external", f.external,
                    "NAME=PATH cover from an external method");
  sweep->add_option("--summary-out", f.summary_out, "Mean/stddev per cell");

  auto* nmi = app.add_subcommand("nmi", "Overlapping NMI of a cover vs truth");
  nmi->add_option("--cover", f.cover, "Detected cover")->required();

  auto* detect = app.add_subcommand("detect", "Single run; writes the cover");
  detect->add_option("--constraints", f.constraints, "Constraint file");
  detect->add_option("--repair-report", f.repair_report,
                     "key=value repair counters");

  auto* select = app.add_subcommand("select-constraints",
                                    "Query the truth oracle within a budget");

  auto* filter = app.add_subcommand("filter-truth",
                                    "Largest-k, density quartile, dedup, size floor");
  filter->add_option("--keep-largest", f.keep_largest)->capture_default_str();
  filter->add_flag("--no-density-filter", f.no_density_filter);

  auto* gen = app.add_subcommand("gen-planted", "Chain of overlapping communities");
  gen->add_option("--communities", f.communities)->capture_default_str();
  gen->add_option("--size", f.community_size)->capture_default_str();
  gen->add_option("--overlap", f.overlap)->capture_default_str();
  gen->add_option("--p-in", f.p_in)->capture_default_str();
  gen->add_option("--p-out", f.p_out)->capture_default_str();
  gen->add_option("--edges-out", f.edges_out)->required();
  gen->add_option("--truth-out", f.truth_out)->required();

  auto* winloss = app.add_subcommand("winloss", "Win-loss table from a sweep report");
  winloss->add_option("--report", f.report, "Sweep report CSV")->required();
  winloss->add_option("--text-out", f.text_out, "Aligned table (default stdout)");

  CLI11_PARSE(app, argc, argv);

  absl::Status status;
  if (run->parsed()) {
    status = pcslpa::CmdRun(f);
  } else if (sweep->parsed()) {
    status = pcslpa::CmdSweep(f);
  } else if (nmi->parsed()) {
    status = pcslpa::CmdNmi(f);
  } else if (detect->parsed()) {
    status = pcslpa::CmdDetect(f);
  } else if (select->parsed()) {
    status = pcslpa::CmdSelect(f);
  } else if (filter->parsed()) {
    status = pcslpa::CmdFilterTruth(f);
  } else if (gen->parsed()) {
    status = pcslpa::CmdGenPlanted(f);
  } else if (winloss->parsed()) {
    status = pcslpa::CmdWinLoss(f);
  }
  if (!status.ok()) {
    std::cerr << "error: " << status.message() << '\n';
    return 1;
  }
  return 0;
}
