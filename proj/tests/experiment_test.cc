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
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "pcslpa/planted.h"

namespace pcslpa {
namespace {

using ::testing::HasSubstr;

Dataset PlantedDataset(uint64_t seed) {
  auto net = GeneratePlantedOverlap({.communities = 2,
                                     .community_size = 10,
                                     .overlap = 3,
                                     .p_in = 0.6,
                                     .p_out = 0.05,
                                     .seed = seed});
  return Dataset{"planted", std::move(net->graph), std::move(net->ids),
                 std::move(net->truth)};
}

ExperimentConfig SmallConfig() {
  ExperimentConfig c;
  c.network = "planted";
  c.iterations = 30;
  c.runs = 4;
  c.budget_pcts = {0.05};
  c.seed = 11;
  return c;
}

std::string Csv(const std::vector<RunResult>& results) {
  std::ostringstream out;
  WriteResultsCsv(results, out, /*include_timing=*/false);
  return out.str();
}

TEST(DeriveRunSeedTest, DistinctAcrossCells) {
  std::set<uint64_t> seeds;
  for (double pct : {0.0, 0.01, 0.02, 0.03, 0.04, 0.05}) {
    for (int run = 0; run < 20; ++run) seeds.insert(DeriveRunSeed(7, pct, run));
  }
  EXPECT_EQ(seeds.size(), 120u);
  EXPECT_NE(DeriveRunSeed(7, 0.01, 0), DeriveRunSeed(8, 0.01, 0));
}

TEST(RunExperimentTest, TwentyRunsWithDistinctSeeds) {
  const Dataset data = PlantedDataset(1);
  ExperimentConfig c = SmallConfig();
  c.runs = 20;
  auto results = RunExperiment(c, data);
  ASSERT_TRUE(results.ok());
  ASSERT_EQ(results->size(), 20u);
  std::set<uint64_t> seeds;
  for (const RunResult& r : *results) {
    seeds.insert(r.seed);
    EXPECT_GE(r.nmi, 0.0);
    EXPECT_LE(r.nmi, 1.0);
    EXPECT_EQ(r.queries, 6);  // floor(0.05 * 136)
    EXPECT_EQ(r.report.cl_pairs_co_clustered, 0);
  }
  EXPECT_EQ(seeds.size(), 20u);
}

TEST(RunExperimentTest, SlpaIgnoresBudgets) {
  const Dataset data = PlantedDataset(1);
  ExperimentConfig c = SmallConfig();
  c.algorithm = Algorithm::kSlpa;
  c.budget_pcts = {0.01, 0.02, 0.03};
  auto results = RunExperiment(c, data);
  ASSERT_TRUE(results.ok());
  ASSERT_EQ(results->size(), 4u);
  for (const RunResult& r : *results) {
    EXPECT_EQ(r.pct, 0.0);
    EXPECT_EQ(r.algorithm, "slpa");
    EXPECT_EQ(r.queries, 0);
  }
}

TEST(RunExperimentTest, ThreadCountDoesNotChangeResults) {
  const Dataset data = PlantedDataset(2);
  ExperimentConfig c = SmallConfig();
  c.budget_pcts = {0.01, 0.05};
  auto serial = RunExperiment(c, data);
  c.threads = 4;
  auto parallel = RunExperiment(c, data);
  ASSERT_TRUE(serial.ok());
  ASSERT_TRUE(parallel.ok());
  EXPECT_EQ(Csv(*serial), Csv(*parallel));
}

TEST(RunExperimentTest, SameConfigSameBytes) {
  const Dataset data = PlantedDataset(3);
  const ExperimentConfig c = SmallConfig();
  EXPECT_EQ(Csv(*RunExperiment(c, data)), Csv(*RunExperiment(c, data)));
}

TEST(RunExperimentTest, ResultsDoNotDependOnCellOrder) {
  const Dataset data = PlantedDataset(4);
  ExperimentConfig forward = SmallConfig();
  forward.budget_pcts = {0.01, 0.05};
  ExperimentConfig backward = forward;
  backward.budget_pcts = {0.05, 0.01};
  auto a = *RunExperiment(forward, data);
  auto b = *RunExperiment(backward, data);
  auto key = [](const RunResult& r) { return std::pair(r.pct, r.run); };
  std::sort(a.begin(), a.end(),
            [&](const auto& x, const auto& y) { return key(x) < key(y); });
  std::sort(b.begin(), b.end(),
            [&](const auto& x, const auto& y) { return key(x) < key(y); });
  EXPECT_EQ(Csv(a), Csv(b));
}

TEST(RunExperimentTest, RejectsInvalidConfig) {
  const Dataset data = PlantedDataset(1);
  ExperimentConfig c = SmallConfig();
  c.runs = 0;
  EXPECT_FALSE(RunExperiment(c, data).ok());
  c = SmallConfig();
  c.budget_pcts = {1.5};
  EXPECT_FALSE(RunExperiment(c, data).ok());
  c = SmallConfig();
  c.budget_pcts = {};
  EXPECT_FALSE(RunExperiment(c, data).ok());
}

TEST(RunExperimentTest, MissingFileNamesPath) {
  ExperimentConfig c = SmallConfig();
  c.edges_path = "/nonexistent/graph.txt";
  c.truth_path = "/nonexistent/truth.txt";
  auto results = RunExperiment(c);
  ASSERT_FALSE(results.ok());
  EXPECT_THAT(results.status().message(), HasSubstr("/nonexistent/graph.txt"));
}

TEST(RunExperimentTest, LoadsFromFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "pcslpa_exp_test";
  std::filesystem::create_directories(dir);
  auto net = GeneratePlantedOverlap({.communities = 2,
                                     .community_size = 6,
                                     .overlap = 1,
                                     .p_in = 1.0,
                                     .p_out = 0.0});
  ASSERT_TRUE(net.ok());
  {
    std::ofstream edges(dir / "g.txt");
    WriteEdgeList(net->graph, net->ids, edges);
    std::ofstream truth(dir / "t.txt");
    WriteCover(net->truth, net->ids, truth);
  }
  ExperimentConfig c = SmallConfig();
  c.edges_path = (dir / "g.txt").string();
  c.truth_path = (dir / "t.txt").string();
  c.runs = 2;
  auto results = RunExperiment(c);
  ASSERT_TRUE(results.ok()) << results.status();
  EXPECT_EQ(results->size(), 2u);
  std::filesystem::remove_all(dir);
}

TEST(ScoreExternalCoverTest, ScoresLikeNativeCover) {
  const Dataset data = PlantedDataset(1);
  auto r = ScoreExternalCover(data, "oslom", data.truth, UniverseMode::kAll);
  ASSERT_TRUE(r.ok());
  EXPECT_DOUBLE_EQ(r->nmi, 1.0);
  EXPECT_EQ(r->algorithm, "oslom");
}

TEST(ResultsCsvTest, RoundTrip) {
  const Dataset data = PlantedDataset(5);
  const auto results = *RunExperiment(SmallConfig(), data);
  const std::string csv = Csv(results);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "network,algo,pct,seed,nmi,ms,run,queries,ml_exchanges,"
            "ml_blocked_transfers,cl_deletions,cl_guard_hits,cl_co_clustered");
  std::istringstream in(csv);
  auto back = ReadResultsCsv(in);
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(Csv(*back), csv);
}

TEST(ResultsCsvTest, RejectsBadHeader) {
  std::istringstream in("a,b,c\n");
  EXPECT_FALSE(ReadResultsCsv(in).ok());
}

TEST(ParseTest, AlgorithmAndUniverse) {
  EXPECT_EQ(*ParseAlgorithm("slpa"), Algorithm::kSlpa);
  EXPECT_EQ(*ParseAlgorithm("pcslpa"), Algorithm::kPcSlpa);
  EXPECT_FALSE(ParseAlgorithm("copra").ok());
  EXPECT_EQ(*ParseUniverseMode("all"), UniverseMode::kAll);
  EXPECT_FALSE(ParseUniverseMode("some").ok());
}

TEST(EvaluationUniverseTest, CoveredVersusAll) {
  Dataset data;
  data.graph = *Graph::FromEdges(
      4, std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {2, 3}});
  data.truth = Cover({{0, 1}});
  EXPECT_EQ(EvaluationUniverse(data, UniverseMode::kCovered),
            (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(EvaluationUniverse(data, UniverseMode::kAll),
            (std::vector<NodeId>{0, 1, 2, 3}));
}

}  // namespace
}  // namespace pcslpa
