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

#include "pcslpa/metrics.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nmi_oracle.h"
#include "pcslpa/cover.h"

namespace pcslpa {
namespace {

using ::pcslpa::testing::BruteNmi;
using ::pcslpa::testing::NodeSet;

std::vector<NodeSet> AsSets(const Cover& c) {
  std::vector<NodeSet> out;
  for (const auto& community : c.communities()) {
    out.emplace_back(community.begin(), community.end());
  }
  return out;
}

std::vector<NodeId> Range(NodeId lo, NodeId hi) {
  std::vector<NodeId> v(hi - lo);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

Cover RandomCover(std::mt19937_64& rng, int nodes, int max_communities) {
  std::uniform_int_distribution<int> count(1, max_communities);
  std::uniform_int_distribution<int> node(0, nodes - 1);
  std::uniform_int_distribution<int> size(1, nodes);
  std::vector<Cover::Community> communities(count(rng));
  for (auto& c : communities) {
    const int s = size(rng);
    for (int i = 0; i < s; ++i) c.push_back(node(rng));
  }
  return Cover(std::move(communities));
}

TEST(OverlappingNmiTest, IdenticalCoversScoreOne) {
  const Cover x({{1, 2, 3}, {3, 4, 5}});
  const std::vector<NodeId> universe = Range(1, 6);
  EXPECT_NEAR(*OverlappingNmi(x, x, universe), 1.0, 1e-9);
}

TEST(OverlappingNmiTest, SplitVersusWholeMatchesOracle) {
  const Cover x({{1, 2}, {3, 4}});
  const Cover y({{1, 2, 3, 4}});
  const std::vector<NodeId> universe = Range(1, 5);
  const std::vector<int> u(universe.begin(), universe.end());
  const double oracle = BruteNmi(AsSets(x), AsSets(y), u);
  // Each half of x has one bit of entropy that the all-in community of y
  // cannot explain, while y has zero entropy: 1 - (1 + 0) / 2.
  EXPECT_NEAR(oracle, 0.5, 1e-12);
  EXPECT_NEAR(*OverlappingNmi(x, y, universe), oracle, 1e-9);
}

TEST(OverlappingNmiTest, EmptyUniverseIsAnError) {
  const Cover x({{1, 2}});
  EXPECT_FALSE(OverlappingNmi(x, x, {}).ok());
}

TEST(OverlappingNmiTest, NodesOutsideUniverseAreIgnored) {
  const Cover truth({{0, 1, 2}, {3, 4, 5}});
  const Cover detected({{0, 1, 2, 10, 11}, {3, 4, 5, 12}});
  EXPECT_NEAR(*OverlappingNmi(truth, detected, Range(0, 6)), 1.0, 1e-9);
}

TEST(OverlappingNmiTest, AllInCommunityHasZeroEntropyTerm) {
  // y = the full universe contributes 0 to H(Y|X)_norm.
  const Cover x({{0, 1, 2, 3}});
  const Cover y({{0, 1, 2, 3}});
  EXPECT_NEAR(*OverlappingNmi(x, y, Range(0, 4)), 1.0, 1e-12);
}

TEST(OverlappingNmiTest, RandomCoversMatchOracleAndAxioms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int nodes = std::uniform_int_distribution<int>(2, 30)(rng);
    const Cover x = RandomCover(rng, nodes, 6);
    const Cover y = RandomCover(rng, nodes, 6);
    const std::vector<NodeId> universe = Range(0, nodes);
    const std::vector<int> u(universe.begin(), universe.end());

    const double xy = *OverlappingNmi(x, y, universe);
    const double yx = *OverlappingNmi(y, x, universe);
    EXPECT_GE(xy, 0.0);
    EXPECT_LE(xy, 1.0);
    EXPECT_NEAR(xy, yx, 1e-12);
    EXPECT_NEAR(xy, BruteNmi(AsSets(x), AsSets(y), u), 1e-9);
    EXPECT_NEAR(*OverlappingNmi(x, x, universe), 1.0, 1e-9);
  }
}

TEST(OverlappingNmiTest, RelabelingNodesLeavesScoreUnchanged) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int nodes = 20;
    const Cover x = RandomCover(rng, nodes, 5);
    const Cover y = RandomCover(rng, nodes, 5);
    std::vector<NodeId> perm = Range(0, nodes);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto relabel = [&perm](const Cover& c) {
      std::vector<Cover::Community> out;
      for (const auto& community : c.communities()) {
        Cover::Community r;
        for (NodeId v : community) r.push_back(perm[v]);
        out.push_back(r);
      }
      return Cover(std::move(out));
    };
    const std::vector<NodeId> universe = Range(0, nodes);
    EXPECT_NEAR(*OverlappingNmi(x, y, universe),
                *OverlappingNmi(relabel(x), relabel(y), universe), 1e-12);
  }
}

TEST(CoverStatsTest, CountsOverlap) {
  const CoverStats s = ComputeCoverStats(Cover({{1, 2, 3}, {3, 4, 5}}));
  EXPECT_EQ(s.community_count, 2);
  EXPECT_EQ(s.overlapping_nodes, 1);
  EXPECT_EQ(s.max_memberships, 2);
  EXPECT_EQ(s.min_size, 3);
  EXPECT_EQ(s.max_size, 3);
  EXPECT_EQ(s.covered_nodes, 5);
  EXPECT_DOUBLE_EQ(s.overlapping_fraction, 0.2);
}

TEST(CoverStatsTest, DisjointCoverHasNoOverlap) {
  const CoverStats s = ComputeCoverStats(Cover({{0, 1}, {2, 3, 4}}), 10);
  EXPECT_EQ(s.overlapping_nodes, 0);
  EXPECT_DOUBLE_EQ(s.overlapping_fraction, 0.0);
  EXPECT_EQ(s.max_memberships, 1);
}

TEST(CoverStatsTest, EmptyCover) {
  const CoverStats s = ComputeCoverStats(Cover());
  EXPECT_EQ(s.community_count, 0);
  EXPECT_EQ(s.max_size, 0);
}

}  // namespace
}  // namespace pcslpa
