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

#include "pcslpa/planted.h"

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "pcslpa/metrics.h"

namespace pcslpa {
namespace {

using ::testing::ElementsAre;

TEST(PlantedOverlapTest, NodeCountAndOverlap) {
  auto net = GeneratePlantedOverlap({.communities = 2,
                                     .community_size = 10,
                                     .overlap = 3,
                                     .p_in = 0.9,
                                     .p_out = 0.05,
                                     .seed = 1});
  ASSERT_TRUE(net.ok());
  EXPECT_EQ(net->graph.num_nodes(), 17);
  EXPECT_EQ(net->truth.size(), 2u);
  EXPECT_EQ(ComputeCoverStats(net->truth).overlapping_nodes, 3);
  EXPECT_EQ(net->ids.size(), 17);
}

TEST(PlantedOverlapTest, CertainEdgesGiveCliques) {
  auto net = GeneratePlantedOverlap({.communities = 2,
                                     .community_size = 10,
                                     .overlap = 3,
                                     .p_in = 1.0,
                                     .p_out = 0.0,
                                     .seed = 5});
  ASSERT_TRUE(net.ok());
  const auto& c = net->truth.communities();
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].front(), 0);
  EXPECT_EQ(c[0].back(), 9);
  EXPECT_EQ(c[1].front(), 7);
  EXPECT_EQ(c[1].back(), 16);
  // 2 * C(10, 2) minus the C(3, 2) edges counted twice.
  EXPECT_EQ(net->graph.num_edges(), 87);
  for (const auto& community : c) {
    for (NodeId u : community) {
      for (NodeId v : community) {
        if (u != v) EXPECT_TRUE(net->graph.HasEdge(u, v));
      }
    }
  }
  EXPECT_FALSE(net->graph.HasEdge(0, 16));
}

TEST(PlantedOverlapTest, ChainOfFourSharesOnlyNeighbours) {
  auto net = GeneratePlantedOverlap({.communities = 4,
                                     .community_size = 25,
                                     .overlap = 8,
                                     .p_in = 0.3,
                                     .p_out = 0.05,
                                     .seed = 0});
  ASSERT_TRUE(net.ok());
  EXPECT_EQ(net->graph.num_nodes(), 76);
  EXPECT_EQ(ComputeCoverStats(net->truth).overlapping_nodes, 24);
  EXPECT_EQ(ComputeCoverStats(net->truth).max_memberships, 2);
}

TEST(PlantedOverlapTest, SameSeedSameGraph) {
  const PlantedOverlapParams p{.communities = 3,
                               .community_size = 12,
                               .overlap = 2,
                               .p_in = 0.4,
                               .p_out = 0.1,
                               .seed = 77};
  auto a = GeneratePlantedOverlap(p);
  auto b = GeneratePlantedOverlap(p);
  ASSERT_TRUE(a.ok());
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(a->graph.Edges(), b->graph.Edges());
  EXPECT_EQ(a->truth, b->truth);
  PlantedOverlapParams q = p;
  q.seed = 78;
  EXPECT_NE(GeneratePlantedOverlap(q)->graph.Edges(), a->graph.Edges());
}

TEST(PlantedOverlapTest, RejectsBadParameters) {
  EXPECT_FALSE(GeneratePlantedOverlap({.communities = 0}).ok());
  EXPECT_FALSE(GeneratePlantedOverlap({.community_size = 0}).ok());
  EXPECT_FALSE(
      GeneratePlantedOverlap({.community_size = 5, .overlap = 5}).ok());
  // Middle community would be entirely shared.
  EXPECT_FALSE(GeneratePlantedOverlap(
                   {.communities = 3, .community_size = 6, .overlap = 3})
                   .ok());
  EXPECT_FALSE(GeneratePlantedOverlap({.overlap = -1}).ok());
  EXPECT_FALSE(GeneratePlantedOverlap({.p_in = 0.1, .p_out = 0.1}).ok());
  EXPECT_FALSE(GeneratePlantedOverlap({.p_in = 1.2}).ok());
  EXPECT_FALSE(GeneratePlantedOverlap({.p_out = -0.1}).ok());
}

TEST(PlantedOverlapTest, SingleCommunity) {
  auto net = GeneratePlantedOverlap(
      {.communities = 1, .community_size = 4, .p_in = 1.0, .p_out = 0.0});
  ASSERT_TRUE(net.ok());
  EXPECT_THAT(net->truth.communities(), ElementsAre(ElementsAre(0, 1, 2, 3)));
  EXPECT_EQ(net->graph.num_edges(), 6);
}

}  // namespace
}  // namespace pcslpa
