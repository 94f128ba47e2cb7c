// Copyright 2026 The cargo-triangles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "cargo/errors.h"
#include "cargo/generators.h"
#include "cargo/graph.h"
#include "cargo/projection.h"
#include "cargo/random.h"
#include "cargo/secure_count.h"
#include "support/stats.h"

namespace cargo {
namespace {

std::vector<double> AsDouble(const DegreeVector& d) {
  return std::vector<double>(d.begin(), d.end());
}

uint64_t CountUnder(const ProjectedGraph& pg, BitPolicy policy) {
  return ExactTriangleCount(EffectiveAdjacency(pg.adjacency, policy));
}

bool IsSubset(const BitMatrix& a, const BitMatrix& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t w = 0; w < a.words_per_row(); ++w)
      if (a.Row(i)[w] & ~b.Row(i)[w]) return false;
  return true;
}

TEST(ProjectionTest, DegreeSimilarityValues) {
  EXPECT_DOUBLE_EQ(DegreeSimilarity(10, 10.0), 0.0);
  EXPECT_DOUBLE_EQ(DegreeSimilarity(10, 5.0), 0.5);
  EXPECT_DOUBLE_EQ(DegreeSimilarity(4, 5.0), 0.25);
  EXPECT_DOUBLE_EQ(DegreeSimilarity(4, -2.0), 1.5);
  EXPECT_THROW(DegreeSimilarity(0, 3.0), DomainError);
  EXPECT_THROW(DegreeSimilarity(-1, 3.0), DomainError);
}

TEST(ProjectionTest, ThetaRounding) {
  EXPECT_EQ(ThetaFromNoisyMax(4.4), 4);
  EXPECT_EQ(ThetaFromNoisyMax(4.6), 5);
  EXPECT_EQ(ThetaFromNoisyMax(0.2), 1);
  EXPECT_EQ(ThetaFromNoisyMax(-7.0), 1);
}

TEST(ProjectionTest, MaxPrivateRejectsBadBudget) {
  NoiseRng rng(1);
  const DegreeVector d = {1, 2};
  EXPECT_THROW(MaxPrivate(d, 0.0, rng), ParameterError);
  EXPECT_THROW(MaxPrivate(d, -1.0, rng), ParameterError);
  EXPECT_THROW(MaxPrivate(d, std::nan(""), rng), ParameterError);
  EXPECT_THROW(MaxPrivate(DegreeVector{}, 1.0, rng), ParameterError);
}

TEST(ProjectionTest, HugeBudgetGivesExactMax) {
  NoiseRng rng(2);
  const Graph g = ErdosRenyi(100, 0.1, 2);
  const NoisyDegrees nd = MaxPrivate(g.degrees(), 1e9, rng);
  EXPECT_NEAR(nd.max, static_cast<double>(g.MaxDegree()), 1e-6);
  EXPECT_EQ(ThetaFromNoisyMax(nd.max), g.MaxDegree());
}

TEST(ProjectionTest, NoisyDegreeHasLaplaceMoments) {
  NoiseRng rng(3);
  const DegreeVector zero = {0};
  std::vector<double> v;
  for (int t = 0; t < 100000; ++t) v.push_back(MaxPrivate(zero, 1.0, rng).max);
  EXPECT_LT(std::abs(testing::Mean(v)), 3 * testing::StandardError(v));
  EXPECT_LT(testing::RelDiff(testing::Variance(v), 2.0), 0.05);
}

TEST(ProjectionTest, ThetaAtLeastMaxDegreeIsIdentity) {
  NoiseRng rng(4);
  const Graph g = ErdosRenyi(60, 0.2, 4);
  const auto d = AsDouble(g.degrees());
  for (int64_t theta : {g.MaxDegree(), g.MaxDegree() + 10}) {
    EXPECT_EQ(Project(g, d, theta).adjacency, g.adjacency());
    EXPECT_EQ(ProjectRandom(g, theta, rng).adjacency, g.adjacency());
  }
}

TEST(ProjectionTest, RejectsBadArguments) {
  NoiseRng rng(5);
  const Graph g = CompleteGraph(4);
  const auto d = AsDouble(g.degrees());
  EXPECT_THROW(Project(g, d, 0), ParameterError);
  EXPECT_THROW(ProjectRandom(g, 0, rng), ParameterError);
  EXPECT_THROW(Project(g, std::vector<double>{1.0}, 2), ParameterError);
}

// v2 has neighbors v1, v3, v4, v5 with degrees 1, 3, 3, 1. With theta = 2 it
// keeps the two neighbors of degree closest to its own and drops the edges
// to v1 and v5; the triangle v2-v3-v4 survives.
TEST(ProjectionTest, KeepsMostSimilarNeighbors) {
  enum : NodeId { v1, v2, v3, v4, v5, v6, v7 };
  const std::vector<Edge> edges = {{v2, v1}, {v2, v3}, {v2, v4}, {v2, v5},
                                   {v3, v4}, {v3, v6}, {v4, v7}};
  const Graph g = Graph::FromEdges(7, edges);
  const ProjectedGraph pg = Project(g, AsDouble(g.degrees()), 2);
  EXPECT_EQ(pg.adjacency.RowIndices(v2), (std::vector<NodeId>{v3, v4}));
  EXPECT_FALSE(pg.adjacency.Get(v2, v1));
  EXPECT_FALSE(pg.adjacency.Get(v2, v5));
  EXPECT_EQ(pg.adjacency.RowIndices(v3), (std::vector<NodeId>{v2, v4}));
  EXPECT_EQ(pg.adjacency.RowIndices(v4), (std::vector<NodeId>{v2, v3}));
  EXPECT_EQ(pg.adjacency.RowIndices(v1), (std::vector<NodeId>{v2}));
  EXPECT_EQ(CountUnder(pg, BitPolicy::kAnd), 1u);
}

TEST(ProjectionTest, TiesBrokenByIndex) {
  const Graph star = StarGraph(6);
  const ProjectedGraph pg = Project(star, AsDouble(star.degrees()), 2);
  EXPECT_EQ(pg.adjacency.RowIndices(0), (std::vector<NodeId>{1, 2}));
}

// Oracle: enumerate all 3^4 choices of one kept neighbor per K4 node. AND
// and row-owner never form a triangle; OR can (three one-way picks in a
// cycle).
TEST(ProjectionTest, CompleteGraphThetaOne) {
  const Graph k4 = CompleteGraph(4);
  uint64_t or_with_triangle = 0;
  for (int code = 0; code < 81; ++code) {
    BitMatrix rows(4);
    for (int i = 0, c = code; i < 4; ++i, c /= 3) {
      const int pick = c % 3;
      rows.Set(i, pick < i ? pick : pick + 1);
    }
    ASSERT_EQ(ExactTriangleCount(EffectiveAdjacency(rows, BitPolicy::kAnd)), 0u);
    ASSERT_EQ(
        ExactTriangleCount(EffectiveAdjacency(rows, BitPolicy::kRowOwner)), 0u);
    or_with_triangle +=
        ExactTriangleCount(EffectiveAdjacency(rows, BitPolicy::kOr)) > 0;
  }
  EXPECT_GT(or_with_triangle, 0u);

  NoiseRng rng(6);
  for (int t = 0; t < 100; ++t) {
    const ProjectedGraph pg = ProjectRandom(k4, 1, rng);
    for (size_t i = 0; i < 4; ++i) ASSERT_EQ(pg.adjacency.RowPopcount(i), 1);
    ASSERT_EQ(CountUnder(pg, BitPolicy::kAnd), 0u);
    ASSERT_EQ(CountUnder(pg, BitPolicy::kRowOwner), 0u);
  }
  const ProjectedGraph sim = Project(k4, AsDouble(k4.degrees()), 1);
  EXPECT_EQ(CountUnder(sim, BitPolicy::kAnd), 0u);
}

// Planted hub of degree 20 whose three clique partners also have degree 20
// and whose other 17 neighbors are leaves. Similarity keeps the partners;
// random deletion keeps all three only with probability C(17,2)/C(20,5).
TEST(ProjectionTest, PlantedHubKeepsPartners) {
  const Graph g = PlantedHomogeneity();
  ASSERT_EQ(g.Degree(0), 20);
  const int64_t theta = 5;
  const ProjectedGraph pg = Project(g, AsDouble(g.degrees()), theta);
  for (NodeId j : {1, 2, 3}) EXPECT_TRUE(pg.adjacency.Get(0, j));
  EXPECT_EQ(CountUnder(pg, BitPolicy::kAnd), ExactTriangleCount(g));

  // Oracle: enumerate every 5-subset of the hub's 20 neighbor slots, slots
  // 0..2 being the partners.
  uint64_t subsets = 0, with_partners = 0;
  for (uint32_t mask = 0; mask < (1u << 20); ++mask) {
    if (std::popcount(mask) != theta) continue;
    ++subsets;
    with_partners += (mask & 7u) == 7u;
  }
  EXPECT_EQ(subsets, 15504u);
  EXPECT_EQ(with_partners, 136u);
  const double p = static_cast<double>(with_partners) / subsets;

  NoiseRng rng(7);
  constexpr int kTrials = 100000;
  int hits = 0;
  for (int t = 0; t < kTrials; ++t) {
    const ProjectedGraph r = ProjectRandom(g, theta, rng);
    hits += r.adjacency.Get(0, 1) && r.adjacency.Get(0, 2) &&
            r.adjacency.Get(0, 3);
  }
  const double se = std::sqrt(p * (1 - p) / kTrials);
  EXPECT_NEAR(static_cast<double>(hits) / kTrials, p, 4 * se);
}

TEST(ProjectionTest, RandomDeletionKeepsEachEdgeWithThetaOverDegree) {
  NoiseRng rng(8);
  const Graph star = StarGraph(20);
  constexpr int kTrials = 20000;
  std::vector<int> kept(21, 0);
  for (int t = 0; t < kTrials; ++t) {
    const ProjectedGraph pg = ProjectRandom(star, 5, rng);
    for (NodeId j = 1; j <= 20; ++j) kept[j] += pg.adjacency.Get(0, j);
  }
  const double se = std::sqrt(0.25 * 0.75 / kTrials);
  for (NodeId j = 1; j <= 20; ++j)
    EXPECT_NEAR(kept[j] / static_cast<double>(kTrials), 0.25, 4 * se) << j;
}

TEST(ProjectionTest, Invariants) {
  NoiseRng rng(9);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = ErdosRenyi(60, 0.05 + 0.02 * seed, seed);
    const NoisyDegrees nd = MaxPrivate(g.degrees(), 0.5, rng);
    const uint64_t t = ExactTriangleCount(g);
    BitMatrix previous;
    for (int64_t theta = 1; theta <= g.MaxDegree() + 1; ++theta) {
      const ProjectedGraph sim = Project(g, nd.values, theta);
      const ProjectedGraph rnd = ProjectRandom(g, theta, rng);
      for (const ProjectedGraph* pg : {&sim, &rnd}) {
        ASSERT_TRUE(IsSubset(pg->adjacency, g.adjacency()));
        for (size_t i = 0; i < g.num_nodes(); ++i)
          ASSERT_LE(pg->adjacency.RowPopcount(i), theta);
        for (BitPolicy p :
             {BitPolicy::kAnd, BitPolicy::kOr, BitPolicy::kRowOwner})
          ASSERT_LE(CountUnder(*pg, p), t);
      }
      // Similarity projection is deterministic and nested in theta.
      ASSERT_EQ(sim.adjacency, Project(g, nd.values, theta).adjacency);
      if (theta > 1) ASSERT_TRUE(IsSubset(previous, sim.adjacency));
      previous = sim.adjacency;
    }
  }
}

TEST(ProjectionTest, ConvenienceOverloadUsesNoisyMax) {
  NoiseRng rng(10);
  const Graph g = ErdosRenyi(50, 0.2, 10);
  const NoisyDegrees nd = MaxPrivate(g.degrees(), 0.3, rng);
  const ProjectedGraph pg = Project(g, nd);
  EXPECT_EQ(pg.theta, ThetaFromNoisyMax(nd.max));
  EXPECT_EQ(pg.adjacency, Project(g, nd.values, pg.theta).adjacency);
}

TEST(ProjectionTest, SimilarityBeatsRandomOnPlantedFamily) {
  NoiseRng rng(11);
  const Graph g = PlantedHomogeneity(10);
  const auto d = AsDouble(g.degrees());
  for (int64_t theta : {3, 5, 10}) {
    const double sim = CountUnder(Project(g, d, theta), BitPolicy::kAnd);
    double rnd = 0.0;
    for (int t = 0; t < 500; ++t)
      rnd += CountUnder(ProjectRandom(g, theta, rng), BitPolicy::kAnd);
    EXPECT_GT(sim, rnd / 500) << theta;
  }
}

}  // namespace
}  // namespace cargo
