// Copyright 2026 The Authors.
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

#include "resmat/greedy.hpp"

#include <random>

#include <gtest/gtest.h>

#include "resmat/tree.hpp"
#include "resmat/tree_gen.hpp"

namespace resmat {
namespace {

Graph Gen(Family f, std::vector<int> params) { return GenerateFamily(f, params); }

WeightAssignment Weights(std::vector<std::int64_t> values) {
  std::vector<Weight> w;
  for (auto v : values) w.emplace_back(v);
  return WeightAssignment(w);
}

WeightAssignment RandomWeights(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 20);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Weight> w;
  for (int i = 0; i < n; ++i) w.emplace_back(num(rng), den(rng));
  return WeightAssignment(w);
}

TEST(ParseWeightTest, Formats) {
  EXPECT_EQ(ParseWeight("7"), Weight(7));
  EXPECT_EQ(ParseWeight("3/6"), Weight(1, 2));
  EXPECT_EQ(ParseWeight("2.75"), Weight(11, 4));
  EXPECT_EQ(ParseWeight(".5"), Weight(1, 2));
  for (const char* bad : {"-1", "1/0", "x", "1.", "", "1/2/3", "1e3"}) {
    EXPECT_THROW(ParseWeight(bad), Error) << bad;
  }
  EXPECT_EQ(FormatWeight(Weight(6, 4)), "3/2");
  EXPECT_EQ(FormatWeight(Weight(4)), "4");
}

TEST(ParseWeightsTest, MissingLabelsDefaultToOne) {
  const auto parsed = ParseWeights("# weights\nb 1/3\na 2.5\n", {"a", "b", "c"});
  EXPECT_EQ(parsed.weights[0], Weight(5, 2));
  EXPECT_EQ(parsed.weights[1], Weight(1, 3));
  EXPECT_EQ(parsed.weights[2], Weight(1));
  ASSERT_EQ(parsed.warnings.size(), 1u);
  EXPECT_NE(parsed.warnings[0].find("'c'"), std::string::npos);
  EXPECT_THROW(ParseWeights("z 1\n", {"a"}), Error);
  EXPECT_THROW(ParseWeights("a 1\na 2\n", {"a"}), Error);
  EXPECT_THROW(ParseWeights("a -2\n", {"a"}), Error);
}

TEST(GreedyTest, UniformPicksTwoCheapest) {
  const auto result = GreedyMinWeightBase(Uniform(4, 2), Weights({3, 1, 2, 5}));
  EXPECT_EQ(result.selected, (VertexSet{1, 2}));
  EXPECT_EQ(result.total, Weight(3));
  EXPECT_TRUE(result.certified);
}

TEST(GreedyTest, StarAvoidsCenter) {
  const Graph star = Gen(Family::kStar, {3});
  const auto sys = FromGraph(star);
  const auto w = Weights({9, 5, 1, 2});  // c, l1, l2, l3
  const auto exhaustive = ExhaustiveMinWeightBase(sys, w);
  EXPECT_EQ(exhaustive.total, Weight(3));
  const auto greedy = GreedyMinWeightBase(sys, w);
  EXPECT_EQ(greedy.selected, star.SetOf({"l2", "l3"}));
  EXPECT_EQ(greedy.total, exhaustive.total);
}

TEST(GreedyTest, Cycle6AvoidsAntipodalPair) {
  const Graph c6 = Gen(Family::kCycle, {6});
  const auto sys = FromGraph(c6);
  const auto w = Weights({1, 9, 9, 1, 9, 2});
  const auto exhaustive = ExhaustiveMinWeightBase(sys, w);
  EXPECT_EQ(exhaustive.total, Weight(3));
  const auto greedy = GreedyMinWeightBase(sys, w);
  EXPECT_EQ(greedy.selected, c6.SetOf({"v1", "v6"}));
  EXPECT_EQ(greedy.total, Weight(3));
  // v4 comes second in the order and is rejected: it is antipodal to v1.
  ASSERT_GE(greedy.trace.size(), 2u);
  EXPECT_EQ(greedy.trace[1].element, 3);
  EXPECT_FALSE(greedy.trace[1].accepted);
}

TEST(GreedyTest, RefusesNonMatroidUnlessForced) {
  const auto sys = FromGraph(Gen(Family::kWheel, {5}));
  const auto w = WeightAssignment::Uniform(6);
  try {
    GreedyMinWeightBase(sys, w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotMatroid);
  }
  const auto forced = GreedyMinWeightBase(sys, w, {.force = true});
  EXPECT_FALSE(forced.certified);
}

TEST(GreedyTest, RankZeroGivesEmptyBase) {
  const auto result = GreedyMinWeightBase(Uniform(3, 0), Weights({1, 2, 3}));
  EXPECT_TRUE(result.selected.empty());
  EXPECT_EQ(result.total, Weight(0));
}

TEST(GreedyTest, WeightCountMustMatch) {
  EXPECT_THROW(GreedyMinWeightBase(Uniform(3, 1), Weights({1, 2})), Error);
  EXPECT_THROW(WeightAssignment({Weight(-1)}), Error);
}

TEST(ExhaustiveTest, Examples) {
  const auto c7 = FromGraph(Gen(Family::kCycle, {7}));
  EXPECT_EQ(ExhaustiveMinWeightBase(c7, WeightAssignment::Uniform(7, Weight(3, 2))).total,
            Weight(3));
  const Graph w4 = Gen(Family::kWheel, {4});
  const auto best = ExhaustiveMinWeightBase(FromGraph(w4), Weights({1, 1, 5, 5, 9}));
  EXPECT_EQ(best.selected, w4.SetOf({"v1", "v2"}));
  EXPECT_EQ(best.total, Weight(2));
  const auto full = ExhaustiveMinWeightBase(Uniform(3, 3), Weights({1, 2, 3}));
  EXPECT_EQ(full.selected, VertexSet::Full(3));
  EXPECT_EQ(full.total, Weight(6));
}

TEST(GreedyPropertyTest, MatchesExhaustiveOnMatroids) {
  std::vector<IndependenceSystem> corpus;
  for (int n = 3; n <= 8; ++n) corpus.push_back(FromGraph(Gen(Family::kCycle, {n})));
  for (int n = 3; n <= 6; ++n) corpus.push_back(FromGraph(Gen(Family::kComplete, {n})));
  corpus.push_back(FromGraph(Gen(Family::kWheel, {3})));
  corpus.push_back(FromGraph(Gen(Family::kWheel, {4})));
  corpus.push_back(FromGraph(Gen(Family::kCompleteBipartite, {2, 3})));
  for (const Graph& t : AllFreeTrees(8))
    if (!Classify(t).path) corpus.push_back(TreeOracleSystem(DecomposeTree(t)));
  std::mt19937_64 rng(41);
  for (const auto& sys : corpus) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto w = RandomWeights(sys.ground_size(), rng);
      EXPECT_EQ(GreedyMinWeightBase(sys, w).total, ExhaustiveMinWeightBase(sys, w).total);
    }
  }
}

// Pinned weights on W5 where greedy takes v1, v and v3 (total 10) while the
// rim pair v1, v2 costs 1.
TEST(GreedyPropertyTest, Wheel5AdversarialFixture) {
  const Graph w5 = Gen(Family::kWheel, {5});
  const auto sys = FromGraph(w5);
  const auto w = Weights({0, 1, 10, 10, 10, 0});
  const auto greedy = GreedyMinWeightBase(sys, w, {.force = true});
  const auto best = ExhaustiveMinWeightBase(sys, w);
  EXPECT_FALSE(greedy.certified);
  EXPECT_EQ(greedy.selected, w5.SetOf({"v1", "v3", "v"}));
  EXPECT_EQ(greedy.total, Weight(10));
  EXPECT_EQ(best.selected, w5.SetOf({"v1", "v2"}));
  EXPECT_EQ(best.total, Weight(1));
}

TEST(GreedyPropertyTest, RandomSearchFindsSuboptimalWeightsOnWheel5) {
  const auto sys = FromGraph(Gen(Family::kWheel, {5}));
  std::mt19937_64 rng(43);
  bool found = false;
  for (int trial = 0; trial < 2000 && !found; ++trial) {
    const auto w = RandomWeights(6, rng);
    found = GreedyMinWeightBase(sys, w, {.force = true}).total >
            ExhaustiveMinWeightBase(sys, w).total;
  }
  EXPECT_TRUE(found);
}

TEST(GreedyPropertyTest, ScalingAndReplay) {
  const auto sys = TreeOracleSystem(DecomposeTree(Gen(Family::kStar, {5})));
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = RandomWeights(6, rng);
    const auto result = GreedyMinWeightBase(sys, w);
    std::vector<Weight> scaled;
    for (const auto& x : w.values()) scaled.push_back(x * Weight(7, 3));
    EXPECT_EQ(GreedyMinWeightBase(sys, WeightAssignment(scaled)).selected, result.selected);

    VertexSet replay;
    for (const auto& step : result.trace) {
      const bool accept = sys.IsIndependent(replay.With(step.element));
      EXPECT_EQ(accept, step.accepted);
      if (accept) replay.insert(step.element);
    }
    EXPECT_EQ(replay, result.selected);
  }
}

}  // namespace
}  // namespace resmat
