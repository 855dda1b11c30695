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

#include "resmat/matroid.hpp"

#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "resmat/tree_gen.hpp"

namespace resmat {
namespace {

Graph Gen(Family f, std::vector<int> params) { return GenerateFamily(f, params); }

SetFamily AllOfSize(int n, int k) {
  std::vector<VertexSet> out;
  ForEachSubsetOfSize(n, k, [&](VertexSet s) {
    out.push_back(s);
    return false;
  });
  return SetFamily(std::move(out));
}

std::vector<Graph> NonPathTrees(int max_n) {
  std::vector<Graph> out;
  for (int n = 4; n <= max_n; ++n)
    for (Graph& t : AllFreeTrees(n))
      if (!Classify(t).path) out.push_back(std::move(t));
  return out;
}

TEST(FromGraphTest, Wheel4MaximalSetsAreTheFourPairs) {
  const Graph w4 = Gen(Family::kWheel, {4});
  const auto sys = FromGraph(w4);
  EXPECT_EQ(Bases(sys), (SetFamily{w4.SetOf({"v1", "v2"}), w4.SetOf({"v1", "v4"}),
                                   w4.SetOf({"v2", "v3"}), w4.SetOf({"v3", "v4"})}));
  EXPECT_FALSE(sys.IsIndependent(w4.SetOf({"v1", "v3"})));
  EXPECT_FALSE(sys.IsIndependent(w4.SetOf({"v"})));
}

TEST(FromGraphTest, CompleteGraphIndependentUpToNMinusOne) {
  const auto sys = FromGraph(Gen(Family::kComplete, {4}));
  ForEachSubset(4, [&](VertexSet s) { EXPECT_EQ(sys.IsIndependent(s), s.size() <= 3); });
}

TEST(FromGraphTest, Cycle6IndependentSetsAreNonAntipodal) {
  const Graph c6 = Gen(Family::kCycle, {6});
  const auto sys = FromGraph(c6);
  const auto minimal = oracle::MinimalResolving(c6);
  ForEachSubset(6, [&](VertexSet s) {
    const bool expected = oracle::SubsetOfAny(minimal, s.bits());
    EXPECT_EQ(sys.IsIndependent(s), expected);
    if (s.size() <= 1) {
      EXPECT_TRUE(expected);
    }
    if (s.size() == 2) {
      auto e = s.elements();
      EXPECT_EQ(expected, e[1] - e[0] != 3);
    }
    if (s.size() >= 3) {
      EXPECT_FALSE(expected);
    }
  });
}

TEST(FromGraphTest, DisconnectedIsRejected) {
  EXPECT_THROW(FromGraph(ParseGraph("3 1\na b\n")), Error);
}

TEST(UniformTest, Examples) {
  EXPECT_EQ(Bases(Uniform(4, 3)), AllOfSize(4, 3));
  EXPECT_EQ(Bases(Uniform(4, 3)).size(), 4u);
  ForEachSubset(5, [&](VertexSet s) { EXPECT_EQ(Uniform(5, 0).IsIndependent(s), s.empty()); });
  ForEachSubset(3, [&](VertexSet s) { EXPECT_TRUE(Uniform(3, 3).IsIndependent(s)); });
  EXPECT_THROW(Uniform(3, 4), Error);
  EXPECT_THROW(Uniform(3, -1), Error);
}

TEST(GraphicTest, Examples) {
  const auto k3 = Graphic(Gen(Family::kComplete, {3}));
  EXPECT_EQ(Bases(k3), AllOfSize(3, 2));
  EXPECT_TRUE(AreIsomorphic(k3, Uniform(3, 2)).has_value());

  const auto tree = Graphic(Gen(Family::kStar, {4}));
  EXPECT_EQ(Bases(tree), SetFamily{VertexSet::Full(4)});

  const auto c4 = Graphic(Gen(Family::kCycle, {4}));
  EXPECT_EQ(Circuits(c4), SetFamily{VertexSet::Full(4)});
  EXPECT_TRUE(CheckAugmentation(c4).is_matroid);
}

TEST(RankTest, Examples) {
  EXPECT_EQ(Rank(FromGraph(Gen(Family::kWheel, {6}))), 3);
  EXPECT_EQ(Rank(FromGraph(Gen(Family::kCompleteBipartite, {2, 3}))), 3);
  const auto sys = Uniform(5, 3);
  EXPECT_EQ(RankOf(sys, VertexSet()), 0);
  EXPECT_EQ(RankOf(sys, VertexSet{0, 1}), 2);
  EXPECT_EQ(RankOf(sys, VertexSet::Full(5)), 3);
  EXPECT_EQ(Rank(sys), 3);
  EnumerationLimits tight;
  tight.max_n = 3;
  EXPECT_THROW(RankOf(sys, VertexSet::Full(5), tight), Error);
}

TEST(RankTest, RankTableMatchesDefinition) {
  const auto sys = FromGraph(Gen(Family::kWheel, {5}));
  const auto rank = RankTable(sys);
  ForEachSubset(sys.ground_size(), [&](VertexSet s) {
    EXPECT_EQ(rank[s.bits()],
              oracle::RankByDefinition(s.bits(), [&](std::uint64_t t) {
                return sys.IsIndependent(VertexSet(t));
              }));
    EXPECT_EQ(RankOf(sys, s), rank[s.bits()]);
  });
}

TEST(CheckAugmentationTest, Wheel5FailsWithHubWitness) {
  const Graph w5 = Gen(Family::kWheel, {5});
  const auto sys = FromGraph(w5);
  const auto verdict = CheckAugmentation(sys);
  EXPECT_FALSE(verdict.is_matroid);
  ASSERT_TRUE(verdict.witness.has_value());
  EXPECT_TRUE(ValidateWitness(sys, *verdict.witness));
  EXPECT_EQ(verdict.witness->smaller, w5.SetOf({"v1", "v2"}));
  EXPECT_EQ(verdict.witness->larger, w5.SetOf({"v1", "v3", "v"}));

  // {v1} versus {v3, v4} is not a witness here: v1, v3 lies inside the
  // minimal resolving set v, v1, v3.
  EXPECT_FALSE(ValidateWitness(sys, {w5.SetOf({"v1"}), w5.SetOf({"v3", "v4"})}));
  EXPECT_TRUE(sys.IsIndependent(w5.SetOf({"v1", "v3"})));
}

TEST(CheckAugmentationTest, Wheel7Fails) {
  const Graph w7 = Gen(Family::kWheel, {7});
  const auto sys = FromGraph(w7);
  const auto verdict = CheckAugmentation(sys);
  EXPECT_FALSE(verdict.is_matroid);
  ASSERT_TRUE(verdict.witness.has_value());
  EXPECT_TRUE(ValidateWitness(sys, *verdict.witness));
  EXPECT_EQ(verdict.witness->smaller, w7.SetOf({"v1", "v2"}));
  EXPECT_EQ(verdict.witness->larger, w7.SetOf({"v1", "v3", "v5"}));
  EXPECT_TRUE(ValidateWitness(sys, {w7.SetOf({"v1", "v2"}), w7.SetOf({"v3", "v5", "v7"})}));
  // Every base has three elements, yet augmentation fails.
  for (VertexSet b : verdict.bases) EXPECT_EQ(b.size(), 3);
}

TEST(CheckAugmentationTest, UniformPasses) {
  const auto verdict = CheckAugmentation(Uniform(5, 2));
  EXPECT_TRUE(verdict.is_matroid);
  EXPECT_FALSE(verdict.witness.has_value());
  EXPECT_EQ(verdict.rank, 2);
  EXPECT_EQ(verdict.bases.size(), 10u);
}

// The restricted |B| = |A| + 1 scan reports the same first witness as a
// scan over every pair |A| < |B| in canonical order, and the same verdict
// as the all-pairs oracle.
TEST(CheckAugmentationTest, AgreesWithAllPairsOracleOnRandomSystems) {
  std::mt19937 rng(17);
  int failures = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<VertexSet> maximal;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i)
      maximal.emplace_back(rng() & ((VertexSet::Mask{1} << n) - 1));
    const IndependenceSystem sys(n, {}, SetFamily(maximal), Provenance::kExplicit);
    auto indep = [&](std::uint64_t s) { return sys.IsIndependent(VertexSet(s)); };
    const auto verdict = CheckAugmentation(sys);
    EXPECT_EQ(verdict.is_matroid, oracle::AugmentationHolds(n, indep));
    if (verdict.is_matroid) continue;
    ++failures;
    std::vector<VertexSet> independent;
    ForEachSubset(n, [&](VertexSet s) {
      if (indep(s.bits())) independent.push_back(s);
    });
    std::sort(independent.begin(), independent.end(), CanonicalLess{});
    std::optional<AugmentationWitness> first;
    for (VertexSet a : independent) {
      for (VertexSet b : independent) {
        if (a.size() >= b.size()) continue;
        bool ok = false;
        for (int x : (b - a).elements()) ok = ok || indep(a.With(x).bits());
        if (!ok) {
          first = AugmentationWitness{a, b};
          break;
        }
      }
      if (first) break;
    }
    ASSERT_TRUE(first.has_value());
    EXPECT_EQ(verdict.witness->smaller, first->smaller);
    EXPECT_EQ(verdict.witness->larger, first->larger);
  }
  EXPECT_GT(failures, 10);
}

TEST(StructureTest, BasesCircuitsLoopsIsthmuses) {
  const Graph star = Gen(Family::kStar, {3});
  const auto sys = FromGraph(star);
  EXPECT_EQ(Loops(sys), star.SetOf({"c"}));
  EXPECT_EQ(Isthmuses(sys), VertexSet());
  EXPECT_EQ(Circuits(Uniform(4, 2)), AllOfSize(4, 3));
  EXPECT_EQ(Isthmuses(Uniform(3, 3)), VertexSet::Full(3));
}

TEST(StructureTest, NonPathTreesHaveNoIsthmus) {
  for (const Graph& t : NonPathTrees(10)) EXPECT_TRUE(Isthmuses(FromGraph(t)).empty());
}

TEST(FlatsTest, Examples) {
  const Graph star = Gen(Family::kStar, {3});
  EXPECT_EQ(Hyperplanes(FromGraph(star)),
            (SetFamily{star.SetOf({"c", "l1"}), star.SetOf({"c", "l2"}),
                       star.SetOf({"c", "l3"})}));
  for (const auto& sys : {FromGraph(star), Uniform(4, 3), FromGraph(Gen(Family::kCycle, {6}))}) {
    EXPECT_TRUE(Flats(sys).contains(sys.ground()));
  }
  EXPECT_EQ(Hyperplanes(Uniform(4, 3)), AllOfSize(4, 2));
}

TEST(FlatsTest, HyperplanesMatchDefinitionOracle) {
  for (const auto& sys : {FromGraph(Gen(Family::kCycle, {6})), FromGraph(Gen(Family::kWheel, {4})),
                          Graphic(Gen(Family::kComplete, {4})), Uniform(5, 2)}) {
    auto masks = oracle::HyperplanesByDefinition(
        sys.ground_size(), [&](std::uint64_t s) { return sys.IsIndependent(VertexSet(s)); });
    std::vector<VertexSet> expected(masks.begin(), masks.end());
    EXPECT_EQ(Hyperplanes(sys), SetFamily(expected));
  }
}

TEST(FlatsTest, RequireMatroidAndLimit) {
  try {
    Flats(FromGraph(Gen(Family::kWheel, {5})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotMatroid);
  }
  EnumerationLimits limits;
  limits.max_flats_n = 4;
  try {
    Flats(Uniform(5, 2), limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLimit);
  }
}

TEST(DualTest, Examples) {
  for (const Graph& t : NonPathTrees(8)) EXPECT_TRUE(Loops(Dual(FromGraph(t))).empty());
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l <= n; ++l) EXPECT_EQ(Bases(Dual(Uniform(n, l))), Bases(Uniform(n, n - l)));
  const auto c6 = FromGraph(Gen(Family::kCycle, {6}));
  EXPECT_EQ(Bases(Dual(Dual(c6))), Bases(c6));
  EXPECT_THROW(Dual(FromGraph(Gen(Family::kWheel, {5}))), Error);
}

TEST(DualTest, BaseComplementsAndDualCircuitsFromHyperplanes) {
  for (const auto& sys : {FromGraph(Gen(Family::kCycle, {6})), FromGraph(Gen(Family::kStar, {4})),
                          Graphic(Gen(Family::kWheel, {4}))}) {
    const auto dual = Dual(sys);
    const auto bases = Bases(sys);
    const auto dual_bases = Bases(dual);
    ForEachSubset(sys.ground_size(), [&](VertexSet s) {
      EXPECT_EQ(bases.contains(s), dual_bases.contains(Complement(s, sys.ground_size())));
    });
    std::vector<VertexSet> complements;
    for (VertexSet h : Hyperplanes(sys)) complements.push_back(Complement(h, sys.ground_size()));
    EXPECT_EQ(Circuits(dual), SetFamily(complements));
  }
}

TEST(IsomorphismTest, Examples) {
  const auto phi = AreIsomorphic(FromGraph(Gen(Family::kWheel, {3})), Uniform(4, 3));
  ASSERT_TRUE(phi.has_value());
  EXPECT_EQ(phi->size(), 4u);
  EXPECT_TRUE(AreIsomorphic(Graphic(Gen(Family::kComplete, {3})), Uniform(3, 2)).has_value());
  EXPECT_FALSE(AreIsomorphic(FromGraph(Gen(Family::kCycle, {6})), Uniform(6, 2)).has_value());
  EXPECT_TRUE(AreIsomorphic(FromGraph(Gen(Family::kCycle, {7})), Uniform(7, 2)).has_value());
}

TEST(IsomorphismTest, WitnessMapsIndependentSetsExactly) {
  // The graphic matroid of C4 is U_4^3; relabel a tree system arbitrarily.
  const auto a = FromGraph(Gen(Family::kStar, {4}));
  const std::vector<int> perm{3, 0, 4, 2, 1};
  std::vector<VertexSet> permuted;
  for (VertexSet b : Bases(a)) {
    VertexSet image;
    for (int e : b.elements()) image.insert(perm[e]);
    permuted.push_back(image);
  }
  const IndependenceSystem b(5, {}, SetFamily(permuted), Provenance::kExplicit);
  const auto phi = AreIsomorphic(a, b);
  ASSERT_TRUE(phi.has_value());
  ForEachSubset(5, [&](VertexSet s) {
    VertexSet image;
    for (int e : s.elements()) image.insert((*phi)[e]);
    EXPECT_EQ(a.IsIndependent(s), b.IsIndependent(image));
  });
  EXPECT_TRUE(AreIsomorphic(Graphic(Gen(Family::kCycle, {4})), Uniform(4, 3)).has_value());
}

TEST(IsomorphismTest, SameSignatureDifferentStructure) {
  // U_2^1 (+) U_2^1 versus U_3^1 (+) U_1^1: both rank 2, 4 elements, no loops,
  // 4 bases of size 2.
  const IndependenceSystem a(4, {}, SetFamily{VertexSet{0, 2}, VertexSet{0, 3},
                                              VertexSet{1, 2}, VertexSet{1, 3}},
                             Provenance::kExplicit);
  const IndependenceSystem b(4, {}, SetFamily{VertexSet{0, 3}, VertexSet{1, 3},
                                              VertexSet{2, 3}},
                             Provenance::kExplicit);
  EXPECT_FALSE(AreIsomorphic(a, b).has_value());
  EXPECT_THROW(AreIsomorphic(Uniform(11, 2), Uniform(11, 2)), Error);
}

TEST(MatroidPropertiesTest, FromGraphIsDownwardClosed) {
  std::mt19937 rng(23);
  int checked = 0;
  while (checked < 40) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const Graph g = Graph::WithDefaultLabels(n, edges);
    if (!Classify(g).connected) continue;
    ++checked;
    const auto sys = FromGraph(g);
    EXPECT_TRUE(IsDownwardClosed(sys));
    EXPECT_TRUE(sys.IsIndependent(VertexSet()));
    const auto verdict = CheckAugmentation(sys);
    if (!verdict.is_matroid) continue;
    // Base exchange on every base pair.
    for (VertexSet b1 : verdict.bases) {
      EXPECT_EQ(b1.size(), verdict.rank);
      for (VertexSet b2 : verdict.bases) {
        for (int x : b1.elements()) {
          bool found = false;
          for (int y : b2.elements())
            found = found || verdict.bases.contains(b1.Without(x).With(y));
          EXPECT_TRUE(found);
        }
      }
    }
  }
}

TEST(MatroidPropertiesTest, FamilyVerdicts) {
  for (int n = 8; n <= 10; ++n)
    EXPECT_FALSE(CheckAugmentation(FromGraph(Gen(Family::kWheel, {n}))).is_matroid) << n;
  for (int n = 3; n <= 10; ++n)
    EXPECT_TRUE(CheckAugmentation(FromGraph(Gen(Family::kCycle, {n}))).is_matroid) << n;
  for (int n = 2; n <= 9; ++n)
    EXPECT_TRUE(AreIsomorphic(FromGraph(Gen(Family::kComplete, {n})), Uniform(n, n - 1)));
  for (int m = 1; m <= 9; ++m)
    for (int n = m; m + n <= 10; ++n) {
      if (m + n < 3) continue;
      const auto v = CheckAugmentation(FromGraph(Gen(Family::kCompleteBipartite, {m, n})));
      EXPECT_TRUE(v.is_matroid);
      EXPECT_EQ(v.rank, m + n - 2);
    }
  for (int n = 4; n <= 10; ++n) {
    const auto sys = FromGraph(Gen(Family::kPath, {n}));
    const auto v = CheckAugmentation(sys);
    ASSERT_FALSE(v.is_matroid);
    EXPECT_EQ(v.witness->smaller.size(), 1);
    EXPECT_EQ(v.witness->larger.size(), 2);
    EXPECT_TRUE(ValidateWitness(sys, *v.witness));
  }
}

TEST(MatroidPropertiesTest, Wheel5And6BasesAreNotEquicardinal) {
  for (int n : {5, 6}) {
    const auto bases = Bases(FromGraph(Gen(Family::kWheel, {n})));
    int lo = 64, hi = 0;
    for (VertexSet b : bases) {
      lo = std::min(lo, b.size());
      hi = std::max(hi, b.size());
    }
    if (n == 5) {
      EXPECT_LT(lo, hi);
    } else {
      EXPECT_EQ(lo, hi);
    }
  }
  EXPECT_FALSE(CheckAugmentation(FromGraph(Gen(Family::kWheel, {6}))).is_matroid);
}

TEST(ExplicitFormatTest, ParseAndFormat) {
  const auto sys = ParseExplicitSystem("4\n# bases\na,b\nb, c\n");
  EXPECT_EQ(sys.ground_size(), 4);
  EXPECT_EQ(sys.labels(), (std::vector<std::string>{"a", "b", "c", "v1"}));
  EXPECT_TRUE(sys.IsIndependent(VertexSet{1, 2}));
  EXPECT_FALSE(sys.IsIndependent(VertexSet{0, 2}));
  EXPECT_EQ(Loops(sys), VertexSet{3});

  const auto labeled = ParseExplicitSystem("3\nlabels: x y z\nx,y\nz\n");
  EXPECT_EQ(Bases(labeled), (SetFamily{VertexSet{2}, VertexSet{0, 1}}));
  EXPECT_EQ(FormatFamily(labeled.labels(), Bases(labeled)), "z\nx,y\n");

  const auto empty = ParseExplicitSystem("2\n{}\n");
  EXPECT_EQ(Rank(empty), 0);
  EXPECT_THROW(ParseExplicitSystem("2\nlabels: x y\nx,q\n"), Error);
  EXPECT_THROW(ParseExplicitSystem("2\nx,x\n"), Error);
  EXPECT_THROW(ParseExplicitSystem("1\nx,y\n"), Error);
  EXPECT_THROW(ParseExplicitSystem("two\n"), Error);
}

TEST(ExplicitFormatTest, RoundTripsThroughBases) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<VertexSet> sets;
    for (int i = 0; i < 3; ++i) sets.emplace_back(rng() & ((VertexSet::Mask{1} << n) - 1));
    const IndependenceSystem sys(n, {}, SetFamily(sets), Provenance::kExplicit);
    std::string text = std::to_string(n) + "\nlabels:";
    for (const auto& l : sys.labels()) text += " " + l;
    text += "\n" + FormatFamily(sys.labels(), Bases(sys));
    const auto back = ParseExplicitSystem(text);
    EXPECT_EQ(Bases(back), Bases(sys));
  }
}

TEST(ConcurrencyTest, SharedSystemAnswersConsistentlyAcrossThreads) {
  const auto sys = FromGraph(Gen(Family::kWheel, {7}));
  const EnumerationLimits limits;
  std::vector<std::thread> threads;
  std::vector<std::size_t> counts(4);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      const auto& table = sys.Table(limits);
      counts[t] = std::count(table.begin(), table.end(), true);
    });
  }
  for (auto& th : threads) th.join();
  for (auto c : counts) EXPECT_EQ(c, counts[0]);
}

}  // namespace
}  // namespace resmat
