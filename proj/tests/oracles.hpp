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

// Brute-force reference implementations used only by tests. These share no
// code path with the library routines they check.

#ifndef RESMAT_TESTS_ORACLES_HPP
#define RESMAT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "resmat/graph.hpp"
#include "resmat/vertex_set.hpp"

namespace resmat::oracle {

using Matrix = std::vector<std::vector<int>>;

// Floyd-Warshall; unreachable pairs hold n.
inline Matrix FloydWarshall(const Graph& g) {
  const int n = g.n();
  Matrix d(n, std::vector<int>(n, n));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline bool Resolves(const Matrix& d, std::uint64_t r) {
  const int n = static_cast<int>(d.size());
  std::set<std::vector<int>> codes;
  for (int v = 0; v < n; ++v) {
    std::vector<int> code;
    for (int h = 0; h < n; ++h)
      if ((r >> h) & 1U) code.push_back(d[v][h]);
    if (!codes.insert(code).second) return false;
  }
  return true;
}

// Resolving sets none of whose proper subsets resolve (full-subset check).
inline std::vector<std::uint64_t> MinimalResolving(const Graph& g) {
  const auto d = FloydWarshall(g);
  const int n = g.n();
  std::vector<bool> res(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < res.size(); ++s) res[s] = Resolves(d, s);
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < res.size(); ++s) {
    if (!res[s]) continue;
    bool minimal = true;
    // Every proper subset t of s.
    for (std::uint64_t t = (s - 1) & s; minimal; t = (t - 1) & s) {
      if (res[t]) minimal = false;
      if (t == 0) break;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

inline bool SubsetOfAny(const std::vector<std::uint64_t>& family, std::uint64_t s) {
  return std::any_of(family.begin(), family.end(),
                     [s](std::uint64_t m) { return (s & ~m) == 0; });
}

// Smallest cardinality of a resolving set by scanning all subsets.
inline int Dimension(const Graph& g) {
  const auto d = FloydWarshall(g);
  int best = g.n();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s)
    if (__builtin_popcountll(s) < best && Resolves(d, s)) best = __builtin_popcountll(s);
  return best;
}

// Rank by definition: the largest independent subset of s.
template <typename Indep>
int RankByDefinition(std::uint64_t s, Indep&& indep) {
  int best = 0;
  for (std::uint64_t t = s;; t = (t - 1) & s) {
    if (indep(t)) best = std::max(best, __builtin_popcountll(t));
    if (t == 0) break;
  }
  return best;
}

// Flats of rank r-1, straight from the definitions.
template <typename Indep>
std::vector<std::uint64_t> HyperplanesByDefinition(int n, Indep&& indep) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<int> rank(full + 1);
  for (std::uint64_t s = 0; s <= full; ++s) rank[s] = RankByDefinition(s, indep);
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 0; f <= full; ++f) {
    if (rank[f] != rank[full] - 1) continue;
    bool flat = true;
    for (int x = 0; x < n && flat; ++x)
      if (!((f >> x) & 1U) && rank[f | (std::uint64_t{1} << x)] <= rank[f]) flat = false;
    if (flat) out.push_back(f);
  }
  return out;
}

// Augmentation over every pair |A| < |B| (not only |B| = |A| + 1).
template <typename Indep>
bool AugmentationHolds(int n, Indep&& indep) {
  std::vector<std::uint64_t> sets;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (indep(s)) sets.push_back(s);
  for (auto a : sets) {
    for (auto b : sets) {
      if (__builtin_popcountll(a) >= __builtin_popcountll(b)) continue;
      bool ok = false;
      for (int x = 0; x < n && !ok; ++x)
        if (((b & ~a) >> x) & 1U) ok = indep(a | (std::uint64_t{1} << x));
      if (!ok) return false;
    }
  }
  return true;
}

inline std::uint64_t Mask(std::initializer_list<int> elements) {
  std::uint64_t m = 0;
  for (int e : elements) m |= std::uint64_t{1} << e;
  return m;
}

}  // namespace resmat::oracle

#endif  // RESMAT_TESTS_ORACLES_HPP
