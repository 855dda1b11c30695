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

#ifndef RESMAT_RESOLVING_HPP
#define RESMAT_RESOLVING_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "resmat/error.hpp"
#include "resmat/graph.hpp"
#include "resmat/vertex_set.hpp"

namespace resmat {

// Caps on the ground-set size of exponential routines. Exceeding a cap is a
// refusal (ErrorKind::kLimit), never a silent truncation.
struct EnumerationLimits {
  int max_n = 20;        // subset scans over 2^n
  int max_flats_n = 16;  // flat and hyperplane enumeration
  int max_iso_n = 10;    // isomorphism search
};

using MetricCode = std::vector<int>;

// Distances from v to each landmark, in landmark order.
inline MetricCode ComputeMetricCode(const DistanceMatrix& dm, int v,
                                    std::span<const int> landmarks) {
  MetricCode code;
  code.reserve(landmarks.size());
  for (int h : landmarks) code.push_back(dm.at(v, h));
  return code;
}

inline void RequireConnected(const DistanceMatrix& dm) {
  if (!dm.connected()) {
    Fail(ErrorKind::kPrecondition, "graph is disconnected; metric codes are undefined");
  }
}

// True iff the metric codes of all vertices with respect to r are pairwise
// distinct. Landmarks are taken in ascending index order.
inline bool IsResolving(const DistanceMatrix& dm, VertexSet r) {
  RequireConnected(dm);
  const auto landmarks = r.elements();
  std::vector<MetricCode> codes;
  codes.reserve(dm.n());
  for (int v = 0; v < dm.n(); ++v) codes.push_back(ComputeMetricCode(dm, v, landmarks));
  std::sort(codes.begin(), codes.end());
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

// For each vertex pair {u, v}, the mask of vertices w with d(u,w) != d(v,w).
// A set resolves the graph iff it hits every such mask.
class Distinguishers {
 public:
  explicit Distinguishers(const DistanceMatrix& dm) : n_(dm.n()) {
    RequireConnected(dm);
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        VertexSet::Mask mask = 0;
        for (int w = 0; w < n_; ++w) {
          if (dm.at(u, w) != dm.at(v, w)) mask |= VertexSet::Mask{1} << w;
        }
        masks_.push_back(mask);
      }
    }
    // Sparse masks first: most non-resolving sets miss one of them early.
    std::sort(masks_.begin(), masks_.end(), [](auto a, auto b) {
      return std::popcount(a) < std::popcount(b);
    });
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
  }

  bool Resolves(VertexSet r) const {
    for (auto mask : masks_) {
      if ((mask & r.bits()) == 0) return false;
    }
    return true;
  }

  int n() const { return n_; }

 private:
  int n_;
  std::vector<VertexSet::Mask> masks_;
};

// Dense table over all 2^n subsets: resolving or not.
inline std::vector<bool> ResolvingTable(const Graph& g, const EnumerationLimits& limits) {
  CheckLimit(g.n(), limits.max_n, "resolving-set enumeration");
  const Distinguishers dist(ComputeDistances(g));
  std::vector<bool> table(std::size_t{1} << g.n());
  ForEachSubset(g.n(), [&](VertexSet s) { table[s.bits()] = dist.Resolves(s); });
  return table;
}

// Resolving sets whose every one-element deletion is non-resolving.
inline SetFamily MinimalResolvingSets(const Graph& g, const EnumerationLimits& limits = {}) {
  const auto table = ResolvingTable(g, limits);
  std::vector<VertexSet> minimal;
  ForEachSubset(g.n(), [&](VertexSet s) {
    if (!table[s.bits()]) return;
    for (int e : s.elements()) {
      if (table[s.Without(e).bits()]) return;
    }
    minimal.push_back(s);
  });
  return SetFamily(std::move(minimal));
}

// A minimum-cardinality resolving set, the canonically first one found by an
// increasing-cardinality search.
inline VertexSet MetricBasis(const Graph& g, const EnumerationLimits& limits = {}) {
  CheckLimit(g.n(), limits.max_n, "metric dimension search");
  const auto dm = ComputeDistances(g);
  RequireConnected(dm);
  VertexSet found;
  for (int k = 0; k <= g.n(); ++k) {
    bool hit = ForEachSubsetOfSize(g.n(), k, [&](VertexSet s) {
      if (!IsResolving(dm, s)) return false;
      found = s;
      return true;
    });
    if (hit) return found;
  }
  Fail(ErrorKind::kPrecondition, "no resolving set found");
}

inline int MetricDimension(const Graph& g, const EnumerationLimits& limits = {}) {
  return MetricBasis(g, limits).size();
}

// Known closed forms for the metric dimension of the generated families.
inline int ClosedFormDimension(Family family, const std::vector<int>& params) {
  if (static_cast<int>(params.size()) != FamilyArity(family)) {
    Fail(ErrorKind::kInvalidArgument, "wrong parameter count for " + FamilyName(family));
  }
  switch (family) {
    case Family::kPath:
      if (params[0] < 1) break;
      return params[0] == 1 ? 0 : 1;
    case Family::kCycle:
      if (params[0] < 3) break;
      return 2;
    case Family::kComplete:
      if (params[0] < 1) break;
      return params[0] - 1;
    case Family::kWheel: {
      const int n = params[0];
      if (n < 3) break;
      switch (n) {
        case 3: return 3;
        case 4: return 2;
        case 5: return 2;
        case 6: return 3;
        default: return (2 * n + 2) / 5;
      }
    }
    case Family::kCompleteBipartite:
      // K_{1,1} is a single edge (dimension 1), outside the m+n-2 formula.
      if (params[0] < 1 || params[1] < 1 || params[0] + params[1] < 3) break;
      return params[0] + params[1] - 2;
    case Family::kStar:
      Fail(ErrorKind::kInvalidArgument, "no closed form registered for star");
  }
  Fail(ErrorKind::kInvalidArgument, "parameters out of range for " + FamilyName(family));
}

}  // namespace resmat

#endif  // RESMAT_RESOLVING_HPP
