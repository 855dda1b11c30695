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

#ifndef RESMAT_TREE_HPP
#define RESMAT_TREE_HPP

#include <string>
#include <vector>

#include "resmat/error.hpp"
#include "resmat/graph.hpp"
#include "resmat/matroid.hpp"
#include "resmat/vertex_set.hpp"

namespace resmat {

enum class VertexRole {
  kExteriorMajor,     // degree >= 3 with at least one branch path
  kMajorNotExterior,  // degree >= 3, no branch path
  kBranchPath,        // on a leg
  kConnector,         // degree <= 2, not on a leg
};

inline std::string RoleName(VertexRole r) {
  switch (r) {
    case VertexRole::kExteriorMajor: return "exterior major";
    case VertexRole::kMajorNotExterior: return "major not exterior";
    case VertexRole::kBranchPath: return "branch path";
    case VertexRole::kConnector: return "connector";
  }
  return "?";
}

struct ExteriorMajor {
  int vertex = -1;
  // Each leg is the vertex set of a maximal path hanging from `vertex`: its
  // internal vertices have degree 2 and it ends in a leaf. `vertex` itself is
  // excluded.
  std::vector<VertexSet> branch_paths;
};

// Legs of a tree grouped by the exterior major vertex they hang from.
// Immutable after construction.
class TreeDecomposition {
 public:
  const Graph& graph() const { return graph_; }
  int n() const { return graph_.n(); }
  const std::vector<ExteriorMajor>& exterior_majors() const { return majors_; }
  VertexSet leg_vertices() const { return legs_; }
  VertexSet non_leg_vertices() const { return Complement(legs_, n()); }
  VertexRole role(int v) const { return roles_.at(v); }

  // Branch path containing v as (major index, path index), or {-1, -1}.
  std::pair<int, int> path_of(int v) const { return path_of_.at(v); }

  // Number of branch paths at v (0 unless v is an exterior major).
  int branch_path_count(int v) const {
    for (const auto& m : majors_) {
      if (m.vertex == v) return static_cast<int>(m.branch_paths.size());
    }
    return 0;
  }

  friend TreeDecomposition DecomposeTree(const Graph& g);

 private:
  Graph graph_;
  std::vector<ExteriorMajor> majors_;
  VertexSet legs_;
  std::vector<VertexRole> roles_;
  std::vector<std::pair<int, int>> path_of_;
};

// Walks from every leaf toward the first vertex of degree >= 3. Rejects
// non-trees, paths, and trees with fewer than 4 vertices.
inline TreeDecomposition DecomposeTree(const Graph& g) {
  const auto cls = Classify(g);
  if (!cls.tree) Fail(ErrorKind::kPrecondition, "graph is not a tree");
  if (g.n() < 4) {
    Fail(ErrorKind::kPrecondition, "trees with fewer than 4 vertices are not decomposed");
  }
  if (cls.path) {
    Fail(ErrorKind::kPrecondition,
         "graph is a path; its independence system is not a matroid");
  }

  TreeDecomposition td;
  td.graph_ = g;
  const int n = g.n();
  std::vector<std::vector<VertexSet>> legs_at(n);
  for (int leaf = 0; leaf < n; ++leaf) {
    if (g.degree(leaf) != 1) continue;
    VertexSet leg = VertexSet::Singleton(leaf);
    int prev = leaf;
    int cur = g.neighbors(leaf)[0];
    while (g.degree(cur) == 2) {
      leg.insert(cur);
      int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
      prev = cur;
      cur = next;
    }
    if (g.degree(cur) == 1) {
      Fail(ErrorKind::kPrecondition, "graph is a path; its independence system is not a matroid");
    }
    legs_at[cur].push_back(leg);
    td.legs_ = td.legs_ | leg;
  }

  td.roles_.assign(n, VertexRole::kConnector);
  td.path_of_.assign(n, {-1, -1});
  for (int v = 0; v < n; ++v) {
    if (td.legs_.contains(v)) td.roles_[v] = VertexRole::kBranchPath;
    if (g.degree(v) < 3) continue;
    if (legs_at[v].empty()) {
      td.roles_[v] = VertexRole::kMajorNotExterior;
      continue;
    }
    td.roles_[v] = VertexRole::kExteriorMajor;
    auto& paths = legs_at[v];
    std::sort(paths.begin(), paths.end(), CanonicalLess{});
    const int major_index = static_cast<int>(td.majors_.size());
    for (int p = 0; p < static_cast<int>(paths.size()); ++p) {
      for (int u : paths[p].elements()) td.path_of_[u] = {major_index, p};
    }
    td.majors_.push_back({v, std::move(paths)});
  }
  return td;
}

// s is independent iff it only uses leg vertices, takes at most one vertex
// per leg, and leaves at least one leg of every exterior major unoccupied.
inline bool TreeIsIndependent(const TreeDecomposition& td, VertexSet s) {
  if (!s.IsSubsetOf(td.leg_vertices())) return false;
  for (const auto& major : td.exterior_majors()) {
    int occupied = 0;
    for (VertexSet leg : major.branch_paths) {
      const int hits = (leg & s).size();
      if (hits > 1) return false;
      occupied += hits;
    }
    if (occupied >= static_cast<int>(major.branch_paths.size())) return false;
  }
  return true;
}

inline int TreeRank(const TreeDecomposition& td) {
  int rank = 0;
  for (const auto& major : td.exterior_majors()) {
    rank += static_cast<int>(major.branch_paths.size()) - 1;
  }
  return rank;
}

// Vertices in no minimal resolving set: everything off the legs, plus the
// lone leg of an exterior major that has exactly one.
inline VertexSet TreeLoops(const TreeDecomposition& td) {
  VertexSet loops = td.non_leg_vertices();
  for (const auto& major : td.exterior_majors()) {
    if (major.branch_paths.size() == 1) loops = loops | major.branch_paths[0];
  }
  return loops;
}

// V minus the union of two legs of one exterior major, for every such pair.
inline SetFamily TreeHyperplanes(const TreeDecomposition& td) {
  std::vector<VertexSet> out;
  for (const auto& major : td.exterior_majors()) {
    const auto& legs = major.branch_paths;
    for (std::size_t i = 0; i < legs.size(); ++i)
      for (std::size_t j = i + 1; j < legs.size(); ++j)
        out.push_back(Complement(legs[i] | legs[j], td.n()));
  }
  return SetFamily(std::move(out));
}

// Complements of the hyperplanes: unions of two legs at one exterior major.
inline SetFamily TreeDualCircuits(const TreeDecomposition& td) {
  std::vector<VertexSet> out;
  for (VertexSet h : TreeHyperplanes(td)) out.push_back(Complement(h, td.n()));
  return SetFamily(std::move(out));
}

struct TreeMatroidVerdict {
  int rank = 0;
  VertexSet loops;
  SetFamily hyperplanes;
  SetFamily dual_circuits;
};

inline TreeMatroidVerdict AnalyzeTree(const TreeDecomposition& td) {
  return {TreeRank(td), TreeLoops(td), TreeHyperplanes(td), TreeDualCircuits(td)};
}

// The tree's independence system backed by the leg criterion instead of
// subset enumeration.
inline IndependenceSystem TreeOracleSystem(const TreeDecomposition& td) {
  return IndependenceSystem(
      td.n(), td.graph().labels(),
      [td](VertexSet s) { return TreeIsIndependent(td, s); }, Provenance::kTreeOracle);
}

struct ClassificationRow {
  std::string vertex;
  VertexRole role;
  int branch_paths;
};

// One row per vertex, exterior majors first, then majors not exterior, then
// the rest; index order within each group.
inline std::vector<ClassificationRow> ClassificationTable(const TreeDecomposition& td) {
  std::vector<ClassificationRow> rows;
  for (VertexRole wanted : {VertexRole::kExteriorMajor, VertexRole::kMajorNotExterior,
                            VertexRole::kBranchPath, VertexRole::kConnector}) {
    for (int v = 0; v < td.n(); ++v) {
      if (td.role(v) == wanted) {
        rows.push_back({td.graph().label(v), wanted, td.branch_path_count(v)});
      }
    }
  }
  return rows;
}

}  // namespace resmat

#endif  // RESMAT_TREE_HPP
