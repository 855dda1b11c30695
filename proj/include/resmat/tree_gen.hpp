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

#ifndef RESMAT_TREE_GEN_HPP
#define RESMAT_TREE_GEN_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "resmat/error.hpp"
#include "resmat/graph.hpp"

namespace resmat {

namespace detail {

using AdjacencyList = std::vector<std::vector<int>>;

inline std::string RootedCode(const AdjacencyList& adj, int v, int parent) {
  std::vector<std::string> children;
  for (int w : adj[v]) {
    if (w != parent) children.push_back(RootedCode(adj, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  return code + ")";
}

inline std::vector<int> TreeCenters(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 2) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int leaf : layer) {
      for (int w : adj[leaf]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// Isomorphism-invariant string for a free tree: the smallest rooted code
// over its centers.
inline std::string FreeTreeCode(const AdjacencyList& adj) {
  std::string best;
  for (int c : TreeCenters(adj)) {
    auto code = RootedCode(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

inline Graph ToGraph(const AdjacencyList& adj) {
  std::vector<Edge> edges;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    for (int w : adj[u])
      if (u < w) edges.emplace_back(u, w);
  return Graph::WithDefaultLabels(static_cast<int>(adj.size()), std::move(edges));
}

}  // namespace detail

inline std::string TreeCanonicalCode(const Graph& g) {
  detail::AdjacencyList adj(g.n());
  for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
  return detail::FreeTreeCode(adj);
}

// One representative per isomorphism class of trees on n vertices, grown
// leaf by leaf and deduplicated by canonical code.
inline std::vector<Graph> AllFreeTrees(int n) {
  if (n < 1 || n > 16) Fail(ErrorKind::kLimit, "tree generation supports 1 <= n <= 16");
  std::vector<detail::AdjacencyList> level{detail::AdjacencyList(1)};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<detail::AdjacencyList> next;
    for (const auto& tree : level) {
      for (int attach = 0; attach < size - 1; ++attach) {
        auto grown = tree;
        grown.emplace_back();
        grown[attach].push_back(size - 1);
        grown[size - 1].push_back(attach);
        if (seen.insert(detail::FreeTreeCode(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& adj : level) out.push_back(detail::ToGraph(adj));
  return out;
}

// Uniform labeled tree on n >= 2 vertices from a random Pruefer sequence.
template <typename Rng>
Graph RandomTree(int n, Rng& rng) {
  if (n < 2) Fail(ErrorKind::kInvalidArgument, "random tree needs n >= 2");
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return Graph::WithDefaultLabels(n, std::move(edges));
}

}  // namespace resmat

#endif  // RESMAT_TREE_GEN_HPP
