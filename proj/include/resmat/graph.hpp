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

#ifndef RESMAT_GRAPH_HPP
#define RESMAT_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resmat/error.hpp"
#include "resmat/vertex_set.hpp"

namespace resmat {

using Edge = std::pair<int, int>;

// Default label of vertex index i is "v<i+1>".
inline std::string DefaultLabel(int i) { return "v" + std::to_string(i + 1); }

// Simple undirected graph on dense vertex indices [0, n). Labels exist only
// for I/O. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Edges are normalized to (min, max) and sorted lexicographically.
  Graph(int n, std::vector<std::string> labels, std::vector<Edge> edges)
      : labels_(std::move(labels)), adjacency_(n) {
    if (n <= 0) Fail(ErrorKind::kInvalidArgument, "graph needs at least one vertex");
    if (static_cast<int>(labels_.size()) != n) {
      Fail(ErrorKind::kInvalidArgument, "label count does not match vertex count");
    }
    for (int i = 0; i < n; ++i) {
      if (!index_.emplace(labels_[i], i).second) {
        Fail(ErrorKind::kInvalidArgument, "duplicate vertex label: " + labels_[i]);
      }
    }
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        Fail(ErrorKind::kInvalidArgument, "edge endpoint out of range");
      }
      if (u == v) Fail(ErrorKind::kInvalidArgument, "self-loop at " + labels_[u]);
      if (u > v) std::swap(u, v);
      edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      Fail(ErrorKind::kInvalidArgument, "duplicate edge");
    }
    for (auto [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  }

  static Graph WithDefaultLabels(int n, std::vector<Edge> edges) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(DefaultLabel(i));
    return Graph(n, std::move(labels), std::move(edges));
  }

  int n() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }

  bool HasEdge(int u, int v) const {
    const auto& row = adjacency_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  std::optional<int> IndexOf(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int RequireIndex(std::string_view label) const {
    auto idx = IndexOf(label);
    if (!idx) Fail(ErrorKind::kInvalidArgument, "unknown vertex label: " + std::string(label));
    return *idx;
  }

  VertexSet SetOf(const std::vector<std::string>& labels) const {
    VertexSet s;
    for (const auto& l : labels) s.insert(RequireIndex(l));
    return s;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int, std::less<>> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// All-pairs shortest-path distances. Unreachable pairs hold infinity() == n.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> dist) : n_(n), dist_(std::move(dist)) {
    connected_ = std::none_of(dist_.begin(), dist_.end(),
                              [n](int d) { return d == n; });
  }

  int n() const { return n_; }
  int infinity() const { return n_; }
  int at(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  bool connected() const { return connected_; }

 private:
  int n_ = 0;
  std::vector<int> dist_;
  bool connected_ = true;
};

inline DistanceMatrix ComputeDistances(const Graph& g) {
  const int n = g.n();
  std::vector<int> dist(static_cast<std::size_t>(n) * n, n);
  for (int s = 0; s < n; ++s) {
    int* row = &dist[static_cast<std::size_t>(s) * n];
    std::queue<int> queue;
    row[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int w : g.neighbors(u)) {
        if (row[w] == n) {
          row[w] = row[u] + 1;
          queue.push(w);
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(dist));
}

struct GraphClass {
  bool connected = false;
  bool tree = false;
  bool path = false;
};

inline GraphClass Classify(const Graph& g) {
  GraphClass c;
  std::vector<bool> seen(g.n(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  c.connected = reached == g.n();
  c.tree = c.connected && g.edge_count() == g.n() - 1;
  int max_degree = 0;
  for (int v = 0; v < g.n(); ++v) max_degree = std::max(max_degree, g.degree(v));
  c.path = c.tree && max_degree <= 2;
  return c;
}

// ---------------------------------------------------------------------------
// Edge-list text format.
//
//   n m
//   [labels: l1 l2 ... ln]
//   label_u label_v        (m lines)
//
// '#' starts a comment. Without a labels line, labels are registered in order
// of first appearance; vertices that never appear get the lowest free "v<k>".

namespace detail {

inline std::vector<std::string> Tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

inline std::string_view StripComment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline int ParseInt(const std::string& token, int line_no) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) {
    Fail(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                ": expected an integer, got '" + token + "'");
  }
  return value;
}

// Assigns default labels to unnamed slots, skipping names already in use.
inline void FillDefaultLabels(std::vector<std::string>& labels, int n,
                              const std::map<std::string, int, std::less<>>& used) {
  int next = 0;
  while (static_cast<int>(labels.size()) < n) {
    std::string candidate = DefaultLabel(next++);
    if (!used.contains(candidate)) labels.push_back(candidate);
  }
}

struct NumberedLine {
  int number;
  std::vector<std::string> tokens;
  std::string text;
};

// Non-blank lines with comments stripped.
inline std::vector<NumberedLine> ContentLines(std::string_view text) {
  std::vector<NumberedLine> out;
  std::istringstream in{std::string(text)};
  int number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    auto body = StripComment(line);
    auto tokens = Tokenize(body);
    if (!tokens.empty()) out.push_back({number, std::move(tokens), std::string(body)});
  }
  return out;
}

}  // namespace detail

inline Graph ParseGraph(std::string_view text) {
  auto lines = detail::ContentLines(text);
  if (lines.empty()) Fail(ErrorKind::kParse, "line 1: missing 'n m' header");
  const auto& header = lines[0];
  if (header.tokens.size() != 2) {
    Fail(ErrorKind::kParse, "line " + std::to_string(header.number) +
                                ": header must be 'n m'");
  }
  const int n = detail::ParseInt(header.tokens[0], header.number);
  const int m = detail::ParseInt(header.tokens[1], header.number);
  if (n <= 0 || m < 0) {
    Fail(ErrorKind::kParse, "line " + std::to_string(header.number) +
                                ": n must be positive and m non-negative");
  }

  std::size_t next = 1;
  std::vector<std::string> labels;
  std::map<std::string, int, std::less<>> index;
  bool explicit_labels = false;
  if (next < lines.size() && lines[next].tokens[0] == "labels:") {
    const auto& line = lines[next];
    if (static_cast<int>(line.tokens.size()) != n + 1) {
      Fail(ErrorKind::kParse, "line " + std::to_string(line.number) +
                                  ": labels line must list exactly n labels");
    }
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      if (!index.emplace(line.tokens[i], static_cast<int>(i - 1)).second) {
        Fail(ErrorKind::kParse, "line " + std::to_string(line.number) +
                                    ": duplicate label '" + line.tokens[i] + "'");
      }
      labels.push_back(line.tokens[i]);
    }
    explicit_labels = true;
    ++next;
  }

  auto resolve = [&](const std::string& label, int line_no) {
    auto it = index.find(label);
    if (it != index.end()) return it->second;
    if (explicit_labels || static_cast<int>(labels.size()) == n) {
      Fail(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                  ": unknown label '" + label + "'");
    }
    int id = static_cast<int>(labels.size());
    labels.push_back(label);
    index.emplace(label, id);
    return id;
  };

  std::vector<Edge> edges;
  for (; next < lines.size(); ++next) {
    const auto& line = lines[next];
    if (static_cast<int>(edges.size()) == m) {
      Fail(ErrorKind::kParse, "line " + std::to_string(line.number) +
                                  ": more edge lines than declared");
    }
    if (line.tokens.size() != 2) {
      Fail(ErrorKind::kParse, "line " + std::to_string(line.number) +
                                  ": expected 'label_u label_v'");
    }
    int u = resolve(line.tokens[0], line.number);
    int v = resolve(line.tokens[1], line.number);
    if (u == v) {
      Fail(ErrorKind::kParse, "line " + std::to_string(line.number) +
                                  ": self-loop at '" + line.tokens[0] + "'");
    }
    Edge e{std::min(u, v), std::max(u, v)};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
      Fail(ErrorKind::kParse, "line " + std::to_string(line.number) +
                                  ": duplicate edge " + line.tokens[0] + " " +
                                  line.tokens[1]);
    }
    edges.push_back(e);
  }
  if (static_cast<int>(edges.size()) != m) {
    Fail(ErrorKind::kParse, "line " + std::to_string(header.number) + ": declared " +
                                std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));
  }
  detail::FillDefaultLabels(labels, n, index);
  return Graph(n, std::move(labels), std::move(edges));
}

// Emits the edge-list format with an explicit labels line and edges in
// lexicographic index order.
inline std::string FormatGraph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edge_count() << "\nlabels:";
  for (const auto& l : g.labels()) out << ' ' << l;
  out << '\n';
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Graph families.

enum class Family { kPath, kCycle, kComplete, kWheel, kCompleteBipartite, kStar };

inline Family ParseFamily(std::string_view name) {
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  if (name == "complete") return Family::kComplete;
  if (name == "wheel") return Family::kWheel;
  if (name == "complete_bipartite") return Family::kCompleteBipartite;
  if (name == "star") return Family::kStar;
  Fail(ErrorKind::kInvalidArgument, "unknown graph family: " + std::string(name));
}

inline std::string FamilyName(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kComplete: return "complete";
    case Family::kWheel: return "wheel";
    case Family::kCompleteBipartite: return "complete_bipartite";
    case Family::kStar: return "star";
  }
  return "?";
}

inline int FamilyArity(Family f) { return f == Family::kCompleteBipartite ? 2 : 1; }

// path(n), cycle(n), complete(n): vertices v1..vn in order.
// wheel(n): rim v1..vn at indices 0..n-1, hub "v" at index n.
// complete_bipartite(m, n): parts u1..um and w1..wn, all u-w edges.
// star(k): center "c" at index 0, leaves l1..lk.
inline Graph GenerateFamily(Family family, const std::vector<int>& params) {
  if (static_cast<int>(params.size()) != FamilyArity(family)) {
    Fail(ErrorKind::kInvalidArgument,
         FamilyName(family) + " takes " + std::to_string(FamilyArity(family)) +
             " parameter(s)");
  }
  auto require = [&](bool ok, const char* message) {
    if (!ok) Fail(ErrorKind::kInvalidArgument, FamilyName(family) + ": " + message);
  };
  std::vector<Edge> edges;
  switch (family) {
    case Family::kPath: {
      const int n = params[0];
      require(n >= 1, "n must be >= 1");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Graph::WithDefaultLabels(n, std::move(edges));
    }
    case Family::kCycle: {
      const int n = params[0];
      require(n >= 3, "n must be >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      return Graph::WithDefaultLabels(n, std::move(edges));
    }
    case Family::kComplete: {
      const int n = params[0];
      require(n >= 1, "n must be >= 1");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      return Graph::WithDefaultLabels(n, std::move(edges));
    }
    case Family::kWheel: {
      const int n = params[0];
      require(n >= 3, "n must be >= 3");
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) {
        labels.push_back(DefaultLabel(i));
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n);
      }
      labels.push_back("v");
      return Graph(n + 1, std::move(labels), std::move(edges));
    }
    case Family::kCompleteBipartite: {
      const int m = params[0];
      const int n = params[1];
      require(m >= 1 && n >= 1, "m and n must be >= 1");
      std::vector<std::string> labels;
      for (int i = 0; i < m; ++i) labels.push_back("u" + std::to_string(i + 1));
      for (int j = 0; j < n; ++j) labels.push_back("w" + std::to_string(j + 1));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
      return Graph(m + n, std::move(labels), std::move(edges));
    }
    case Family::kStar: {
      const int k = params[0];
      require(k >= 1, "k must be >= 1");
      std::vector<std::string> labels{"c"};
      for (int i = 0; i < k; ++i) {
        labels.push_back("l" + std::to_string(i + 1));
        edges.emplace_back(0, i + 1);
      }
      return Graph(k + 1, std::move(labels), std::move(edges));
    }
  }
  Fail(ErrorKind::kInvalidArgument, "unsupported family");
}

}  // namespace resmat

#endif  // RESMAT_GRAPH_HPP
