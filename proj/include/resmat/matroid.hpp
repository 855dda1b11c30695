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

#ifndef RESMAT_MATROID_HPP
#define RESMAT_MATROID_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "resmat/error.hpp"
#include "resmat/graph.hpp"
#include "resmat/resolving.hpp"
#include "resmat/vertex_set.hpp"

namespace resmat {

enum class Provenance { kFromGraph, kUniform, kGraphic, kExplicit, kTreeOracle };

inline std::string ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kFromGraph: return "from-graph";
    case Provenance::kUniform: return "uniform";
    case Provenance::kGraphic: return "graphic";
    case Provenance::kExplicit: return "explicit";
    case Provenance::kTreeOracle: return "tree-oracle";
  }
  return "?";
}

using IndependenceOracle = std::function<bool(VertexSet)>;

// A ground set {0, ..., n-1} with a downward-closed independence predicate.
//
// Systems are immutable values; copies share one lazily built table of all
// 2^n answers. The table is built at most once under std::call_once, so a
// system may be queried from several threads.
class IndependenceSystem {
 public:
  // Oracle-backed system.
  IndependenceSystem(int ground_size, std::vector<std::string> labels,
                     IndependenceOracle oracle, Provenance provenance)
      : impl_(std::make_shared<Impl>()) {
    Init(ground_size, std::move(labels), provenance);
    impl_->oracle = std::move(oracle);
  }

  // System whose independent sets are the subsets of `maximal`. Listed sets
  // contained in other listed sets are dropped.
  IndependenceSystem(int ground_size, std::vector<std::string> labels,
                     const SetFamily& maximal, Provenance provenance)
      : impl_(std::make_shared<Impl>()) {
    Init(ground_size, std::move(labels), provenance);
    std::vector<VertexSet> keep;
    for (VertexSet s : maximal) {
      if (!s.IsSubsetOf(VertexSet::Full(ground_size))) {
        Fail(ErrorKind::kInvalidArgument, "maximal set exceeds the ground set");
      }
      bool dominated = std::any_of(maximal.begin(), maximal.end(), [s](VertexSet t) {
        return t != s && s.IsSubsetOf(t);
      });
      if (!dominated) keep.push_back(s);
    }
    // The empty set is always independent.
    if (keep.empty()) keep.push_back(VertexSet());
    impl_->maximal = SetFamily(std::move(keep));
  }

  int ground_size() const { return impl_->ground_size; }
  const std::vector<std::string>& labels() const { return impl_->labels; }
  const std::string& label(int e) const { return impl_->labels.at(e); }
  Provenance provenance() const { return impl_->provenance; }
  VertexSet ground() const { return VertexSet::Full(ground_size()); }

  // Present for family-backed systems.
  const std::optional<SetFamily>& maximal_family() const { return impl_->maximal; }

  bool IsIndependent(VertexSet s) const {
    if (!s.IsSubsetOf(ground())) return false;
    if (impl_->table_built.load(std::memory_order_acquire)) {
      return impl_->table[s.bits()];
    }
    if (impl_->maximal) {
      const auto& fam = *impl_->maximal;
      return std::any_of(fam.begin(), fam.end(),
                         [s](VertexSet m) { return s.IsSubsetOf(m); });
    }
    return impl_->oracle(s);
  }

  // Independence of every subset, indexed by mask.
  const std::vector<bool>& Table(const EnumerationLimits& limits) const {
    CheckLimit(ground_size(), limits.max_n, "independence table");
    std::call_once(impl_->table_once, [this] { BuildTable(); });
    return impl_->table;
  }

  VertexSet SetOf(const std::vector<std::string>& labels) const {
    VertexSet s;
    for (const auto& l : labels) {
      auto it = std::find(impl_->labels.begin(), impl_->labels.end(), l);
      if (it == impl_->labels.end()) {
        Fail(ErrorKind::kInvalidArgument, "unknown element label: " + l);
      }
      s.insert(static_cast<int>(it - impl_->labels.begin()));
    }
    return s;
  }

 private:
  struct Impl {
    int ground_size = 0;
    std::vector<std::string> labels;
    Provenance provenance = Provenance::kExplicit;
    IndependenceOracle oracle;
    std::optional<SetFamily> maximal;
    std::once_flag table_once;
    std::atomic<bool> table_built{false};
    std::vector<bool> table;
  };

  void Init(int ground_size, std::vector<std::string> labels, Provenance provenance) {
    if (ground_size < 0 || ground_size > kMaxGroundSize) {
      Fail(ErrorKind::kInvalidArgument, "ground set size out of range");
    }
    if (labels.empty()) {
      for (int i = 0; i < ground_size; ++i) labels.push_back(DefaultLabel(i));
    }
    if (static_cast<int>(labels.size()) != ground_size) {
      Fail(ErrorKind::kInvalidArgument, "label count does not match ground set size");
    }
    impl_->ground_size = ground_size;
    impl_->labels = std::move(labels);
    impl_->provenance = provenance;
  }

  void BuildTable() const {
    const int n = ground_size();
    std::vector<bool> table(std::size_t{1} << n, false);
    if (impl_->maximal) {
      for (VertexSet m : *impl_->maximal) table[m.bits()] = true;
      // Downward closure, one element at a time.
      for (int e = 0; e < n; ++e) {
        const VertexSet::Mask bit = VertexSet::Mask{1} << e;
        for (VertexSet::Mask s = 0; s < table.size(); ++s) {
          if ((s & bit) && table[s]) table[s & ~bit] = true;
        }
      }
    } else {
      ForEachSubset(n, [&](VertexSet s) { table[s.bits()] = impl_->oracle(s); });
    }
    impl_->table = std::move(table);
    impl_->table_built.store(true, std::memory_order_release);
  }

  std::shared_ptr<Impl> impl_;
};

// ---------------------------------------------------------------------------
// Constructions.

// Independent sets are the subsets of minimal resolving sets of g.
inline IndependenceSystem FromGraph(const Graph& g, const EnumerationLimits& limits = {}) {
  if (!Classify(g).connected) {
    Fail(ErrorKind::kPrecondition, "graph is disconnected; resolving sets are undefined");
  }
  return IndependenceSystem(g.n(), g.labels(), MinimalResolvingSets(g, limits),
                            Provenance::kFromGraph);
}

// U_n^l: every subset of cardinality at most l.
inline IndependenceSystem Uniform(int n, int l) {
  if (n < 0 || n > kMaxGroundSize) Fail(ErrorKind::kInvalidArgument, "uniform: bad n");
  if (l < 0 || l > n) {
    Fail(ErrorKind::kInvalidArgument, "uniform: rank must satisfy 0 <= l <= n");
  }
  return IndependenceSystem(
      n, {}, [l](VertexSet s) { return s.size() <= l; }, Provenance::kUniform);
}

// Edge sets of g that induce a forest. Element i is g.edges()[i].
inline IndependenceSystem Graphic(const Graph& g) {
  if (g.edge_count() > kMaxGroundSize) {
    Fail(ErrorKind::kLimit, "graphic matroid: more than 64 edges");
  }
  std::vector<std::string> labels;
  for (auto [u, v] : g.edges()) labels.push_back(g.label(u) + "-" + g.label(v));
  auto edges = g.edges();
  const int n = g.n();
  auto acyclic = [edges, n](VertexSet s) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e : s.elements()) {
      int a = find(edges[e].first);
      int b = find(edges[e].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  };
  return IndependenceSystem(g.edge_count(), std::move(labels), acyclic,
                            Provenance::kGraphic);
}

// ---------------------------------------------------------------------------
// Interchange format:
//
//   n
//   [labels: l1 ... ln]
//   a,b,c            one maximal independent set per line
//
// Without a labels line, labels are registered in order of first appearance
// and unused elements get the lowest free "v<k>". A line holding only "{}"
// denotes the empty set.

inline IndependenceSystem ParseExplicitSystem(std::string_view text) {
  auto lines = detail::ContentLines(text);
  if (lines.empty()) Fail(ErrorKind::kParse, "line 1: missing ground set size");
  if (lines[0].tokens.size() != 1) {
    Fail(ErrorKind::kParse, "line " + std::to_string(lines[0].number) +
                                ": header must be the ground set size");
  }
  const int n = detail::ParseInt(lines[0].tokens[0], lines[0].number);
  if (n < 0 || n > kMaxGroundSize) {
    Fail(ErrorKind::kParse, "line " + std::to_string(lines[0].number) +
                                ": ground set size out of range");
  }
  std::vector<std::string> labels;
  std::map<std::string, int, std::less<>> index;
  std::size_t next = 1;
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
  std::vector<VertexSet> sets;
  for (; next < lines.size(); ++next) {
    const auto& line = lines[next];
    std::string joined;
    for (const auto& t : line.tokens) joined += t;
    VertexSet s;
    if (joined != "{}") {
      std::stringstream in(joined);
      for (std::string label; std::getline(in, label, ',');) {
        if (label.empty()) {
          Fail(ErrorKind::kParse, "line " + std::to_string(line.number) + ": empty label");
        }
        auto it = index.find(label);
        int id;
        if (it != index.end()) {
          id = it->second;
        } else if (!explicit_labels && static_cast<int>(labels.size()) < n) {
          id = static_cast<int>(labels.size());
          labels.push_back(label);
          index.emplace(label, id);
        } else {
          Fail(ErrorKind::kParse, "line " + std::to_string(line.number) +
                                      ": unknown label '" + label + "'");
        }
        if (s.contains(id)) {
          Fail(ErrorKind::kParse, "line " + std::to_string(line.number) +
                                      ": repeated label '" + label + "'");
        }
        s.insert(id);
      }
    }
    sets.push_back(s);
  }
  detail::FillDefaultLabels(labels, n, index);
  return IndependenceSystem(n, std::move(labels), SetFamily(std::move(sets)),
                            Provenance::kExplicit);
}

inline std::string FormatSet(const std::vector<std::string>& labels, VertexSet s,
                             const char* separator = ",") {
  std::string out;
  for (int e : s.elements()) {
    if (!out.empty()) out += separator;
    out += labels.at(e);
  }
  return out;
}

// One set per line, canonical order.
inline std::string FormatFamily(const std::vector<std::string>& labels, const SetFamily& f) {
  std::string out;
  for (VertexSet s : f) out += (s.empty() ? std::string("{}") : FormatSet(labels, s)) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive structure. Everything here scans 2^n subsets and honours
// limits.max_n.

inline SetFamily Bases(const IndependenceSystem& sys, const EnumerationLimits& limits = {}) {
  const auto& table = sys.Table(limits);
  const int n = sys.ground_size();
  std::vector<VertexSet> out;
  ForEachSubset(n, [&](VertexSet s) {
    if (!table[s.bits()]) return;
    for (int e = 0; e < n; ++e) {
      if (!s.contains(e) && table[s.With(e).bits()]) return;
    }
    out.push_back(s);
  });
  return SetFamily(std::move(out));
}

inline SetFamily Circuits(const IndependenceSystem& sys, const EnumerationLimits& limits = {}) {
  const auto& table = sys.Table(limits);
  std::vector<VertexSet> out;
  ForEachSubset(sys.ground_size(), [&](VertexSet s) {
    if (table[s.bits()]) return;
    for (int e : s.elements()) {
      if (!table[s.Without(e).bits()]) return;
    }
    out.push_back(s);
  });
  return SetFamily(std::move(out));
}

inline VertexSet Loops(const IndependenceSystem& sys, const EnumerationLimits& limits = {}) {
  const auto& table = sys.Table(limits);
  VertexSet out;
  for (int e = 0; e < sys.ground_size(); ++e) {
    if (!table[VertexSet::Singleton(e).bits()]) out.insert(e);
  }
  return out;
}

// Elements lying in every base.
inline VertexSet Isthmuses(const IndependenceSystem& sys, const EnumerationLimits& limits = {}) {
  VertexSet common = sys.ground();
  for (VertexSet b : Bases(sys, limits)) common = common & b;
  return common;
}

inline int Rank(const IndependenceSystem& sys, const EnumerationLimits& limits = {}) {
  if (const auto& fam = sys.maximal_family()) {
    int r = 0;
    for (VertexSet m : *fam) r = std::max(r, m.size());
    return r;
  }
  const auto& table = sys.Table(limits);
  int r = 0;
  ForEachSubset(sys.ground_size(), [&](VertexSet s) {
    if (table[s.bits()]) r = std::max(r, s.size());
  });
  return r;
}

// Largest cardinality of an independent subset of s.
inline int RankOf(const IndependenceSystem& sys, VertexSet s,
                  const EnumerationLimits& limits = {}) {
  if (const auto& fam = sys.maximal_family()) {
    int r = 0;
    for (VertexSet m : *fam) r = std::max(r, (m & s).size());
    return r;
  }
  CheckLimit(s.size(), limits.max_n, "rank_of subset scan");
  const auto elems = s.elements();
  for (int k = static_cast<int>(elems.size()); k > 0; --k) {
    bool hit = ForEachSubsetOfSize(static_cast<int>(elems.size()), k, [&](VertexSet pick) {
      VertexSet t;
      for (int i : pick.elements()) t.insert(elems[i]);
      return sys.IsIndependent(t);
    });
    if (hit) return k;
  }
  return 0;
}

// Rank of every subset, indexed by mask.
inline std::vector<int> RankTable(const IndependenceSystem& sys,
                                  const EnumerationLimits& limits = {}) {
  const auto& table = sys.Table(limits);
  std::vector<int> rank(table.size(), 0);
  ForEachSubset(sys.ground_size(), [&](VertexSet s) {
    if (table[s.bits()]) {
      rank[s.bits()] = s.size();
      return;
    }
    int best = 0;
    for (int e : s.elements()) best = std::max(best, rank[s.Without(e).bits()]);
    rank[s.bits()] = best;
  });
  return rank;
}

// ---------------------------------------------------------------------------
// Augmentation.

// Independent sets A, B with |A| < |B| such that A + x is dependent for every
// x in B \ A.
struct AugmentationWitness {
  VertexSet smaller;
  VertexSet larger;
};

struct MatroidVerdict {
  bool is_matroid = false;
  std::optional<AugmentationWitness> witness;
  int rank = 0;
  SetFamily bases;
};

// Checks the witness using only independence queries.
inline bool ValidateWitness(const IndependenceSystem& sys, const AugmentationWitness& w) {
  if (!sys.IsIndependent(w.smaller) || !sys.IsIndependent(w.larger)) return false;
  if (w.smaller.size() >= w.larger.size()) return false;
  for (int x : (w.larger - w.smaller).elements()) {
    if (sys.IsIndependent(w.smaller.With(x))) return false;
  }
  return true;
}

// Exhaustive augmentation check over independent-set pairs. Pairs are
// visited with A in canonical order and, for each A, B in canonical order;
// the reported witness is the first failing pair. Since canonical order is by
// cardinality first, the first failing B for a given A always has
// |B| = |A| + 1, so only those pairs need visiting.
inline MatroidVerdict CheckAugmentation(const IndependenceSystem& sys,
                                        const EnumerationLimits& limits = {}) {
  const auto& table = sys.Table(limits);
  const int n = sys.ground_size();
  std::vector<std::vector<VertexSet>> by_size(n + 1);
  ForEachSubset(n, [&](VertexSet s) {
    if (table[s.bits()]) by_size[s.size()].push_back(s);
  });

  MatroidVerdict verdict;
  verdict.is_matroid = true;
  for (int k = 0; k < n && verdict.is_matroid; ++k) {
    for (VertexSet a : by_size[k]) {
      VertexSet extendable;
      for (int x = 0; x < n; ++x) {
        if (!a.contains(x) && table[a.With(x).bits()]) extendable.insert(x);
      }
      for (VertexSet b : by_size[k + 1]) {
        if (((b - a) & extendable).empty()) {
          verdict.is_matroid = false;
          verdict.witness = AugmentationWitness{a, b};
          break;
        }
      }
      if (!verdict.is_matroid) break;
    }
  }
  for (int k = n; k >= 0; --k) {
    if (!by_size[k].empty()) {
      verdict.rank = k;
      break;
    }
  }
  verdict.bases = Bases(sys, limits);
  return verdict;
}

inline void RequireMatroid(const IndependenceSystem& sys, const EnumerationLimits& limits,
                           const char* what) {
  if (!CheckAugmentation(sys, limits).is_matroid) {
    Fail(ErrorKind::kNotMatroid, std::string(what) + " requires a matroid");
  }
}

// ---------------------------------------------------------------------------
// Flats, hyperplanes, dual. Matroid-only.

inline SetFamily Flats(const IndependenceSystem& sys, const EnumerationLimits& limits = {}) {
  CheckLimit(sys.ground_size(), limits.max_flats_n, "flat enumeration");
  RequireMatroid(sys, limits, "flat enumeration");
  const auto rank = RankTable(sys, limits);
  const int n = sys.ground_size();
  std::vector<VertexSet> out;
  ForEachSubset(n, [&](VertexSet f) {
    for (int x = 0; x < n; ++x) {
      if (!f.contains(x) && rank[f.With(x).bits()] <= rank[f.bits()]) return;
    }
    out.push_back(f);
  });
  return SetFamily(std::move(out));
}

inline SetFamily Hyperplanes(const IndependenceSystem& sys,
                             const EnumerationLimits& limits = {}) {
  const auto flats = Flats(sys, limits);
  const auto rank = RankTable(sys, limits);
  const int r = rank[sys.ground().bits()];
  std::vector<VertexSet> out;
  for (VertexSet f : flats) {
    if (rank[f.bits()] == r - 1) out.push_back(f);
  }
  return SetFamily(std::move(out));
}

// Bases of the dual are the complements of the bases.
inline IndependenceSystem Dual(const IndependenceSystem& sys,
                               const EnumerationLimits& limits = {}) {
  const auto verdict = CheckAugmentation(sys, limits);
  if (!verdict.is_matroid) Fail(ErrorKind::kNotMatroid, "dual requires a matroid");
  std::vector<VertexSet> complements;
  for (VertexSet b : verdict.bases) complements.push_back(Complement(b, sys.ground_size()));
  return IndependenceSystem(sys.ground_size(), sys.labels(),
                            SetFamily(std::move(complements)), Provenance::kExplicit);
}

// Downward closure over every subset; oracles are not trusted to have it.
inline bool IsDownwardClosed(const IndependenceSystem& sys,
                             const EnumerationLimits& limits = {}) {
  const auto& table = sys.Table(limits);
  if (!table[0]) return false;
  bool ok = true;
  ForEachSubset(sys.ground_size(), [&](VertexSet s) {
    if (!ok || !table[s.bits()]) return;
    for (int e : s.elements()) {
      if (!table[s.Without(e).bits()]) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

// ---------------------------------------------------------------------------
// Isomorphism.

struct MatroidSignature {
  int ground_size = 0;
  int rank = 0;
  int loop_count = 0;
  std::size_t base_count = 0;
  std::vector<int> base_sizes;  // sorted multiset

  friend bool operator==(const MatroidSignature&, const MatroidSignature&) = default;
};

inline MatroidSignature Signature(const IndependenceSystem& sys,
                                  const EnumerationLimits& limits = {}) {
  MatroidSignature sig;
  sig.ground_size = sys.ground_size();
  const auto bases = Bases(sys, limits);
  sig.base_count = bases.size();
  for (VertexSet b : bases) {
    sig.base_sizes.push_back(b.size());
    sig.rank = std::max(sig.rank, b.size());
  }
  std::sort(sig.base_sizes.begin(), sig.base_sizes.end());
  sig.loop_count = Loops(sys, limits).size();
  return sig;
}

// A bijection phi (element of a -> element of b) mapping independent sets of
// a exactly onto independent sets of b, or nullopt.
inline std::optional<std::vector<int>> AreIsomorphic(const IndependenceSystem& a,
                                                     const IndependenceSystem& b,
                                                     const EnumerationLimits& limits = {}) {
  CheckLimit(a.ground_size(), limits.max_iso_n, "isomorphism search");
  CheckLimit(b.ground_size(), limits.max_iso_n, "isomorphism search");
  RequireMatroid(a, limits, "isomorphism search");
  RequireMatroid(b, limits, "isomorphism search");
  if (!(Signature(a, limits) == Signature(b, limits))) return std::nullopt;

  const int n = a.ground_size();
  const auto& ta = a.Table(limits);
  const auto& tb = b.Table(limits);

  // Per-element class: (is loop, number of bases containing it).
  auto element_classes = [&](const IndependenceSystem& sys) {
    std::vector<std::pair<bool, int>> cls(n);
    const auto bases = Bases(sys, limits);
    const auto& t = sys.Table(limits);
    for (int e = 0; e < n; ++e) {
      int count = 0;
      for (VertexSet base : bases) count += base.contains(e);
      cls[e] = {!t[VertexSet::Singleton(e).bits()], count};
    }
    return cls;
  };
  const auto class_a = element_classes(a);
  const auto class_b = element_classes(b);

  std::vector<int> phi(n, -1);
  std::vector<VertexSet::Mask> image(std::size_t{1} << n, 0);
  VertexSet used;

  // When element k receives its image, every subset of {0..k} containing k
  // is checked against b.
  std::function<bool(int)> assign = [&](int k) {
    if (k == n) return true;
    const VertexSet::Mask prefix = (VertexSet::Mask{1} << k) - 1;
    const VertexSet::Mask bit_k = VertexSet::Mask{1} << k;
    for (int target = 0; target < n; ++target) {
      if (used.contains(target) || class_a[k] != class_b[target]) continue;
      const VertexSet::Mask bit_t = VertexSet::Mask{1} << target;
      bool consistent = true;
      // Enumerate subsets t of prefix (including empty).
      VertexSet::Mask t = 0;
      do {
        image[t | bit_k] = image[t] | bit_t;
        if (ta[t | bit_k] != tb[image[t | bit_k]]) {
          consistent = false;
          break;
        }
        t = (t - prefix) & prefix;
      } while (t != 0);
      if (!consistent) continue;
      phi[k] = target;
      used.insert(target);
      if (assign(k + 1)) return true;
      used.erase(target);
      phi[k] = -1;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return phi;
}

}  // namespace resmat

#endif  // RESMAT_MATROID_HPP
