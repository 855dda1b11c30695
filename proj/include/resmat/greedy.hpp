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

#ifndef RESMAT_GREEDY_HPP
#define RESMAT_GREEDY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "resmat/error.hpp"
#include "resmat/graph.hpp"
#include "resmat/matroid.hpp"
#include "resmat/vertex_set.hpp"

namespace resmat {

// Exact non-negative weight.
using Weight = boost::rational<std::int64_t>;

inline std::string FormatWeight(const Weight& w) {
  if (w.denominator() == 1) return std::to_string(w.numerator());
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

// Accepts "7", "p/q", or a decimal such as "2.75". Rejects negatives.
inline Weight ParseWeight(const std::string& text) {
  auto bad = [&]() -> Weight {
    Fail(ErrorKind::kParse, "invalid weight '" + text + "'");
  };
  auto parse_digits = [&](const std::string& s) -> std::int64_t {
    if (s.empty() || s.size() > 17 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      bad();
    }
    return std::stoll(s);
  };
  if (text.empty() || text[0] == '-') return bad();
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const auto p = parse_digits(text.substr(0, slash));
    const auto q = parse_digits(text.substr(slash + 1));
    if (q == 0) return bad();
    return Weight(p, q);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 12) return bad();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return Weight(whole.empty() ? 0 : parse_digits(whole)) + Weight(parse_digits(frac), scale);
  }
  return Weight(parse_digits(text));
}

class WeightAssignment {
 public:
  WeightAssignment() = default;
  explicit WeightAssignment(std::vector<Weight> weights) : weights_(std::move(weights)) {
    for (const auto& w : weights_) {
      if (w < 0) Fail(ErrorKind::kInvalidArgument, "weights must be non-negative");
    }
  }
  static WeightAssignment Uniform(int n, Weight w = 1) {
    return WeightAssignment(std::vector<Weight>(n, w));
  }

  int size() const { return static_cast<int>(weights_.size()); }
  const Weight& operator[](int e) const { return weights_.at(e); }
  const std::vector<Weight>& values() const { return weights_; }

  Weight Total(VertexSet s) const {
    Weight sum = 0;
    for (int e : s.elements()) sum += weights_.at(e);
    return sum;
  }

 private:
  std::vector<Weight> weights_;
};

struct ParsedWeights {
  WeightAssignment weights;
  std::vector<std::string> warnings;
};

// Lines "label weight". Labels not mentioned get weight 1 and a warning.
inline ParsedWeights ParseWeights(std::string_view text, const std::vector<std::string>& labels) {
  std::map<std::string, int, std::less<>> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) index.emplace(labels[i], i);
  std::vector<std::optional<Weight>> slots(labels.size());
  for (const auto& line : detail::ContentLines(text)) {
    const std::string where = "line " + std::to_string(line.number) + ": ";
    if (line.tokens.size() != 2) Fail(ErrorKind::kParse, where + "expected 'label weight'");
    const std::string& label = line.tokens[0];
    auto it = index.find(label);
    if (it == index.end()) Fail(ErrorKind::kParse, where + "unknown label '" + label + "'");
    if (slots[it->second]) Fail(ErrorKind::kParse, where + "duplicate label '" + label + "'");
    try {
      slots[it->second] = ParseWeight(line.tokens[1]);
    } catch (const Error& e) {
      Fail(ErrorKind::kParse, where + e.what());
    }
  }
  ParsedWeights out;
  std::vector<Weight> values;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      out.warnings.push_back("no weight for '" + labels[i] + "', using 1");
      slots[i] = Weight(1);
    }
    values.push_back(*slots[i]);
  }
  out.weights = WeightAssignment(std::move(values));
  return out;
}

struct TraceStep {
  int element;
  bool accepted;
};

struct GreedyResult {
  VertexSet selected;
  Weight total = 0;
  std::vector<TraceStep> trace;
  // False when the input was not verified to be a matroid.
  bool certified = true;
};

struct GreedyOptions {
  // Run on systems that fail (or cannot be checked for) augmentation; the
  // result is marked uncertified.
  bool force = false;
};

// Elements in nondecreasing weight order, ties by ascending index.
inline std::vector<int> GreedyOrder(const WeightAssignment& w) {
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  return order;
}

inline GreedyResult GreedyMinWeightBase(const IndependenceSystem& sys, const WeightAssignment& w,
                                        const GreedyOptions& options = {},
                                        const EnumerationLimits& limits = {}) {
  if (w.size() != sys.ground_size()) {
    Fail(ErrorKind::kInvalidArgument, "weight count does not match ground set size");
  }
  GreedyResult result;
  try {
    result.certified = CheckAugmentation(sys, limits).is_matroid;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kLimit || !options.force) throw;
    result.certified = false;
  }
  if (!result.certified && !options.force) {
    Fail(ErrorKind::kNotMatroid,
         "independence system is not a matroid; greedy result would be uncertified "
         "(use force to run anyway)");
  }
  for (int e : GreedyOrder(w)) {
    const bool accept = sys.IsIndependent(result.selected.With(e));
    if (accept) result.selected.insert(e);
    result.trace.push_back({e, accept});
  }
  result.total = w.Total(result.selected);
  return result;
}

// Direct scan over all bases: minimum total weight, first in canonical order
// among ties.
inline GreedyResult ExhaustiveMinWeightBase(const IndependenceSystem& sys,
                                            const WeightAssignment& w,
                                            const EnumerationLimits& limits = {}) {
  if (w.size() != sys.ground_size()) {
    Fail(ErrorKind::kInvalidArgument, "weight count does not match ground set size");
  }
  GreedyResult best;
  bool have = false;
  for (VertexSet b : Bases(sys, limits)) {
    Weight total = w.Total(b);
    if (!have || total < best.total) {
      best.selected = b;
      best.total = total;
      have = true;
    }
  }
  return best;
}

}  // namespace resmat

#endif  // RESMAT_GREEDY_HPP
