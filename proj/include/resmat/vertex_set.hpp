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

#ifndef RESMAT_VERTEX_SET_HPP
#define RESMAT_VERTEX_SET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "resmat/error.hpp"

namespace resmat {

// Ground sets never exceed 64 elements; exhaustive routines are gated far
// below that by EnumerationLimits.
inline constexpr int kMaxGroundSize = 64;

// A subset of a ground set {0, ..., n-1}, stored as a bitmask.
class VertexSet {
 public:
  using Mask = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  static VertexSet FromIndices(const std::vector<int>& elements) {
    VertexSet s;
    for (int e : elements) s.insert(e);
    return s;
  }
  // {0, ..., n-1}.
  static constexpr VertexSet Full(int n) {
    return VertexSet(n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }
  static constexpr VertexSet Singleton(int e) { return VertexSet(Mask{1} << e); }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool IsSubsetOf(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  void insert(int e) {
    if (e < 0 || e >= kMaxGroundSize) {
      Fail(ErrorKind::kInvalidArgument,
           "element index out of range: " + std::to_string(e));
    }
    bits_ |= Mask{1} << e;
  }
  void erase(int e) { bits_ &= ~(Mask{1} << e); }

  constexpr VertexSet With(int e) const { return VertexSet(bits_ | (Mask{1} << e)); }
  constexpr VertexSet Without(int e) const {
    return VertexSet(bits_ & ~(Mask{1} << e));
  }

  // Ascending element indices.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  Mask bits_ = 0;
};

// Canonical order: by cardinality, then by bitmask value.
struct CanonicalLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

// Complement relative to a ground set of size n.
constexpr VertexSet Complement(VertexSet s, int n) {
  return VertexSet::Full(n) - s;
}

// A duplicate-free collection of subsets kept in canonical order.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::vector<VertexSet> sets) : sets_(std::move(sets)) {
    Normalize();
  }
  SetFamily(std::initializer_list<VertexSet> sets) : sets_(sets) { Normalize(); }

  const std::vector<VertexSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const VertexSet& operator[](std::size_t i) const { return sets_[i]; }

  bool contains(VertexSet s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s, CanonicalLess{});
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) = default;

 private:
  void Normalize() {
    std::sort(sets_.begin(), sets_.end(), CanonicalLess{});
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  std::vector<VertexSet> sets_;
};

// Applies `fn` to every subset of {0, ..., n-1} in increasing mask order.
template <typename Fn>
void ForEachSubset(int n, Fn&& fn) {
  const VertexSet::Mask end = VertexSet::Mask{1} << n;
  for (VertexSet::Mask m = 0; m < end; ++m) fn(VertexSet(m));
}

// Applies `fn` to every k-subset of {0, ..., n-1} in increasing mask order.
// Stops early and returns true as soon as `fn` returns true.
template <typename Fn>
bool ForEachSubsetOfSize(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  if (k == 0) return fn(VertexSet());
  VertexSet::Mask m = (VertexSet::Mask{1} << k) - 1;
  const VertexSet::Mask limit = VertexSet::Mask{1} << n;
  while (m < limit) {
    if (fn(VertexSet(m))) return true;
    // Gosper's hack: next mask with the same popcount.
    const VertexSet::Mask c = m & (~m + 1);
    const VertexSet::Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return false;
}

}  // namespace resmat

#endif  // RESMAT_VERTEX_SET_HPP
