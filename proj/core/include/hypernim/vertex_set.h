// Copyright 2026 The hypernim Authors.
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

#ifndef HYPERNIM_VERTEX_SET_H_
#define HYPERNIM_VERTEX_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hypernim {

// A subset of {0, ..., 63} stored as a single machine word.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  static VertexSet FromMembers(const std::vector<int>& members);
  // {0, ..., n-1}.
  static constexpr VertexSet Range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet Singleton(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  // Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  // One past the largest member, 0 for the empty set.
  constexpr int span() const { return 64 - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const {
    return VertexSet(bits_ | (std::uint64_t{1} << v));
  }
  constexpr VertexSet without(int v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << v));
  }

  constexpr bool IsSubsetOf(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  std::vector<int> Members() const;
  // "{0,1,3}".
  std::string ToString() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
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
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the sorted member lists; {0,1} < {0,1,2} < {0,3}.
// This is the canonical edge order of a Hypergraph.
bool LexLess(VertexSet a, VertexSet b);

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const {
    std::uint64_t x = s.bits() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

}  // namespace hypernim

#endif  // HYPERNIM_VERTEX_SET_H_
