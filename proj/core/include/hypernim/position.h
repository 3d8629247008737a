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

#ifndef HYPERNIM_POSITION_H_
#define HYPERNIM_POSITION_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hypernim/vertex_set.h"

namespace hypernim {

// Pile sizes of a NIM position, one per vertex.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<int> piles);
  Position(std::initializer_list<int> piles)
      : Position(std::vector<int>(piles)) {}

  static Position Filled(int n, int value) {
    return Position(std::vector<int>(n, value));
  }

  int size() const { return static_cast<int>(piles_.size()); }
  int operator[](int i) const { return piles_[i]; }
  int& operator[](int i) { return piles_[i]; }
  const std::vector<int>& piles() const { return piles_; }
  auto begin() const { return piles_.begin(); }
  auto end() const { return piles_.end(); }

  // m(x); 0 for the empty position.
  int MinPile() const;
  int MaxPile() const;
  // min over the coordinates of s.
  int MinOver(VertexSet s) const;
  long long Sum() const;

  // x - c*e, clamped at nothing: callers guarantee c <= MinPile().
  Position ShiftedDown(int c) const;

  // Componentwise <=.
  bool Dominates(const Position& other) const;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  std::vector<int> piles_;
};

// "1,2,4,2".
Position ParsePosition(std::string_view csv);
std::string FormatPosition(const Position& x);

struct PositionHash {
  std::size_t operator()(const Position& x) const;
};

}  // namespace hypernim

#endif  // HYPERNIM_POSITION_H_
