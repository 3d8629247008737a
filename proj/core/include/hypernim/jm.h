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

#ifndef HYPERNIM_JM_H_
#define HYPERNIM_JM_H_

#include <cstdint>
#include <optional>
#include <string>

#include "hypernim/engine.h"
#include "hypernim/position.h"

namespace hypernim {

// C(n, 2).
constexpr std::int64_t Choose2(std::int64_t n) { return n * (n - 1) / 2; }

// Half-open integer interval [lo, hi).
struct ZInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool contains(std::int64_t i) const { return lo <= i && i < hi; }
  friend bool operator==(const ZInterval&, const ZInterval&) = default;
};

// [C(eta,2), C(eta+1,2)). Throws InvalidArgument for eta < 1.
ZInterval ZIntervalFor(std::int64_t eta);

// C(y,2) + ((m - C(y,2) - 1) mod y), with the mod taken into [0, y).
std::int64_t PeriodicValue(std::int64_t m, std::int64_t y);

enum class PositionClass { kLong, kShort };

const char* ToString(PositionClass c);

struct JmProfile {
  // Minimum pile.
  std::int64_t m = 0;
  // height(x - m e) + 1.
  std::int64_t y = 1;
  // PeriodicValue(m, y).
  std::int64_t v = 0;
  // Long iff m <= C(y, 2).
  PositionClass position_class = PositionClass::kLong;
  // The formula value: height(x) for long positions, v for short ones.
  std::int64_t u = 0;
  // height(x); only evaluated for long positions.
  std::optional<int> height;

  bool is_long() const { return position_class == PositionClass::kLong; }
};

JmProfile ComputeJmProfile(Engine& engine, const Position& x);

// "m=1 y=3 class=long U=4" or "m=4 y=3 v=3 class=short U=3".
std::string FormatJmProfile(const JmProfile& p);

}  // namespace hypernim

#endif  // HYPERNIM_JM_H_
