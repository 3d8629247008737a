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

#include "hypernim/jm.h"

#include "hypernim/errors.h"

namespace hypernim {

ZInterval ZIntervalFor(std::int64_t eta) {
  if (eta < 1) {
    throw InvalidArgument("Z interval needs eta >= 1, got " +
                          std::to_string(eta));
  }
  return ZInterval{Choose2(eta), Choose2(eta + 1)};
}

std::int64_t PeriodicValue(std::int64_t m, std::int64_t y) {
  if (y < 1) throw InvalidArgument("y must be positive");
  const std::int64_t base = Choose2(y);
  std::int64_t r = (m - base - 1) % y;
  if (r < 0) r += y;
  return base + r;
}

const char* ToString(PositionClass c) {
  return c == PositionClass::kLong ? "long" : "short";
}

JmProfile ComputeJmProfile(Engine& engine, const Position& x) {
  JmProfile p;
  p.m = x.MinPile();
  p.y = engine.Height(x.ShiftedDown(static_cast<int>(p.m))) + 1;
  p.v = PeriodicValue(p.m, p.y);
  if (p.m <= Choose2(p.y)) {
    p.position_class = PositionClass::kLong;
    p.height = engine.Height(x);
    p.u = *p.height;
  } else {
    p.position_class = PositionClass::kShort;
    p.u = p.v;
  }
  return p;
}

std::string FormatJmProfile(const JmProfile& p) {
  std::string out = "m=" + std::to_string(p.m) + " y=" + std::to_string(p.y);
  if (!p.is_long()) out += " v=" + std::to_string(p.v);
  out += " class=";
  out += ToString(p.position_class);
  out += " U=" + std::to_string(p.u);
  return out;
}

}  // namespace hypernim
