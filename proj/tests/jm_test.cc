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

#include <gtest/gtest.h>

#include "hypernim/errors.h"

namespace hypernim {
namespace {

TEST(JmTest, ZIntervals) {
  EXPECT_EQ(ZIntervalFor(1), (ZInterval{0, 1}));
  EXPECT_EQ(ZIntervalFor(2), (ZInterval{1, 3}));
  EXPECT_EQ(ZIntervalFor(4), (ZInterval{6, 10}));
  EXPECT_THROW(ZIntervalFor(0), InvalidArgument);
  // The intervals tile the nonnegative integers.
  std::int64_t next = 0;
  for (int eta = 1; eta < 50; ++eta) {
    const ZInterval z = ZIntervalFor(eta);
    EXPECT_EQ(z.lo, next);
    EXPECT_EQ(z.hi - z.lo, eta);
    next = z.hi;
  }
}

TEST(JmTest, PeriodicValueStaysInItsInterval) {
  for (std::int64_t y = 1; y < 12; ++y) {
    const ZInterval z = ZIntervalFor(y);
    for (std::int64_t m = 0; m < 200; ++m) {
      const std::int64_t v = PeriodicValue(m, y);
      EXPECT_TRUE(z.contains(v)) << m << " " << y;
      EXPECT_EQ(PeriodicValue(m + y, y), v);
    }
  }
  EXPECT_EQ(PeriodicValue(4, 3), 3);
  EXPECT_EQ(PeriodicValue(0, 3), 5);
}

TEST(JmTest, WorkedExamplesOnFourCycle) {
  Engine engine(Hypergraph::Of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  const JmProfile a = ComputeJmProfile(engine, Position{1, 2, 4, 2});
  EXPECT_EQ(a.m, 1);
  EXPECT_EQ(a.y, 3);
  EXPECT_TRUE(a.is_long());
  EXPECT_EQ(a.u, 4);
  EXPECT_EQ(a.height, 4);
  EXPECT_EQ(FormatJmProfile(a), "m=1 y=3 class=long U=4");

  const JmProfile b = ComputeJmProfile(engine, Position{4, 5, 7, 5});
  EXPECT_EQ(b.m, 4);
  EXPECT_EQ(b.y, 3);
  EXPECT_EQ(b.v, 3);
  EXPECT_FALSE(b.is_long());
  EXPECT_EQ(b.u, 3);
  EXPECT_FALSE(b.height.has_value());
  EXPECT_EQ(FormatJmProfile(b), "m=4 y=3 v=3 class=short U=3");
}

TEST(JmTest, ZeroMinimumIsLongWithFormulaEqualToHeight) {
  Engine engine(Hypergraph::Of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  const JmProfile p = ComputeJmProfile(engine, Position{0, 3, 2, 5});
  EXPECT_EQ(p.m, 0);
  EXPECT_TRUE(p.is_long());
  EXPECT_EQ(p.u, engine.Height(Position{0, 3, 2, 5}));
}

}  // namespace
}  // namespace hypernim
