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

#include "hypernim/edge_packing.h"

#include <algorithm>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "hypernim/errors.h"
#include "oracles.h"

namespace hypernim {
namespace {

// Exhaustive search over multiplicity vectors.
int BruteForcePacking(const std::vector<VertexSet>& edges, Position cap) {
  std::function<int(std::size_t, Position&)> rec = [&](std::size_t i,
                                                       Position& c) -> int {
    if (i == edges.size()) return 0;
    int best = rec(i + 1, c);
    int taken = 0;
    while (c.MinOver(edges[i]) > 0) {
      edges[i].ForEach([&](int v) { --c[v]; });
      ++taken;
      best = std::max(best, taken + rec(i + 1, c));
    }
    edges[i].ForEach([&](int v) { c[v] += taken; });
    return best;
  };
  return rec(0, cap);
}

void ExpectFeasible(const std::vector<VertexSet>& edges, const Position& cap,
                    const PackingResult& r) {
  ASSERT_EQ(r.multiplicity.size(), edges.size());
  std::vector<int> load(cap.size(), 0);
  int total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EXPECT_GE(r.multiplicity[i], 0);
    total += r.multiplicity[i];
    edges[i].ForEach([&](int v) { load[v] += r.multiplicity[i]; });
  }
  EXPECT_EQ(total, r.value);
  for (int v = 0; v < cap.size(); ++v) EXPECT_LE(load[v], cap[v]);
}

TEST(EdgePackingTest, FourCycle) {
  const std::vector<VertexSet> c4 = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  const Position x{6, 7, 14, 9};
  const auto r = MaxEdgePacking(c4, x);
  EXPECT_EQ(r.value, std::min(x[0] + x[2], x[1] + x[3]));
  ExpectFeasible(c4, x, r);
}

TEST(EdgePackingTest, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    const Hypergraph h = testing::RandomHypergraph(rng, n, 2 + trial % 5, 3);
    std::vector<int> piles(n);
    for (int& p : piles) p = static_cast<int>(rng() % 6);
    const Position cap(piles);
    const auto r = MaxEdgePacking(h.edges(), cap);
    EXPECT_EQ(r.value, BruteForcePacking(h.edges(), cap))
        << FormatHypergraph(h) << FormatPosition(cap);
    ExpectFeasible(h.edges(), cap, r);
  }
}

TEST(EdgePackingTest, NodeLimit) {
  std::vector<VertexSet> edges;
  for (int i = 0; i < 12; ++i) {
    for (int j = i + 1; j < 12; ++j) edges.push_back(VertexSet{i, j});
  }
  EXPECT_THROW(MaxEdgePacking(edges, Position::Filled(12, 41), 0),
               ResourceLimitError);
}

}  // namespace
}  // namespace hypernim
