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

#ifndef HYPERNIM_STRUCTURE_H_
#define HYPERNIM_STRUCTURE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypernim/engine.h"
#include "hypernim/hypergraph.h"
#include "hypernim/position.h"

namespace hypernim {

// Basis exchange: for all edges H, H' and every i in H \ H' there is
// j in H' \ H with (H - i) + j an edge. Throws InvalidArgument unless h is
// uniform.
bool ExchangeAxiomHolds(const Hypergraph& h);

struct ExchangeViolation {
  int from_edge;
  int to_edge;
  int removed_vertex;
};
std::optional<ExchangeViolation> FindExchangeViolation(const Hypergraph& h);

// The complement of every edge is an edge.
bool IsSelfDual(const Hypergraph& h);

// A sequence a = H_0, ..., H_p = b of edges inside a | b in which each step
// meets its predecessor and adds at most one new vertex. Throws
// InvalidArgument if a or b is not an edge of h.
bool ChainExists(const Hypergraph& h, VertexSet a, VertexSet b);

// Chains exist between every ordered pair of edges.
bool HasChainProperty(const Hypergraph& h);
// First ordered pair (by edge index) without a chain.
std::optional<std::pair<int, int>> FindChainlessPair(const Hypergraph& h);

// For every nonempty subfamily F of h whose support V(F) is a proper subset of
// the ground set there are F in F and S in h with
// {} != S \ F  subset of  V \ V(F).
//
// Exact. A subfamily with support W fails iff all its members are "bad" for
// W, so a failing subfamily exists iff the bad edges inside W cover W; the
// search runs over the achievable supports W instead of over subfamilies.
bool SatisfiesD3(const Hypergraph& h);

struct D3Violation {
  VertexSet support;
  // Indices of the edges of the maximal failing subfamily.
  std::vector<int> subfamily;
};
inline constexpr std::int64_t kMaxD3Supports = std::int64_t{1} << 22;
std::optional<D3Violation> FindD3Violation(const Hypergraph& h);

// Some edge H is a height move at x (h(x - chi(H)) = h(x) - 1) and contains
// a minimum pile. Throws InvalidArgument when m(x) = 0.
bool SatisfiesD2At(Engine& engine, const Position& x);

struct KConditions {
  bool k1 = false;  // |K & K'| >= delta for all K, K'
  bool k2 = false;  // |K & K'| <= k - 2 for distinct K, K'
  bool k3 = false;  // no single vertex meets every K
  bool all() const { return k1 && k2 && k3; }
};

// Requires kk to be (k + delta - 1)-uniform and 0 < delta <= k - 3.
KConditions CheckKConstruction(const Hypergraph& kk, int k, int delta);

enum class JmVerdictTag { kProvablyJm, kProvablyNotJm, kUnknown };
const char* ToString(JmVerdictTag tag);

struct JmVerdict {
  JmVerdictTag tag = JmVerdictTag::kUnknown;
  bool connected = false;
  bool minimal_transversal_free = false;
  std::optional<bool> chain_property;  // D1
  std::optional<bool> d3;
  // Name of the property that decided (or blocked) the verdict and a
  // human-readable witness, e.g. "not connected" / "{0,1} | {2,3}".
  std::string reason;
  std::vector<VertexSet> witness_sets;
  // Advisory D2 sampling over [1..bound]^n for Unknown verdicts. This is
  // evidence only; D2 over a finite box proves nothing.
  std::int64_t d2_positions_sampled = 0;
  std::int64_t d2_failures = 0;
  std::optional<Position> d2_first_failure;
  bool d2_sampling_skipped = false;
};

// ProvablyNotJm if h is disconnected or not minimal transversal-free;
// ProvablyJm if additionally D1 and D3 hold; Unknown otherwise.
JmVerdict JmSufficiency(const Hypergraph& h, int d2_box_bound,
                        std::int64_t max_d2_positions = 1'000'000);

}  // namespace hypernim

#endif  // HYPERNIM_STRUCTURE_H_
