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

#ifndef HYPERNIM_VERIFY_H_
#define HYPERNIM_VERIFY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypernim/engine.h"
#include "hypernim/families.h"
#include "hypernim/hypergraph.h"
#include "hypernim/jm.h"
#include "hypernim/position.h"

namespace hypernim {

// Product of inclusive integer ranges, scanned in odometer order (last
// coordinate fastest).
struct Box {
  std::vector<int> lo;
  std::vector<int> hi;

  static Box Cube(int n, int lo, int hi);
  static Box Point(const Position& x);

  int dims() const { return static_cast<int>(lo.size()); }
  std::int64_t Volume() const;
  Position At(std::int64_t rank) const;
  // "[0..3]^5", or one range per coordinate when they differ.
  std::string ToString() const;
};

struct VerifyOptions {
  int workers = 1;
  EngineLimits limits;
  std::int64_t max_positions = 20'000'000;
  // Label copied into reports.
  std::string family_id;
};

enum class ReportStatus { kAllMatch, kCounterexampleFound };
const char* ToString(ReportStatus s);

struct Counterexample {
  Position x;
  int sg = 0;
  std::int64_t u = 0;
};

struct ConditionOutcome {
  bool holds = true;
  // Hypothesis of the law unmet; `note` says why.
  bool skipped = false;
  std::string note;
  std::optional<Position> first_violation;
  std::string witness;
};

struct ConformanceReport {
  std::string family_id;
  std::string box;
  int bound = 0;
  std::int64_t positions_checked = 0;
  ReportStatus status = ReportStatus::kAllMatch;
  std::optional<Counterexample> first_counterexample;
  std::map<std::string, ConditionOutcome> per_condition;

  // No counterexample and no failing condition.
  bool AllHold() const;
};

// Compares the Sprague-Grundy value with U at every x in [0..bound]^n.
ConformanceReport VerifySgEqualsJm(const Hypergraph& h, int bound,
                                   const VerifyOptions& options = {});
ConformanceReport VerifySgEqualsJm(const Hypergraph& h, const Box& box,
                                   const VerifyOptions& options = {});

// Sprague-Grundy values of two hypergraphs on the same vertex set agree on
// the box. The counterexample records the first hypergraph's value as sg and
// the second's as u.
ConformanceReport CompareSg(const Hypergraph& a, const Hypergraph& b, int bound,
                            const VerifyOptions& options = {});

// Names accepted by CheckConditions.
inline const std::vector<std::string> kConditionNames = {"A",  "B1", "B2",
                                                         "B3", "C2", "C3"};
ConformanceReport CheckConditions(const Hypergraph& h, const Box& box,
                                  const std::vector<std::string>& which,
                                  const VerifyOptions& options = {});
ConformanceReport CheckConditions(const Hypergraph& h, int bound,
                                  const std::vector<std::string>& which,
                                  const VerifyOptions& options = {});

// l0: sg <= h (on [0..sg_bound]^n), l1: monotonicity and unit drop over all
// comparable pairs, l2: interval property of H-moves, l3T: h(x') >= m(x)
// for transversal-free h, l-my: (m, y) changes along every move.
ConformanceReport HeightLawSuite(const Hypergraph& h, int bound,
                                 std::optional<int> sg_bound = std::nullopt,
                                 const VerifyOptions& options = {});

// (m, q, q, q, 2q, 2q, 2q, 3q) with m = C(3p+1, 2), q = m + p.
Position CubeCounterexamplePosition(int p);

enum class CubeCheckMethod {
  kAuto,
  // Every move from the position.
  kExhaustive,
  // Per facet, the targets with height h(x) - 1 form an up-set below the
  // slow move; it is explored by unit decrements from the slow move.
  kUpSet,
};

struct CubeCheckResult {
  Position x;
  JmProfile profile;
  bool profile_as_expected = false;
  CubeCheckMethod method = CubeCheckMethod::kAuto;
  std::int64_t successors_examined = 0;
  // A long successor of height h(x) - 1, if one exists.
  std::optional<Position> long_successor;
  // B1 fails at z = h(x) - 1.
  bool refuted() const {
    return profile_as_expected && !long_successor.has_value();
  }
};

CubeCheckResult CubeCounterexampleCheck(
    int p, CubeCheckMethod method = CubeCheckMethod::kAuto);

struct BoundCheck {
  std::string name;
  std::int64_t value = 0;
  std::int64_t limit = 0;
  // value <= limit, or lower <= value for lower-bound checks.
  bool holds = true;
  bool equality = false;
  std::string note;
};

struct BoundsReport {
  bool uniform = false;
  int k = 0;
  // std::nullopt when the hypergraph is too large to decide.
  std::optional<bool> minimal_transversal_free;
  std::vector<BoundCheck> checks;
  bool AllHold() const;
};

BoundsReport BoundsAudit(const Hypergraph& h,
                         const std::optional<GraphOrigin>& origin = std::nullopt);

// Human-readable rendering. Always states that the result covers the box
// only.
std::string RenderReport(const ConformanceReport& report);
// `CONDITION <name> HOLDS|FAILS <witness>` lines plus key=value summary.
std::string RenderMachine(const ConformanceReport& report);

}  // namespace hypernim

#endif  // HYPERNIM_VERIFY_H_
