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

#ifndef HYPERNIM_EDGE_PACKING_H_
#define HYPERNIM_EDGE_PACKING_H_

#include <cstdint>
#include <vector>

#include "hypernim/position.h"
#include "hypernim/vertex_set.h"

namespace hypernim {

struct PackingResult {
  int value = 0;
  // multiplicity[i] copies of edges[i]; sum(multiplicity) == value.
  std::vector<int> multiplicity;
};

// Maximum number of edges (with repetition) whose characteristic vectors sum
// to at most `capacity` componentwise:
//
//   max sum_H mu(H)  s.t.  sum_H mu(H) chi(H) <= capacity,  mu >= 0 integer.
//
// Since slow moves commute, this is the height of `capacity` in NIM on the
// given edges. Solved by depth-first branch and bound with an LP relaxation
// bound; exact. Throws ResourceLimitError after `max_nodes` search nodes.
PackingResult MaxEdgePacking(const std::vector<VertexSet>& edges,
                             const Position& capacity,
                             std::int64_t max_nodes = 50'000'000);

}  // namespace hypernim

#endif  // HYPERNIM_EDGE_PACKING_H_
