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

#include "hypernim/vertex_set.h"

#include "hypernim/errors.h"

namespace hypernim {

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices) {
      throw InvalidArgument("vertex index " + std::to_string(v) +
                            " outside [0, 64)");
    }
    bits_ |= std::uint64_t{1} << v;
  }
}

VertexSet VertexSet::FromMembers(const std::vector<int>& members) {
  VertexSet s;
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices) {
      throw InvalidArgument("vertex index " + std::to_string(v) +
                            " outside [0, 64)");
    }
    s = s.with(v);
  }
  return s;
}

std::vector<int> VertexSet::Members() const {
  std::vector<int> out;
  out.reserve(size());
  ForEach([&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

bool LexLess(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    int u = std::countr_zero(x);
    int v = std::countr_zero(y);
    if (u != v) return u < v;
    x &= x - 1;
    y &= y - 1;
  }
  // One list is a prefix of the other.
  return x == 0 && y != 0;
}

}  // namespace hypernim
