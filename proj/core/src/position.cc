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

#include "hypernim/position.h"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "hypernim/errors.h"

namespace hypernim {

Position::Position(std::vector<int> piles) : piles_(std::move(piles)) {
  for (int p : piles_) {
    if (p < 0) throw InvalidArgument("negative pile size " + std::to_string(p));
  }
}

int Position::MinPile() const {
  if (piles_.empty()) return 0;
  return *std::min_element(piles_.begin(), piles_.end());
}

int Position::MaxPile() const {
  if (piles_.empty()) return 0;
  return *std::max_element(piles_.begin(), piles_.end());
}

int Position::MinOver(VertexSet s) const {
  int m = std::numeric_limits<int>::max();
  s.ForEach([&](int v) { m = std::min(m, piles_[v]); });
  return m;
}

long long Position::Sum() const {
  long long total = 0;
  for (int p : piles_) total += p;
  return total;
}

Position Position::ShiftedDown(int c) const {
  Position out = *this;
  for (int& p : out.piles_) p -= c;
  return out;
}

bool Position::Dominates(const Position& other) const {
  for (std::size_t i = 0; i < piles_.size(); ++i) {
    if (piles_[i] < other.piles_[i]) return false;
  }
  return true;
}

Position ParsePosition(std::string_view csv) {
  std::vector<int> piles;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = csv.find(',', start);
    std::string_view field = csv.substr(
        start, comma == std::string_view::npos ? csv.npos : comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (field.empty()) {
      throw ParseError(0, "empty field in position '" + std::string(csv) + "'");
    }
    long long value = 0;
    for (char c : field) {
      if (c < '0' || c > '9') {
        throw ParseError(0, "bad pile '" + std::string(field) +
                                "' in position '" + std::string(csv) + "'");
      }
      value = value * 10 + (c - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw ParseError(0, "pile too large in '" + std::string(csv) + "'");
      }
    }
    piles.push_back(static_cast<int>(value));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Position(std::move(piles));
}

std::string FormatPosition(const Position& x) {
  std::string out;
  for (int i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x[i]);
  }
  return out;
}

std::size_t PositionHash::operator()(const Position& x) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int p : x) {
    h ^= static_cast<std::uint64_t>(p);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 32));
}

}  // namespace hypernim
