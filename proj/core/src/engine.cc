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

#include "hypernim/engine.h"

#include <algorithm>
#include <limits>

#include "hypernim/edge_packing.h"
#include "hypernim/errors.h"

namespace hypernim {

int Mex(std::span<const int> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v >= 0 && static_cast<std::size_t>(v) < seen.size()) seen[v] = true;
  }
  int m = 0;
  while (seen[m]) ++m;
  return m;
}

std::vector<int> PlayableEdges(const Hypergraph& h, const Position& x) {
  std::vector<int> out;
  for (int e = 0; e < h.num_edges(); ++e) {
    if (x.MinOver(h.edge(e)) > 0) out.push_back(e);
  }
  return out;
}

Position ApplySlowMove(const Position& x, VertexSet edge) {
  if (edge.span() > x.size()) {
    throw InvalidArgument("edge " + edge.ToString() +
                          " exceeds position length " +
                          std::to_string(x.size()));
  }
  if (edge.empty() || x.MinOver(edge) == 0) {
    throw InvalidArgument("edge " + edge.ToString() +
                          " is not playable at " + FormatPosition(x));
  }
  Position out = x;
  edge.ForEach([&](int v) { --out[v]; });
  return out;
}

std::int64_t CountMoves(const Hypergraph& h, const Position& x) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 0;
  for (VertexSet e : h.edges()) {
    std::int64_t prod = 1;
    e.ForEach([&](int v) {
      if (prod != 0 && x[v] > kMax / prod) {
        prod = kMax;
      } else {
        prod *= x[v];
      }
    });
    total = (prod > kMax - total) ? kMax : total + prod;
  }
  return total;
}

std::vector<Move> EnumerateMoves(const Hypergraph& h, const Position& x) {
  std::vector<Move> out;
  ForEachMove(h, x, [&](int e, const Position& y) {
    out.push_back(Move{e, y});
  });
  return out;
}

int HeightCertificate::total() const {
  int t = 0;
  for (int m : multiplicity) t += m;
  return t;
}

namespace {

std::string EncodeBytes(const Position& x) {
  std::string s(x.size(), '\0');
  for (int i = 0; i < x.size(); ++i) s[i] = static_cast<char>(x[i]);
  return s;
}

inline int Byte(const std::string& s, int i) {
  return static_cast<unsigned char>(s[i]);
}

}  // namespace

Engine::Engine(Hypergraph h, EngineLimits limits)
    : h_(std::move(h)), limits_(limits) {
  if (limits_.max_pile < 0 || limits_.max_pile > 255) {
    throw InvalidArgument("max_pile must be in [0, 255]");
  }
  if (limits_.max_memo_entries <= 0) {
    throw InvalidArgument("max_memo_entries must be positive");
  }
  for (VertexSet e : h_.edges()) members_.push_back(e.Members());
}

void Engine::CheckShape(const Position& x) const {
  if (x.size() != h_.num_vertices()) {
    throw InvalidArgument("position has " + std::to_string(x.size()) +
                          " piles but the hypergraph has " +
                          std::to_string(h_.num_vertices()) + " vertices");
  }
}

void Engine::CheckMemo(std::size_t size, const char* which) const {
  if (static_cast<std::int64_t>(size) >= limits_.max_memo_entries) {
    throw ResourceLimitError(std::string(which) + " memo exceeded cap of " +
                             std::to_string(limits_.max_memo_entries) +
                             " entries");
  }
}

bool Engine::UseRecursion(const Position& x) const {
  switch (limits_.height_method) {
    case HeightMethod::kRecursion:
      if (x.MaxPile() > 255) {
        throw ResourceLimitError("height recursion supports piles up to 255");
      }
      return true;
    case HeightMethod::kPacking:
      return false;
    case HeightMethod::kAuto:
      break;
  }
  if (x.MaxPile() > 255) return false;
  std::int64_t volume = 1;
  for (int p : x) {
    volume *= p + 1;
    if (volume > limits_.recursion_volume) return false;
  }
  return true;
}

int Engine::Height(const Position& x) {
  CheckShape(x);
  if (UseRecursion(x)) {
    std::string state = EncodeBytes(x);
    return HeightRec(state);
  }
  if (auto it = packing_memo_.find(x); it != packing_memo_.end()) {
    return it->second;
  }
  CheckMemo(packing_memo_.size(), "height");
  const int value = MaxEdgePacking(h_.edges(), x).value;
  packing_memo_.emplace(x, value);
  return value;
}

int Engine::HeightRec(std::string& state) {
  if (auto it = height_memo_.find(state); it != height_memo_.end()) {
    return it->second;
  }
  int best = 0;
  for (const auto& verts : members_) {
    bool playable = true;
    for (int v : verts) {
      if (state[v] == 0) {
        playable = false;
        break;
      }
    }
    if (!playable) continue;
    for (int v : verts) --state[v];
    best = std::max(best, 1 + HeightRec(state));
    for (int v : verts) ++state[v];
  }
  CheckMemo(height_memo_.size(), "height");
  height_memo_.emplace(state, best);
  return best;
}

HeightCertificate Engine::Certificate(const Position& x) {
  CheckShape(x);
  HeightCertificate cert;
  if (!UseRecursion(x)) {
    cert.multiplicity = MaxEdgePacking(h_.edges(), x).multiplicity;
    return cert;
  }
  cert.multiplicity.assign(h_.num_edges(), 0);
  std::string state = EncodeBytes(x);
  int remaining = HeightRec(state);
  while (remaining > 0) {
    bool advanced = false;
    for (int e = 0; e < h_.num_edges() && !advanced; ++e) {
      const auto& verts = members_[e];
      bool playable = true;
      for (int v : verts) playable = playable && state[v] != 0;
      if (!playable) continue;
      for (int v : verts) --state[v];
      if (HeightRec(state) == remaining - 1) {
        ++cert.multiplicity[e];
        --remaining;
        advanced = true;
      } else {
        for (int v : verts) ++state[v];
      }
    }
  }
  return cert;
}

int Engine::Grundy(const Position& x) {
  CheckShape(x);
  for (int p : x) {
    if (p > limits_.max_pile) {
      throw ResourceLimitError("pile " + std::to_string(p) +
                               " exceeds max-pile cap " +
                               std::to_string(limits_.max_pile));
    }
  }
  return GrundyRec(EncodeBytes(x));
}

int Engine::GrundyRec(const std::string& state) {
  if (auto it = grundy_memo_.find(state); it != grundy_memo_.end()) {
    return it->second;
  }
  std::vector<int> values;
  std::string child = state;
  for (const auto& verts : members_) {
    bool playable = true;
    for (int v : verts) {
      if (state[v] == 0) {
        playable = false;
        break;
      }
    }
    if (!playable) continue;
    for (int v : verts) child[v] = static_cast<char>(Byte(state, v) - 1);
    const int k_last = static_cast<int>(verts.size()) - 1;
    while (true) {
      values.push_back(GrundyRec(child));
      int k = k_last;
      while (k >= 0 && child[verts[k]] == 0) {
        child[verts[k]] = static_cast<char>(Byte(state, verts[k]) - 1);
        --k;
      }
      if (k < 0) break;
      child[verts[k]] = static_cast<char>(Byte(child, verts[k]) - 1);
    }
    for (int v : verts) child[v] = state[v];
  }
  const int g = Mex(values);
  CheckMemo(grundy_memo_.size(), "Sprague-Grundy");
  grundy_memo_.emplace(state, g);
  return g;
}

std::optional<Move> Engine::OptimalMove(const Position& x) {
  if (Grundy(x) == 0) return std::nullopt;
  std::optional<Move> found;
  ForEachMove(h_, x, [&](int e, const Position& y) {
    if (Grundy(y) == 0) {
      found = Move{e, y};
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace hypernim
