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

#ifndef HYPERNIM_ENGINE_H_
#define HYPERNIM_ENGINE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "hypernim/hypergraph.h"
#include "hypernim/position.h"

namespace hypernim {

// Smallest nonnegative integer not in `values` (duplicates allowed).
int Mex(std::span<const int> values);

// Indices of edges whose piles are all positive at x.
std::vector<int> PlayableEdges(const Hypergraph& h, const Position& x);

// x - chi(edge). Throws InvalidArgument if some pile of `edge` is empty.
Position ApplySlowMove(const Position& x, VertexSet edge);

// One legal move: every pile of edge(edge_index) strictly decreases, all
// other piles are unchanged.
struct Move {
  int edge_index = 0;
  Position target;
};

// Number of successors of x: sum over playable edges of prod_{i in H} x_i.
// Saturates at INT64_MAX.
std::int64_t CountMoves(const Hypergraph& h, const Position& x);

// Calls fn(edge_index, target) once per legal successor of x. Edges are
// visited in canonical order; within an edge the piles run odometer-style
// from x_i-1 down to 0, the highest-numbered vertex varying fastest. If fn
// returns bool, returning false stops the enumeration.
template <typename Fn>
void ForEachMove(const Hypergraph& h, const Position& x, Fn&& fn) {
  Position target = x;
  std::vector<int> verts;
  for (int e = 0; e < h.num_edges(); ++e) {
    const VertexSet edge = h.edge(e);
    if (x.MinOver(edge) == 0) continue;
    verts = edge.Members();
    for (int v : verts) target[v] = x[v] - 1;
    while (true) {
      if constexpr (std::is_same_v<std::invoke_result_t<Fn&, int,
                                                        const Position&>,
                                   bool>) {
        if (!fn(e, static_cast<const Position&>(target))) return;
      } else {
        fn(e, static_cast<const Position&>(target));
      }
      int k = static_cast<int>(verts.size()) - 1;
      while (k >= 0 && target[verts[k]] == 0) {
        target[verts[k]] = x[verts[k]] - 1;
        --k;
      }
      if (k < 0) break;
      --target[verts[k]];
    }
    for (int v : verts) target[v] = x[v];
  }
}

std::vector<Move> EnumerateMoves(const Hypergraph& h, const Position& x);

// mu(H) copies of each edge H (indexed like h.edges()) forming a longest
// sequence of slow moves from x.
struct HeightCertificate {
  std::vector<int> multiplicity;
  int total() const;
};

enum class HeightMethod {
  // Memoized slow-move recursion for small boxes, edge packing otherwise.
  kAuto,
  // h(x) = 1 + max_H h(x - chi(H)), memoized.
  kRecursion,
  // Exact integer edge packing (branch and bound).
  kPacking,
};

struct EngineLimits {
  // Largest pile accepted by the Sprague-Grundy recursion.
  int max_pile = 64;
  // Largest number of entries in each memo table.
  std::int64_t max_memo_entries = 100'000'000;
  HeightMethod height_method = HeightMethod::kAuto;
  // kAuto recurses when prod(x_i + 1) is at most this.
  std::int64_t recursion_volume = std::int64_t{1} << 20;
};

// Height and Sprague-Grundy evaluation for NIM on one hypergraph.
//
// Memo tables live inside the engine and grow across calls. An engine is not
// safe for concurrent use; give each worker its own engine (values are
// identical either way).
class Engine {
 public:
  explicit Engine(Hypergraph h, EngineLimits limits = {});

  const Hypergraph& hypergraph() const { return h_; }
  const EngineLimits& limits() const { return limits_; }

  // Maximum number of consecutive moves from x.
  int Height(const Position& x);
  HeightCertificate Certificate(const Position& x);

  // Exact Sprague-Grundy value by memoized mex over all moves. Throws
  // ResourceLimitError when a pile exceeds max_pile or the memo overflows.
  int Grundy(const Position& x);

  // First successor with Grundy value 0 in ForEachMove order; nullopt when
  // x itself has value 0.
  std::optional<Move> OptimalMove(const Position& x);

  std::size_t grundy_memo_size() const { return grundy_memo_.size(); }
  std::size_t height_memo_size() const {
    return height_memo_.size() + packing_memo_.size();
  }

 private:
  bool UseRecursion(const Position& x) const;
  void CheckShape(const Position& x) const;
  int HeightRec(std::string& state);
  int GrundyRec(const std::string& state);
  void CheckMemo(std::size_t size, const char* which) const;

  Hypergraph h_;
  EngineLimits limits_;
  // Edge members, cached for the byte-state recursions.
  std::vector<std::vector<int>> members_;
  std::unordered_map<std::string, int> height_memo_;
  std::unordered_map<Position, int, PositionHash> packing_memo_;
  std::unordered_map<std::string, int> grundy_memo_;
};

}  // namespace hypernim

#endif  // HYPERNIM_ENGINE_H_
