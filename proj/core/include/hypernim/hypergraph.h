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

#ifndef HYPERNIM_HYPERGRAPH_H_
#define HYPERNIM_HYPERGRAPH_H_

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypernim/vertex_set.h"

namespace hypernim {

// A nonempty family of nonempty hyperedges over the ground set
// {0, ..., num_vertices-1}. Edges are deduplicated and kept in LexLess order,
// so two hypergraphs are equal iff their edge lists are equal.
//
// The constructor does not require the edges to cover the ground set: an
// induced subhypergraph keeps the parent's vertex numbering. Text ingestion
// and the family generators do enforce coverage; see CoversGroundSet().
class Hypergraph {
 public:
  // Throws InvalidArgument on an empty edge list, an empty edge, a vertex
  // outside [0, num_vertices) or num_vertices outside [1, 64].
  Hypergraph(int num_vertices, std::vector<VertexSet> edges);

  // Convenience for literals: Hypergraph::Of(4, {{0, 1}, {1, 2}}).
  static Hypergraph Of(int num_vertices,
                       std::initializer_list<std::initializer_list<int>> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(int i) const { return edges_[i]; }
  VertexSet ground_set() const { return VertexSet::Range(num_vertices_); }

  // Union of all edges equals the ground set.
  bool CoversGroundSet() const;
  std::optional<int> IndexOf(VertexSet edge) const;
  bool Contains(VertexSet edge) const { return IndexOf(edge).has_value(); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int num_vertices_;
  std::vector<VertexSet> edges_;
};

// {H in h | H subset of s}; nullopt when no edge survives.
std::optional<Hypergraph> InducedSubhypergraph(const Hypergraph& h,
                                               VertexSet s);

// t meets every edge of h.
bool IsTransversal(const Hypergraph& h, VertexSet t);

// No edge of h is a transversal of h.
bool IsTransversalFree(const Hypergraph& h);

// Transversal-free, and every nonempty induced subhypergraph on a proper
// subset of the ground set has a transversal edge. Exhaustive over subsets;
// throws ResourceLimitError when num_vertices > kMaxMinimalTfVertices.
inline constexpr int kMaxMinimalTfVertices = 26;
bool IsMinimalTransversalFree(const Hypergraph& h);

// Why a hypergraph is not minimal transversal-free: either an edge that is a
// transversal, or a proper subset S whose nonempty induced subhypergraph has
// no transversal edge. The first offender in canonical order is reported.
struct MinimalTfViolation {
  enum class Kind { kTransversalEdge, kSubsetWithoutTransversalEdge };
  Kind kind;
  VertexSet set;
};
std::optional<MinimalTfViolation> FindMinimalTfViolation(const Hypergraph& h);

// Vertex sets of the connected components (isolated vertices included),
// ordered by smallest member.
std::vector<VertexSet> ConnectedComponents(const Hypergraph& h);

// The ground set cannot be split into two nonempty parts with every edge
// inside one of them.
bool IsConnected(const Hypergraph& h);

// k when every edge has exactly k vertices.
std::optional<int> Uniformity(const Hypergraph& h);

// Text format:
//   n <num_vertices>
//   e <v0> <v1> ...
// '#' starts a comment. Parsing rejects hypergraphs that do not cover their
// ground set. Formatting writes canonical edge order, one edge per line.
Hypergraph ParseHypergraph(std::string_view text);
std::string FormatHypergraph(const Hypergraph& h);
Hypergraph ReadHypergraphFile(const std::string& path);

}  // namespace hypernim

#endif  // HYPERNIM_HYPERGRAPH_H_
