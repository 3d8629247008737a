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

#ifndef HYPERNIM_GRAPH_H_
#define HYPERNIM_GRAPH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypernim/hypergraph.h"

namespace hypernim {

// Undirected simple graph on at most 16 vertices. Edges are stored as sorted
// pairs (u < v) in sorted order; the index of an edge in edges() is its rank.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 16;
  using Edge = std::pair<int, int>;

  explicit SimpleGraph(int num_vertices, std::vector<Edge> edges = {});

  static SimpleGraph Path(int num_edges);
  static SimpleGraph Cycle(int n);
  static SimpleGraph Complete(int n);
  static SimpleGraph CompleteBipartite(int a, int b);
  static SimpleGraph Star(int leaves);
  static SimpleGraph Petersen();

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }
  // Bitmask of neighbours of v.
  std::uint32_t neighbours(int v) const { return adjacency_[v]; }
  bool HasEdge(int u, int v) const { return (adjacency_[u] >> v) & 1; }
  int Degree(int v) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
  std::array<std::uint32_t, kMaxVertices> adjacency_{};
};

bool IsConnected(const SimpleGraph& g);

// The graph induced on the vertices of `vertices` (bitmask), relabelled in
// increasing order.
SimpleGraph InducedSubgraph(const SimpleGraph& g, std::uint32_t vertices);

// Edge set of g as a 2-uniform hypergraph on the same vertices.
Hypergraph AsHypergraph(const SimpleGraph& g);

enum class SubgraphFamily { kEdgeConnected, kVertexConnected, kEdgeTree,
                            kVertexTree };
const char* ToString(SubgraphFamily f);
// "ec", "vc", "et", "vt".
SubgraphFamily ParseSubgraphFamily(std::string_view name);

// Connected k-edge subgraphs of g as sets of edge indices, in increasing
// order of their edge bitmask. Throws InvalidArgument unless
// 1 <= k < |E| and ResourceLimitError past `max_subgraphs`.
inline constexpr std::int64_t kMaxSubgraphs = 5'000'000;
std::vector<std::uint64_t> ConnectedEdgeSubsets(
    const SimpleGraph& g, int k, std::int64_t max_subgraphs = kMaxSubgraphs);

// The four subgraph hypergraphs. The "e" variants live on the edge set of g
// (vertex i = edge i), the "v" variants on the vertex set of g and use the
// supports of the subgraphs. std::nullopt marks an empty family.
std::optional<Hypergraph> SubgraphHypergraph(const SimpleGraph& g, int k,
                                             SubgraphFamily family);
std::optional<Hypergraph> FEdgeConnected(const SimpleGraph& g, int k);
std::optional<Hypergraph> FVertexConnected(const SimpleGraph& g, int k);
std::optional<Hypergraph> FEdgeTree(const SimpleGraph& g, int k);
std::optional<Hypergraph> FVertexTree(const SimpleGraph& g, int k);

// Vertices are the edges of g; throws InvalidArgument when g has more than
// 16 edges.
SimpleGraph LineGraph(const SimpleGraph& g);

// G1 (the claw) through G9 of the classical forbidden induced subgraphs of
// line graphs. `which` is 1-based.
SimpleGraph BeinekeGraph(int which);

struct BeinekeMatch {
  int which = 0;
  // Vertices of g inducing a copy of BeinekeGraph(which).
  std::vector<int> witness;
};
std::optional<BeinekeMatch> ContainsBeinekeForbidden(const SimpleGraph& g);

// Lexicographically minimal upper-triangle adjacency string over all vertex
// permutations, pairs ordered (0,1), (0,2), (1,2), (0,3), ... The first
// character is the most significant of the n(n-1)/2 low bits, so integer
// order is string order. Requires n <= 8.
inline constexpr int kMaxCanonicalVertices = 8;
std::uint32_t CanonicalCode(const SimpleGraph& g);
SimpleGraph CanonicalForm(const SimpleGraph& g);
bool AreIsomorphic(const SimpleGraph& a, const SimpleGraph& b);

// One canonical representative per isomorphism class, sorted by canonical
// code. n <= 7.
inline constexpr int kMaxEnumerationVertices = 7;
std::vector<SimpleGraph> EnumerateGraphsUpToIso(int n);
std::vector<SimpleGraph> EnumerateConnectedGraphsUpToIso(int n);

// Connected graphs on 4..6 vertices that are minimal transversal-free as
// 2-uniform hypergraphs, up to isomorphism.
std::vector<SimpleGraph> JmGraphEnumeration();

SimpleGraph ParseGraph(std::string_view text);
std::string FormatGraph(const SimpleGraph& g);

}  // namespace hypernim

#endif  // HYPERNIM_GRAPH_H_
