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

#ifndef HYPERNIM_FAMILIES_H_
#define HYPERNIM_FAMILIES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypernim/graph.h"
#include "hypernim/hypergraph.h"

namespace hypernim {

// {{0}, ..., {n-1}}.
Hypergraph ClassicalNim(int n);
// All subsets of size 1..k, 1 <= k < n.
Hypergraph Moore(int n, int k);
// All k-subsets.
Hypergraph Uniform(int n, int k);
// Sets meeting each pair {i, i+k} (0-based) in exactly one vertex.
Hypergraph PairTransversal(int k);
// The seven lines of the Fano plane on 0..6.
Hypergraph FanoLines();
// 3-subsets of 0..6 that are not Fano lines.
Hypergraph FanoComplement();

// All k-subsets of the vertices of kk not contained in any edge of kk.
// Unless skip_checks is set, rejects parameters outside 0 < delta <= k - 3
// and kk failing any of K1-K3.
inline constexpr std::int64_t kMaxGeneratedEdges = 5'000'000;
Hypergraph KConstruction(const Hypergraph& kk, int k, int delta,
                         bool skip_checks = false);
// The three-edge (k + delta - 1)-uniform family on 2k + delta vertices:
// W, {1..delta} + {1'..(k-1)'} and {delta+1..2 delta} + {3'..(k+1)'}, with W
// on 0..k+delta-2 and j' on k+delta-2+j.
Hypergraph ExampleKHypergraph(int k, int delta);

// F_*(C_n, k) for n in {2k, 2k+1}.
Hypergraph CycleFamily(int n, int k, SubgraphFamily variant);
// F_*(K_{2,k}, k), variant ec or et.
Hypergraph CompleteBipartiteFamily(int k, SubgraphFamily variant);

// k+1 paths of k edges sharing one end vertex (vertex 0).
SimpleGraph TreeFamilyGraph(int k);
// F_ec(TreeFamilyGraph(k), k).
Hypergraph TreeFamily(int k);
// k+1 disjoint k-cliques, each joined to a root (vertex 0) by one edge.
SimpleGraph StarOfCliquesGraph(int k);
// F_et(StarOfCliquesGraph(k), k).
Hypergraph StarOfCliques(int k);
// F_ec(Petersen, 7).
Hypergraph PetersenFec7();

// Vertex order 000, 100, 010, 001, 110, 101, 011, 111.
Hypergraph CubeFacets();

// U = 0..2k-3, w_i = 2k-2+i. A_i runs over the (k-1)-subsets of U
// containing 0 in lexicographic order and B_i = U - A_i. Edges B_i + w_i and
// A_{i+1 mod r} + w_i.
Hypergraph Palvolgyi(int k);

// h plus s. Requires disjoint edges H, H' with H <= s <= V - H'.
Hypergraph Augment(const Hypergraph& h, VertexSet s);

// Where a hypergraph came from; used by the bounds audit and property suites.
struct GraphOrigin {
  SimpleGraph graph;
  int k = 0;
  SubgraphFamily family = SubgraphFamily::kEdgeConnected;
};

struct FamilySpec {
  std::string name;
  std::map<std::string, int> params;
};

struct FamilyInstance {
  std::string id;
  Hypergraph hypergraph;
  std::optional<GraphOrigin> graph_origin;
  // What the construction asserts about its output.
  bool matroid = false;
  bool self_dual = false;
  bool jm = false;
};

struct FamilyInfo {
  std::string name;
  std::vector<std::string> params;
  std::string summary;
};
const std::vector<FamilyInfo>& FamilyCatalog();

// "k=2,n=3".
std::map<std::string, int> ParseFamilyParams(std::string_view text);
std::string FormatFamilySpec(const FamilySpec& spec);
FamilyInstance GenerateFamily(const FamilySpec& spec);

// Built-in instances at desk scale.
std::vector<FamilySpec> BuiltinInstances();

}  // namespace hypernim

#endif  // HYPERNIM_FAMILIES_H_
