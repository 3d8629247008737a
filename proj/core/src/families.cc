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

#include "hypernim/families.h"

#include <algorithm>
#include <charconv>
#include <functional>

#include "hypernim/errors.h"
#include "hypernim/structure.h"

namespace hypernim {

namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

std::int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::int64_t{1} << 50)) return r;
  }
  return r;
}

// Calls fn on every k-subset of 0..n-1 in lexicographic order of members.
void ForEachSubset(int n, int k, const std::function<void(VertexSet)>& fn) {
  if (Binomial(n, k) > kMaxGeneratedEdges) {
    throw ResourceLimitError("C(" + std::to_string(n) + "," +
                             std::to_string(k) + ") subsets exceed cap");
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(VertexSet::FromMembers(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Hypergraph FromGraph(const SimpleGraph& g, int k, SubgraphFamily f) {
  auto h = SubgraphHypergraph(g, k, f);
  if (!h) {
    throw InvalidArgument(std::string("F_") + ToString(f) + " with k=" +
                          std::to_string(k) + " is empty");
  }
  return *std::move(h);
}

}  // namespace

Hypergraph ClassicalNim(int n) {
  Require(n >= 1 && n <= 64, "classical NIM needs 1 <= n <= 64");
  std::vector<VertexSet> edges;
  for (int i = 0; i < n; ++i) edges.push_back(VertexSet::Singleton(i));
  return Hypergraph(n, std::move(edges));
}

Hypergraph Moore(int n, int k) {
  Require(k >= 1 && k < n && n <= 64, "Moore family needs 1 <= k < n <= 64");
  std::vector<VertexSet> edges;
  for (int size = 1; size <= k; ++size) {
    ForEachSubset(n, size, [&](VertexSet s) { edges.push_back(s); });
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph Uniform(int n, int k) {
  Require(k >= 1 && k <= n && n <= 64, "uniform family needs 1 <= k <= n <= 64");
  std::vector<VertexSet> edges;
  ForEachSubset(n, k, [&](VertexSet s) { edges.push_back(s); });
  return Hypergraph(n, std::move(edges));
}

Hypergraph PairTransversal(int k) {
  Require(k >= 1 && 2 * k <= 64, "pair transversal family needs 1 <= k <= 32");
  if ((std::int64_t{1} << std::min(k, 40)) > kMaxGeneratedEdges) {
    throw ResourceLimitError("2^" + std::to_string(k) + " edges exceed cap");
  }
  std::vector<VertexSet> edges;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
    VertexSet e;
    for (int i = 0; i < k; ++i) e = e.with((choice >> i) & 1 ? i + k : i);
    edges.push_back(e);
  }
  return Hypergraph(2 * k, std::move(edges));
}

Hypergraph FanoLines() {
  return Hypergraph::Of(7, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {0, 5, 6},
                            {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph FanoComplement() {
  // The Fano plane has delta = k - 2 in the K construction, outside the range
  // of the general theorem, so the parameter checks are skipped.
  return KConstruction(FanoLines(), 3, 1, /*skip_checks=*/true);
}

Hypergraph KConstruction(const Hypergraph& kk, int k, int delta,
                         bool skip_checks) {
  const int n = kk.num_vertices();
  Require(k >= 1 && k <= n, "K construction needs 1 <= k <= n");
  if (!skip_checks) {
    const KConditions c = CheckKConstruction(kk, k, delta);
    if (!c.all()) {
      std::string failed;
      if (!c.k1) failed += " K1";
      if (!c.k2) failed += " K2";
      if (!c.k3) failed += " K3";
      throw InvalidArgument("K construction conditions fail:" + failed);
    }
  }
  std::vector<VertexSet> edges;
  ForEachSubset(n, k, [&](VertexSet s) {
    for (VertexSet big : kk.edges()) {
      if (s.IsSubsetOf(big)) return;
    }
    edges.push_back(s);
  });
  Require(!edges.empty(), "K construction removed every k-subset");
  return Hypergraph(n, std::move(edges));
}

Hypergraph ExampleKHypergraph(int k, int delta) {
  Require(delta > 0 && delta <= k - 3,
          "example K hypergraph needs 0 < delta <= k - 3");
  const int n = 2 * k + delta;
  Require(n <= 64, "example K hypergraph exceeds 64 vertices");
  auto prime = [&](int j) { return k + delta - 2 + j; };
  VertexSet w = VertexSet::Range(k + delta - 1);
  VertexSet second, third;
  for (int i = 0; i < delta; ++i) second = second.with(i);
  for (int j = 1; j <= k - 1; ++j) second = second.with(prime(j));
  for (int i = delta; i < 2 * delta; ++i) third = third.with(i);
  for (int j = 3; j <= k + 1; ++j) third = third.with(prime(j));
  return Hypergraph(n, {w, second, third});
}

Hypergraph CycleFamily(int n, int k, SubgraphFamily variant) {
  Require(k >= 2 && (n == 2 * k || n == 2 * k + 1),
          "cycle family needs k >= 2 and n in {2k, 2k+1}");
  Require(n <= SimpleGraph::kMaxVertices, "cycle family exceeds 16 vertices");
  return FromGraph(SimpleGraph::Cycle(n), k, variant);
}

Hypergraph CompleteBipartiteFamily(int k, SubgraphFamily variant) {
  Require(k >= 2 && k + 2 <= SimpleGraph::kMaxVertices,
          "complete bipartite family needs 2 <= k <= 14");
  Require(variant == SubgraphFamily::kEdgeConnected ||
              variant == SubgraphFamily::kEdgeTree,
          "complete bipartite family supports ec and et only");
  return FromGraph(SimpleGraph::CompleteBipartite(2, k), k, variant);
}

SimpleGraph TreeFamilyGraph(int k) {
  Require(k >= 2 && k * (k + 1) + 1 <= SimpleGraph::kMaxVertices,
          "tree family needs 2 <= k <= 3 (16-vertex graph cap)");
  std::vector<SimpleGraph::Edge> edges;
  for (int p = 0; p <= k; ++p) {
    int prev = 0;
    for (int i = 1; i <= k; ++i) {
      const int v = p * k + i;
      edges.emplace_back(prev, v);
      prev = v;
    }
  }
  return SimpleGraph(k * (k + 1) + 1, std::move(edges));
}

Hypergraph TreeFamily(int k) {
  return FromGraph(TreeFamilyGraph(k), k, SubgraphFamily::kEdgeConnected);
}

SimpleGraph StarOfCliquesGraph(int k) {
  Require(k >= 2 && k * (k + 1) + 1 <= SimpleGraph::kMaxVertices,
          "star of cliques needs 2 <= k <= 3 (16-vertex graph cap)");
  std::vector<SimpleGraph::Edge> edges;
  for (int c = 0; c <= k; ++c) {
    const int base = 1 + c * k;
    edges.emplace_back(0, base);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < j; ++i) edges.emplace_back(base + i, base + j);
    }
  }
  return SimpleGraph(k * (k + 1) + 1, std::move(edges));
}

Hypergraph StarOfCliques(int k) {
  return FromGraph(StarOfCliquesGraph(k), k, SubgraphFamily::kEdgeTree);
}

Hypergraph PetersenFec7() {
  return FromGraph(SimpleGraph::Petersen(), 7, SubgraphFamily::kEdgeConnected);
}

Hypergraph CubeFacets() {
  static const int kCoords[8] = {0b000, 0b001, 0b010, 0b100,
                                 0b011, 0b101, 0b110, 0b111};
  std::vector<VertexSet> edges;
  for (int axis = 0; axis < 3; ++axis) {
    for (int alpha = 0; alpha < 2; ++alpha) {
      VertexSet e;
      for (int v = 0; v < 8; ++v) {
        if (((kCoords[v] >> axis) & 1) == alpha) e = e.with(v);
      }
      edges.push_back(e);
    }
  }
  return Hypergraph(8, std::move(edges));
}

Hypergraph Palvolgyi(int k) {
  Require(k >= 2, "Palvolgyi construction needs k >= 2");
  const int u = 2 * k - 2;
  const std::int64_t r = Binomial(u, k - 1) / 2;
  Require(u + r <= 64, "Palvolgyi construction exceeds 64 vertices");
  std::vector<VertexSet> a;
  ForEachSubset(u, k - 1, [&](VertexSet s) {
    if (s.contains(0)) a.push_back(s);
  });
  const VertexSet ground_u = VertexSet::Range(u);
  std::vector<VertexSet> edges;
  for (int i = 0; i < r; ++i) {
    const VertexSet w = VertexSet::Singleton(u + i);
    edges.push_back((ground_u - a[i]) | w);
    edges.push_back(a[(i + 1) % r] | w);
  }
  Hypergraph h(u + static_cast<int>(r), std::move(edges));
  if (k <= 4 && r > 1 && !IsMinimalTransversalFree(h)) {
    throw Error("Palvolgyi construction is not minimal transversal-free");
  }
  return h;
}

Hypergraph Augment(const Hypergraph& h, VertexSet s) {
  Require(!s.empty() && s.IsSubsetOf(h.ground_set()),
          "augmenting set must be a nonempty subset of the vertices");
  bool has_inner = false;
  for (VertexSet inner : h.edges()) {
    if (!inner.IsSubsetOf(s)) continue;
    has_inner = true;
    for (VertexSet outer : h.edges()) {
      if (!outer.Intersects(inner) && !outer.Intersects(s)) {
        std::vector<VertexSet> edges = h.edges();
        edges.push_back(s);
        return Hypergraph(h.num_vertices(), std::move(edges));
      }
    }
  }
  throw InvalidArgument(
      has_inner ? "augmenting set " + s.ToString() +
                      " meets every edge disjoint from the edges it contains"
                : "augmenting set " + s.ToString() + " contains no edge");
}

const std::vector<FamilyInfo>& FamilyCatalog() {
  static const std::vector<FamilyInfo> kCatalog = {
      {"classical", {"n"}, "n singleton edges (classical NIM)"},
      {"moore", {"n", "k"}, "all subsets of size 1..k"},
      {"uniform", {"n", "k"}, "all k-subsets"},
      {"pair-transversal", {"k"}, "sets choosing one of each pair {i, i+k}"},
      {"fano-complement", {}, "3-subsets of 7 points that are not Fano lines"},
      {"k-example", {"k", "delta"}, "the three-edge K hypergraph"},
      {"k-construction", {"k", "delta"},
       "k-subsets not inside an edge of k-example(k, delta)"},
      {"cycle-ec", {"n", "k"}, "F_ec(C_n, k)"},
      {"cycle-vc", {"n", "k"}, "F_vc(C_n, k)"},
      {"cycle-et", {"n", "k"}, "F_et(C_n, k)"},
      {"cycle-vt", {"n", "k"}, "F_vt(C_n, k)"},
      {"bipartite-ec", {"k"}, "F_ec(K_{2,k}, k)"},
      {"bipartite-et", {"k"}, "F_et(K_{2,k}, k)"},
      {"tree", {"k"}, "F_ec of k+1 joined k-edge paths"},
      {"star-of-cliques", {"k"}, "F_et of k+1 k-cliques tied to a root"},
      {"petersen-fec7", {}, "F_ec(Petersen, 7)"},
      {"cube", {}, "facets of the 3-cube"},
      {"palvolgyi", {"k"}, "k-uniform minimal transversal-free, large n"},
  };
  return kCatalog;
}

std::map<std::string, int> ParseFamilyParams(std::string_view text) {
  std::map<std::string, int> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view()
                                           : text.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw InvalidArgument("parameter '" + std::string(item) +
                            "' is not key=value");
    }
    const std::string_view value = item.substr(eq + 1);
    int v = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw InvalidArgument("parameter '" + std::string(item) +
                            "' needs an integer value");
    }
    out[std::string(item.substr(0, eq))] = v;
  }
  return out;
}

std::string FormatFamilySpec(const FamilySpec& spec) {
  std::string out = spec.name;
  if (spec.params.empty()) return out;
  out += '(';
  bool first = true;
  for (const auto& [key, value] : spec.params) {
    if (!first) out += ',';
    first = false;
    out += key + "=" + std::to_string(value);
  }
  return out + ')';
}

FamilyInstance GenerateFamily(const FamilySpec& raw) {
  FamilySpec spec = raw;
  std::replace(spec.name.begin(), spec.name.end(), '_', '-');
  const auto& catalog = FamilyCatalog();
  const auto info =
      std::find_if(catalog.begin(), catalog.end(),
                   [&](const FamilyInfo& f) { return f.name == spec.name; });
  if (info == catalog.end()) {
    throw InvalidArgument("unknown family '" + raw.name + "'");
  }
  for (const auto& [key, value] : spec.params) {
    if (std::find(info->params.begin(), info->params.end(), key) ==
        info->params.end()) {
      throw InvalidArgument("family " + spec.name + " takes no parameter '" +
                            key + "'");
    }
  }
  for (const std::string& key : info->params) {
    if (!spec.params.count(key)) {
      throw InvalidArgument("family " + spec.name + " needs parameter '" +
                            key + "'");
    }
  }
  auto p = [&](const char* key) { return spec.params.at(key); };
  const std::string& name = spec.name;
  const std::string id = FormatFamilySpec(spec);

  auto plain = [&](Hypergraph h) {
    return FamilyInstance{id, std::move(h), std::nullopt, false, false, false};
  };
  auto graph_based = [&](const SimpleGraph& g, int k, SubgraphFamily f,
                         bool matroid, bool self_dual) {
    return FamilyInstance{id, FromGraph(g, k, f), GraphOrigin{g, k, f},
                          matroid, self_dual, true};
  };

  if (name == "classical") return plain(ClassicalNim(p("n")));
  if (name == "moore") {
    FamilyInstance out = plain(Moore(p("n"), p("k")));
    // k = n - 1 is the Jenkyns-Mayberry family; n = 2 is classical NIM.
    out.jm = p("k") == p("n") - 1 && p("n") >= 3;
    return out;
  }
  if (name == "uniform") {
    FamilyInstance out = plain(Uniform(p("n"), p("k")));
    out.matroid = true;
    out.self_dual = out.jm = p("n") == 2 * p("k");
    return out;
  }
  if (name == "pair-transversal") {
    return FamilyInstance{id, PairTransversal(p("k")), std::nullopt, true,
                          true, true};
  }
  if (name == "fano-complement") {
    return FamilyInstance{id, FanoComplement(), std::nullopt, true, false,
                          true};
  }
  if (name == "k-example") {
    return plain(ExampleKHypergraph(p("k"), p("delta")));
  }
  if (name == "k-construction") {
    const Hypergraph kk = ExampleKHypergraph(p("k"), p("delta"));
    return FamilyInstance{id, KConstruction(kk, p("k"), p("delta")),
                          std::nullopt, true, false, true};
  }
  if (name.rfind("cycle-", 0) == 0) {
    const int n = p("n"), k = p("k");
    const SubgraphFamily f = ParseSubgraphFamily(name.substr(6));
    CycleFamily(n, k, f);  // validates
    FamilyInstance out =
        graph_based(SimpleGraph::Cycle(n), k, f, false, false);
    // The vertex variants have (k+1)-sets on at most 2k+1 vertices, which
    // pairwise meet, so they are not transversal-free.
    out.jm = f == SubgraphFamily::kEdgeConnected ||
             f == SubgraphFamily::kEdgeTree;
    return out;
  }
  if (name.rfind("bipartite-", 0) == 0) {
    const int k = p("k");
    const SubgraphFamily f = ParseSubgraphFamily(name.substr(10));
    CompleteBipartiteFamily(k, f);  // validates
    // Self-dual for every k; the exchange axiom fails from k = 3 on.
    return graph_based(SimpleGraph::CompleteBipartite(2, k), k, f, k == 2,
                       true);
  }
  if (name == "tree") {
    return graph_based(TreeFamilyGraph(p("k")), p("k"),
                       SubgraphFamily::kEdgeConnected, false, false);
  }
  if (name == "star-of-cliques") {
    FamilyInstance out = graph_based(StarOfCliquesGraph(p("k")), p("k"),
                                     SubgraphFamily::kEdgeTree, false, false);
    // For k = 3 the construction is not minimal transversal-free (the
    // spider left after deleting the clique edges away from the root has no
    // transversal edge), so nothing is claimed beyond k = 2.
    out.jm = p("k") == 2;
    return out;
  }
  if (name == "petersen-fec7") {
    return graph_based(SimpleGraph::Petersen(), 7,
                       SubgraphFamily::kEdgeConnected, false, false);
  }
  if (name == "cube") return plain(CubeFacets());
  if (name == "palvolgyi") return plain(Palvolgyi(p("k")));
  throw InvalidArgument("unknown family '" + raw.name + "'");
}

std::vector<FamilySpec> BuiltinInstances() {
  return {
      {"classical", {{"n", 1}}},
      {"classical", {{"n", 2}}},
      {"classical", {{"n", 3}}},
      {"moore", {{"n", 2}, {"k", 1}}},
      {"moore", {{"n", 3}, {"k", 2}}},
      {"moore", {{"n", 4}, {"k", 3}}},
      {"moore", {{"n", 4}, {"k", 2}}},
      {"uniform", {{"n", 4}, {"k", 2}}},
      {"uniform", {{"n", 5}, {"k", 3}}},
      {"uniform", {{"n", 6}, {"k", 3}}},
      {"pair-transversal", {{"k", 2}}},
      {"pair-transversal", {{"k", 3}}},
      {"pair-transversal", {{"k", 4}}},
      {"fano-complement", {}},
      {"k-example", {{"k", 4}, {"delta", 1}}},
      {"k-construction", {{"k", 4}, {"delta", 1}}},
      {"cycle-ec", {{"n", 4}, {"k", 2}}},
      {"cycle-vc", {{"n", 4}, {"k", 2}}},
      {"cycle-et", {{"n", 4}, {"k", 2}}},
      {"cycle-vt", {{"n", 4}, {"k", 2}}},
      {"cycle-ec", {{"n", 5}, {"k", 2}}},
      {"cycle-vc", {{"n", 5}, {"k", 2}}},
      {"cycle-ec", {{"n", 6}, {"k", 3}}},
      {"cycle-vt", {{"n", 7}, {"k", 3}}},
      {"bipartite-ec", {{"k", 2}}},
      {"bipartite-et", {{"k", 2}}},
      {"bipartite-ec", {{"k", 3}}},
      {"bipartite-et", {{"k", 3}}},
      {"bipartite-ec", {{"k", 4}}},
      {"bipartite-et", {{"k", 4}}},
      {"tree", {{"k", 2}}},
      {"tree", {{"k", 3}}},
      {"star-of-cliques", {{"k", 2}}},
      {"star-of-cliques", {{"k", 3}}},
      {"petersen-fec7", {}},
      {"cube", {}},
      {"palvolgyi", {{"k", 3}}},
      {"palvolgyi", {{"k", 4}}},
  };
}

}  // namespace hypernim
