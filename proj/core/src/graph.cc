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

#include "hypernim/graph.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hypernim/errors.h"

namespace hypernim {

namespace {

int PairCount(int n) { return n * (n - 1) / 2; }

// Position of pair (u, v), u < v, in column-major upper-triangle order.
int PairIndex(int u, int v) { return v * (v - 1) / 2 + u; }

}  // namespace

SimpleGraph::SimpleGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 1 || num_vertices_ > kMaxVertices) {
    throw InvalidArgument("graph vertex count " +
                          std::to_string(num_vertices_) + " outside [1, 16]");
  }
  for (Edge& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= num_vertices_) {
      throw InvalidArgument("graph edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ") out of range");
    }
    if (e.first == e.second) {
      throw InvalidArgument("graph loop at vertex " + std::to_string(e.first));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidArgument("graph has a repeated edge");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.first] |= 1u << e.second;
    adjacency_[e.second] |= 1u << e.first;
  }
}

SimpleGraph SimpleGraph::Path(int num_edges) {
  std::vector<Edge> edges;
  for (int i = 0; i < num_edges; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(num_edges + 1, std::move(edges));
}

SimpleGraph SimpleGraph::Cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::Complete(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::CompleteBipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return SimpleGraph(a + b, std::move(edges));
}

SimpleGraph SimpleGraph::Star(int leaves) {
  return CompleteBipartite(1, leaves);
}

SimpleGraph SimpleGraph::Petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return SimpleGraph(10, std::move(edges));
}

int SimpleGraph::Degree(int v) const { return std::popcount(adjacency_[v]); }

bool IsConnected(const SimpleGraph& g) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbours(std::countr_zero(f));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == g.num_vertices();
}

SimpleGraph InducedSubgraph(const SimpleGraph& g, std::uint32_t vertices) {
  std::vector<int> label(g.num_vertices(), -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if ((vertices >> v) & 1) label[v] = next++;
  }
  if (next == 0) throw InvalidArgument("induced subgraph on no vertices");
  std::vector<SimpleGraph::Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (label[u] >= 0 && label[v] >= 0) edges.emplace_back(label[u], label[v]);
  }
  return SimpleGraph(next, std::move(edges));
}

Hypergraph AsHypergraph(const SimpleGraph& g) {
  std::vector<VertexSet> edges;
  for (const auto& [u, v] : g.edges()) edges.push_back(VertexSet{u, v});
  return Hypergraph(g.num_vertices(), std::move(edges));
}

const char* ToString(SubgraphFamily f) {
  switch (f) {
    case SubgraphFamily::kEdgeConnected:
      return "ec";
    case SubgraphFamily::kVertexConnected:
      return "vc";
    case SubgraphFamily::kEdgeTree:
      return "et";
    case SubgraphFamily::kVertexTree:
      return "vt";
  }
  return "?";
}

SubgraphFamily ParseSubgraphFamily(std::string_view name) {
  if (name == "ec") return SubgraphFamily::kEdgeConnected;
  if (name == "vc") return SubgraphFamily::kVertexConnected;
  if (name == "et") return SubgraphFamily::kEdgeTree;
  if (name == "vt") return SubgraphFamily::kVertexTree;
  throw InvalidArgument("unknown subgraph family '" + std::string(name) +
                        "' (expected ec, vc, et or vt)");
}

std::vector<std::uint64_t> ConnectedEdgeSubsets(const SimpleGraph& g, int k,
                                                std::int64_t max_subgraphs) {
  const int m = g.num_edges();
  if (k < 1 || k >= m) {
    throw InvalidArgument("subgraph size k=" + std::to_string(k) +
                          " outside [1, " + std::to_string(m) + ")");
  }
  if (m > 64) throw InvalidArgument("graph has more than 64 edges");
  std::vector<std::uint32_t> ends(m);
  for (int i = 0; i < m; ++i) {
    ends[i] = (1u << g.edge(i).first) | (1u << g.edge(i).second);
  }
  std::vector<std::uint64_t> level;
  for (int i = 0; i < m; ++i) level.push_back(std::uint64_t{1} << i);
  for (int size = 2; size <= k; ++size) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t mask : level) {
      std::uint32_t support = 0;
      for (std::uint64_t b = mask; b != 0; b &= b - 1) {
        support |= ends[std::countr_zero(b)];
      }
      for (int i = 0; i < m; ++i) {
        if (((mask >> i) & 1) || !(ends[i] & support)) continue;
        next.insert(mask | (std::uint64_t{1} << i));
        if (static_cast<std::int64_t>(next.size()) > max_subgraphs) {
          throw ResourceLimitError("more than " +
                                   std::to_string(max_subgraphs) +
                                   " connected subgraphs");
        }
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::optional<Hypergraph> SubgraphHypergraph(const SimpleGraph& g, int k,
                                             SubgraphFamily family) {
  const bool trees = family == SubgraphFamily::kEdgeTree ||
                     family == SubgraphFamily::kVertexTree;
  const bool on_edges = family == SubgraphFamily::kEdgeConnected ||
                        family == SubgraphFamily::kEdgeTree;
  std::vector<VertexSet> out;
  for (std::uint64_t mask : ConnectedEdgeSubsets(g, k)) {
    std::uint32_t support = 0;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) {
      const auto& e = g.edge(std::countr_zero(b));
      support |= (1u << e.first) | (1u << e.second);
    }
    if (trees && std::popcount(support) != k + 1) continue;
    out.push_back(on_edges ? VertexSet(mask) : VertexSet(support));
  }
  if (out.empty()) return std::nullopt;
  return Hypergraph(on_edges ? g.num_edges() : g.num_vertices(),
                    std::move(out));
}

std::optional<Hypergraph> FEdgeConnected(const SimpleGraph& g, int k) {
  return SubgraphHypergraph(g, k, SubgraphFamily::kEdgeConnected);
}
std::optional<Hypergraph> FVertexConnected(const SimpleGraph& g, int k) {
  return SubgraphHypergraph(g, k, SubgraphFamily::kVertexConnected);
}
std::optional<Hypergraph> FEdgeTree(const SimpleGraph& g, int k) {
  return SubgraphHypergraph(g, k, SubgraphFamily::kEdgeTree);
}
std::optional<Hypergraph> FVertexTree(const SimpleGraph& g, int k) {
  return SubgraphHypergraph(g, k, SubgraphFamily::kVertexTree);
}

SimpleGraph LineGraph(const SimpleGraph& g) {
  const int m = g.num_edges();
  if (m > SimpleGraph::kMaxVertices) {
    throw InvalidArgument("line graph of a graph with " + std::to_string(m) +
                          " edges exceeds 16 vertices");
  }
  if (m == 0) throw InvalidArgument("line graph of an edgeless graph");
  std::vector<SimpleGraph::Edge> edges;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < j; ++i) {
      const auto& a = g.edge(i);
      const auto& b = g.edge(j);
      if (a.first == b.first || a.first == b.second || a.second == b.first ||
          a.second == b.second) {
        edges.emplace_back(i, j);
      }
    }
  }
  return SimpleGraph(m, std::move(edges));
}

SimpleGraph BeinekeGraph(int which) {
  // Pairs are written 1-based as two digits.
  static const std::vector<std::vector<int>> kGraphs = {
      {12, 13, 14},
      {13, 14, 15, 23, 24, 25, 34, 35, 45},
      {12, 23, 24, 34, 35, 36, 45, 46, 56},
      {12, 15, 23, 24, 34, 35, 45},
      {12, 16, 23, 24, 34, 35, 45, 56},
      {12, 23, 24, 34, 35, 45, 56},
      {12, 13, 14, 23, 24, 34, 35, 36, 45, 46, 56},
      {12, 13, 23, 24, 34, 35, 45, 46, 56},
      {12, 15, 16, 23, 26, 34, 36, 45, 46, 56},
  };
  if (which < 1 || which > 9) {
    throw InvalidArgument("forbidden graph index must be in [1, 9]");
  }
  std::vector<SimpleGraph::Edge> edges;
  int n = 0;
  for (int pair : kGraphs[which - 1]) {
    edges.emplace_back(pair / 10 - 1, pair % 10 - 1);
    n = std::max(n, pair % 10);
  }
  return SimpleGraph(n, std::move(edges));
}

std::uint32_t CanonicalCode(const SimpleGraph& g) {
  const int n = g.num_vertices();
  if (n > kMaxCanonicalVertices) {
    throw InvalidArgument("canonical form limited to 8 vertices");
  }
  const int length = PairCount(n);
  if (length == 0) return 0;
  // Depth-first over the vertex placed at each position; column j of the
  // string is fixed once positions 0..j are placed, so branches whose prefix
  // already exceeds the best string are cut.
  std::uint32_t best = ~std::uint32_t{0};
  std::array<int, kMaxCanonicalVertices> order{};
  auto search = [&](auto&& self, int j, std::uint32_t used,
                    std::uint32_t code) -> void {
    if (j == n) {
      best = std::min(best, code);
      return;
    }
    const int prefix = PairIndex(0, j + 1);
    const int shift = length - prefix;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      std::uint32_t next = code;
      for (int i = 0; i < j; ++i) {
        if (g.HasEdge(order[i], v)) {
          next |= 1u << (length - 1 - PairIndex(i, j));
        }
      }
      if (best != ~std::uint32_t{0} && (next >> shift) > (best >> shift)) {
        continue;
      }
      order[j] = v;
      self(self, j + 1, used | (1u << v), next);
    }
  };
  search(search, 0, 0, 0);
  return best;
}

namespace {

SimpleGraph FromCode(int n, std::uint32_t code) {
  const int length = PairCount(n);
  std::vector<SimpleGraph::Edge> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if ((code >> (length - 1 - PairIndex(u, v))) & 1) {
        edges.emplace_back(u, v);
      }
    }
  }
  return SimpleGraph(n, std::move(edges));
}

}  // namespace

SimpleGraph CanonicalForm(const SimpleGraph& g) {
  return FromCode(g.num_vertices(), CanonicalCode(g));
}

bool AreIsomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges()) {
    return false;
  }
  return CanonicalCode(a) == CanonicalCode(b);
}

std::vector<SimpleGraph> EnumerateGraphsUpToIso(int n) {
  if (n < 1 || n > kMaxEnumerationVertices) {
    throw InvalidArgument("graph enumeration needs 1 <= n <= 7");
  }
  std::set<std::uint32_t> codes = {0};
  for (int size = 2; size <= n; ++size) {
    std::set<std::uint32_t> next;
    for (std::uint32_t code : codes) {
      const SimpleGraph base = FromCode(size - 1, code);
      for (std::uint32_t nbrs = 0; nbrs < (1u << (size - 1)); ++nbrs) {
        std::vector<SimpleGraph::Edge> edges = base.edges();
        for (int u = 0; u < size - 1; ++u) {
          if ((nbrs >> u) & 1) edges.emplace_back(u, size - 1);
        }
        next.insert(CanonicalCode(SimpleGraph(size, std::move(edges))));
      }
    }
    codes = std::move(next);
  }
  std::vector<SimpleGraph> out;
  for (std::uint32_t code : codes) out.push_back(FromCode(n, code));
  return out;
}

std::vector<SimpleGraph> EnumerateConnectedGraphsUpToIso(int n) {
  std::vector<SimpleGraph> out;
  for (SimpleGraph& g : EnumerateGraphsUpToIso(n)) {
    if (IsConnected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::optional<BeinekeMatch> ContainsBeinekeForbidden(const SimpleGraph& g) {
  const int n = g.num_vertices();
  for (int which = 1; which <= 9; ++which) {
    const SimpleGraph f = BeinekeGraph(which);
    const int size = f.num_vertices();
    if (size > n) continue;
    const std::uint32_t target = CanonicalCode(f);
    // Subsets of exactly `size` vertices in increasing numeric order.
    std::uint32_t s = (1u << size) - 1;
    while (s < (1u << n)) {
      const SimpleGraph sub = InducedSubgraph(g, s);
      if (sub.num_edges() == f.num_edges() && CanonicalCode(sub) == target) {
        BeinekeMatch match{which, {}};
        for (int v = 0; v < n; ++v) {
          if ((s >> v) & 1) match.witness.push_back(v);
        }
        return match;
      }
      const std::uint32_t low = s & -s;
      const std::uint32_t ripple = s + low;
      s = (((ripple ^ s) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

std::vector<SimpleGraph> JmGraphEnumeration() {
  std::vector<SimpleGraph> out;
  for (int n = 4; n <= 6; ++n) {
    for (SimpleGraph& g : EnumerateConnectedGraphsUpToIso(n)) {
      if (IsMinimalTransversalFree(AsHypergraph(g))) out.push_back(std::move(g));
    }
  }
  return out;
}

namespace {

int ParseGraphInt(const std::string& tok, int line) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return value;
}

}  // namespace

SimpleGraph ParseGraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<SimpleGraph::Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream line(raw);
    std::string tag, a, b, extra;
    if (!(line >> tag)) continue;
    if (tag == "g") {
      if (n >= 0) throw ParseError(line_no, "duplicate 'g' line");
      if (!(line >> a)) throw ParseError(line_no, "'g' needs a vertex count");
      n = ParseGraphInt(a, line_no);
      if (n < 1 || n > SimpleGraph::kMaxVertices) {
        throw ParseError(line_no, "graph vertex count must be in [1, 16]");
      }
    } else if (tag == "ge") {
      if (n < 0) throw ParseError(line_no, "'ge' line before 'g' line");
      if (!(line >> a >> b)) throw ParseError(line_no, "'ge' needs two ends");
      const int u = ParseGraphInt(a, line_no);
      const int v = ParseGraphInt(b, line_no);
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
        throw ParseError(line_no, "bad graph edge " + a + " " + b);
      }
      edges.emplace_back(std::min(u, v), std::max(u, v));
    } else {
      throw ParseError(line_no, "unknown record '" + tag + "'");
    }
    if (line >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
  }
  if (n < 0) throw ParseError(0, "missing 'g' line");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ParseError(0, "repeated graph edge");
  }
  return SimpleGraph(n, std::move(edges));
}

std::string FormatGraph(const SimpleGraph& g) {
  std::string out = "g " + std::to_string(g.num_vertices()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "ge " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace hypernim
