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

#include "hypernim/hypergraph.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "hypernim/errors.h"

namespace hypernim {

Hypergraph::Hypergraph(int num_vertices, std::vector<VertexSet> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 1 || num_vertices_ > VertexSet::kMaxVertices) {
    throw InvalidArgument("vertex count " + std::to_string(num_vertices_) +
                          " outside [1, 64]");
  }
  if (edges_.empty()) throw InvalidArgument("hypergraph has no edges");
  const VertexSet ground = ground_set();
  for (VertexSet e : edges_) {
    if (e.empty()) throw InvalidArgument("hypergraph contains the empty edge");
    if (!e.IsSubsetOf(ground)) {
      throw InvalidArgument("edge " + e.ToString() + " exceeds " +
                            std::to_string(num_vertices_) + " vertices");
    }
  }
  std::sort(edges_.begin(), edges_.end(), LexLess);
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Hypergraph Hypergraph::Of(
    int num_vertices, std::initializer_list<std::initializer_list<int>> edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& e : edges) sets.emplace_back(e);
  return Hypergraph(num_vertices, std::move(sets));
}

bool Hypergraph::CoversGroundSet() const {
  VertexSet all;
  for (VertexSet e : edges_) all = all | e;
  return all == ground_set();
}

std::optional<int> Hypergraph::IndexOf(VertexSet edge) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge, LexLess);
  if (it == edges_.end() || *it != edge) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::optional<Hypergraph> InducedSubhypergraph(const Hypergraph& h,
                                               VertexSet s) {
  std::vector<VertexSet> kept;
  for (VertexSet e : h.edges()) {
    if (e.IsSubsetOf(s)) kept.push_back(e);
  }
  if (kept.empty()) return std::nullopt;
  return Hypergraph(h.num_vertices(), std::move(kept));
}

bool IsTransversal(const Hypergraph& h, VertexSet t) {
  for (VertexSet e : h.edges()) {
    if (!e.Intersects(t)) return false;
  }
  return true;
}

bool IsTransversalFree(const Hypergraph& h) {
  for (VertexSet e : h.edges()) {
    if (IsTransversal(h, e)) return false;
  }
  return true;
}

std::optional<MinimalTfViolation> FindMinimalTfViolation(const Hypergraph& h) {
  for (VertexSet e : h.edges()) {
    if (IsTransversal(h, e)) {
      return MinimalTfViolation{MinimalTfViolation::Kind::kTransversalEdge, e};
    }
  }
  const int n = h.num_vertices();
  if (n > kMaxMinimalTfVertices) {
    throw ResourceLimitError(
        "minimal transversal-free check is exhaustive over subsets and is "
        "limited to " +
        std::to_string(kMaxMinimalTfVertices) + " vertices (got " +
        std::to_string(n) + ")");
  }
  // has_edge[S]: the induced subhypergraph on S is nonempty.
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint8_t> has_edge(full + 1, 0);
  for (VertexSet e : h.edges()) has_edge[e.bits()] = 1;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    for (std::uint64_t s = 0; s <= full; ++s) {
      if ((s & bit) && has_edge[s ^ bit]) has_edge[s] = 1;
    }
  }
  // An edge T of h_S is a transversal of h_S iff h_{S \ T} is empty.
  for (std::uint64_t s = 1; s < full; ++s) {
    if (!has_edge[s]) continue;
    bool found = false;
    for (VertexSet e : h.edges()) {
      if ((e.bits() & ~s) == 0 && !has_edge[s & ~e.bits()]) {
        found = true;
        break;
      }
    }
    if (!found) {
      return MinimalTfViolation{
          MinimalTfViolation::Kind::kSubsetWithoutTransversalEdge,
          VertexSet(s)};
    }
  }
  return std::nullopt;
}

bool IsMinimalTransversalFree(const Hypergraph& h) {
  return !FindMinimalTfViolation(h).has_value();
}

std::vector<VertexSet> ConnectedComponents(const Hypergraph& h) {
  std::vector<VertexSet> out;
  VertexSet unseen = h.ground_set();
  while (!unseen.empty()) {
    VertexSet reached = VertexSet::Singleton(unseen.front());
    bool grew = true;
    while (grew) {
      grew = false;
      for (VertexSet e : h.edges()) {
        if (e.Intersects(reached) && !e.IsSubsetOf(reached)) {
          reached = reached | e;
          grew = true;
        }
      }
    }
    out.push_back(reached);
    unseen = unseen - reached;
  }
  return out;
}

bool IsConnected(const Hypergraph& h) {
  return ConnectedComponents(h).size() == 1;
}

std::optional<int> Uniformity(const Hypergraph& h) {
  const int k = h.edge(0).size();
  for (VertexSet e : h.edges()) {
    if (e.size() != k) return std::nullopt;
  }
  return k;
}

namespace {

int ParseInt(const std::string& token, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

}  // namespace

Hypergraph ParseHypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<VertexSet> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream line(raw);
    std::string tag;
    if (!(line >> tag)) continue;
    if (tag == "n") {
      if (n >= 0) throw ParseError(line_no, "duplicate 'n' line");
      std::string tok;
      if (!(line >> tok)) throw ParseError(line_no, "'n' needs a count");
      n = ParseInt(tok, line_no);
      if (n < 1 || n > VertexSet::kMaxVertices) {
        throw ParseError(line_no, "vertex count must be in [1, 64]");
      }
      if (line >> tok) throw ParseError(line_no, "trailing token '" + tok + "'");
    } else if (tag == "e") {
      if (n < 0) throw ParseError(line_no, "'e' line before 'n' line");
      VertexSet e;
      std::string tok;
      while (line >> tok) {
        const int v = ParseInt(tok, line_no);
        if (v < 0 || v >= n) {
          throw ParseError(line_no, "vertex " + tok + " outside [0, " +
                                        std::to_string(n) + ")");
        }
        e = e.with(v);
      }
      if (e.empty()) throw ParseError(line_no, "empty edge");
      edges.push_back(e);
    } else {
      throw ParseError(line_no, "unknown record '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError(0, "missing 'n' line");
  if (edges.empty()) throw ParseError(0, "no edges");
  Hypergraph h(n, std::move(edges));
  if (!h.CoversGroundSet()) {
    throw ParseError(0, "edges do not cover all " + std::to_string(n) +
                            " vertices");
  }
  return h;
}

std::string FormatHypergraph(const Hypergraph& h) {
  std::string out = "n " + std::to_string(h.num_vertices()) + "\n";
  for (VertexSet e : h.edges()) {
    out += 'e';
    e.ForEach([&](int v) { out += ' ' + std::to_string(v); });
    out += '\n';
  }
  return out;
}

Hypergraph ReadHypergraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open hypergraph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseHypergraph(buffer.str());
}

}  // namespace hypernim
