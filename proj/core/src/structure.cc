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

#include "hypernim/structure.h"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "hypernim/errors.h"

namespace hypernim {

std::optional<ExchangeViolation> FindExchangeViolation(const Hypergraph& h) {
  if (!Uniformity(h)) {
    throw InvalidArgument("exchange axiom requires uniform hypergraph");
  }
  std::unordered_set<VertexSet, VertexSetHash> edges(h.edges().begin(),
                                                     h.edges().end());
  for (int a = 0; a < h.num_edges(); ++a) {
    const VertexSet ea = h.edge(a);
    for (int b = 0; b < h.num_edges(); ++b) {
      if (a == b) continue;
      const VertexSet eb = h.edge(b);
      const VertexSet removable = ea - eb;
      const VertexSet addable = eb - ea;
      std::optional<int> bad;
      removable.ForEach([&](int i) {
        if (bad) return;
        bool ok = false;
        addable.ForEach([&](int j) {
          if (!ok && edges.count(ea.without(i).with(j))) ok = true;
        });
        if (!ok) bad = i;
      });
      if (bad) return ExchangeViolation{a, b, *bad};
    }
  }
  return std::nullopt;
}

bool ExchangeAxiomHolds(const Hypergraph& h) {
  return !FindExchangeViolation(h).has_value();
}

bool IsSelfDual(const Hypergraph& h) {
  const VertexSet ground = h.ground_set();
  for (VertexSet e : h.edges()) {
    const VertexSet complement = ground - e;
    if (complement.empty() || !h.Contains(complement)) return false;
  }
  return true;
}

namespace {

bool ChainBetween(const Hypergraph& h, int a, int b) {
  if (a == b) return true;
  const VertexSet within = h.edge(a) | h.edge(b);
  std::vector<int> pool;
  for (int e = 0; e < h.num_edges(); ++e) {
    if (h.edge(e).IsSubsetOf(within)) pool.push_back(e);
  }
  std::vector<bool> seen(h.num_edges(), false);
  std::deque<int> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    const VertexSet cur = h.edge(queue.front());
    queue.pop_front();
    for (int e : pool) {
      if (seen[e]) continue;
      const VertexSet next = h.edge(e);
      if (!next.Intersects(cur) || (next - cur).size() > 1) continue;
      if (e == b) return true;
      seen[e] = true;
      queue.push_back(e);
    }
  }
  return false;
}

}  // namespace

bool ChainExists(const Hypergraph& h, VertexSet a, VertexSet b) {
  const auto ia = h.IndexOf(a);
  const auto ib = h.IndexOf(b);
  if (!ia || !ib) {
    throw InvalidArgument("chain endpoints must be edges of the hypergraph");
  }
  return ChainBetween(h, *ia, *ib);
}

namespace {

// Edge indices of h inside w.
std::vector<int> Pool(const Hypergraph& h, VertexSet w) {
  std::vector<int> pool;
  for (int e = 0; e < h.num_edges(); ++e) {
    if (h.edge(e).IsSubsetOf(w)) pool.push_back(e);
  }
  return pool;
}

int Find(std::vector<int>& parent, int i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// For k-uniform h with k >= 2 a chain step is exactly a pair of edges
// sharing k-1 vertices, which is symmetric. Chains inside w are then the
// connected components of that relation on the edges inside w. Returns the
// component of every edge index (-1 outside w), or an empty vector when all
// edges inside w form one component.
std::vector<int> UniformChainComponents(const Hypergraph& h, VertexSet w) {
  const std::vector<int> pool = Pool(h, w);
  std::vector<int> parent(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) parent[i] = static_cast<int>(i);
  std::unordered_map<std::uint64_t, int> bucket;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const VertexSet e = h.edge(pool[i]);
    e.ForEach([&](int v) {
      auto [it, inserted] = bucket.emplace(e.without(v).bits(),
                                           static_cast<int>(i));
      if (!inserted) {
        parent[Find(parent, static_cast<int>(i))] = Find(parent, it->second);
      }
    });
  }
  bool single = true;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (Find(parent, static_cast<int>(i)) != Find(parent, 0)) single = false;
  }
  if (single) return {};
  std::vector<int> comp(h.num_edges(), -1);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    comp[pool[i]] = Find(parent, static_cast<int>(i));
  }
  return comp;
}

}  // namespace

std::optional<std::pair<int, int>> FindChainlessPair(const Hypergraph& h) {
  const auto k = Uniformity(h);
  if (!k) {
    for (int a = 0; a < h.num_edges(); ++a) {
      for (int b = 0; b < h.num_edges(); ++b) {
        if (!ChainBetween(h, a, b)) return std::make_pair(a, b);
      }
    }
    return std::nullopt;
  }
  // Distinct singletons never meet.
  if (*k == 1) {
    if (h.num_edges() > 1) return std::make_pair(0, 1);
    return std::nullopt;
  }
  // Reversing a chain of equal-size edges gives a chain, so unordered pairs
  // suffice. Components are computed once per union a | b; only unions whose
  // edges split into several components are kept.
  std::unordered_map<std::uint64_t, std::vector<int>> split;
  std::unordered_set<std::uint64_t> done;
  for (int a = 0; a < h.num_edges(); ++a) {
    for (int b = a + 1; b < h.num_edges(); ++b) {
      const VertexSet w = h.edge(a) | h.edge(b);
      if (done.insert(w.bits()).second) {
        std::vector<int> comp = UniformChainComponents(h, w);
        if (!comp.empty()) split.emplace(w.bits(), std::move(comp));
      }
      auto it = split.find(w.bits());
      if (it != split.end() && it->second[a] != it->second[b]) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

bool HasChainProperty(const Hypergraph& h) {
  return !FindChainlessPair(h).has_value();
}

std::optional<D3Violation> FindD3Violation(const Hypergraph& h) {
  const VertexSet ground = h.ground_set();
  // All unions of nonempty subfamilies.
  std::unordered_set<std::uint64_t> supports;
  std::vector<VertexSet> work;
  for (VertexSet e : h.edges()) {
    if (supports.insert(e.bits()).second) work.push_back(e);
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (VertexSet e : h.edges()) {
      const VertexSet u = work[i] | e;
      if (supports.insert(u.bits()).second) {
        if (static_cast<std::int64_t>(supports.size()) > kMaxD3Supports) {
          throw ResourceLimitError("D3 check exceeded " +
                                   std::to_string(kMaxD3Supports) +
                                   " distinct subfamily supports");
        }
        work.push_back(u);
      }
    }
  }
  std::sort(work.begin(), work.end(), LexLess);

  std::vector<VertexSet> traces, minimal;
  for (VertexSet support : work) {
    if (support == ground) continue;
    // F inside W is good iff some S not inside W has S & W contained in F.
    traces.clear();
    bool disjoint_edge = false;
    for (VertexSet s : h.edges()) {
      if (s.IsSubsetOf(support)) continue;
      const VertexSet t = s & support;
      if (t.empty()) {
        disjoint_edge = true;
        break;
      }
      traces.push_back(t);
    }
    if (disjoint_edge) continue;
    // Only inclusion-minimal traces matter.
    std::sort(traces.begin(), traces.end(), [](VertexSet x, VertexSet y) {
      return x.size() != y.size() ? x.size() < y.size() : x.bits() < y.bits();
    });
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    minimal.clear();
    for (VertexSet t : traces) {
      if (std::none_of(minimal.begin(), minimal.end(),
                       [&](VertexSet m) { return m.IsSubsetOf(t); })) {
        minimal.push_back(t);
      }
    }
    VertexSet bad_cover;
    std::vector<int> bad;
    for (int f = 0; f < h.num_edges(); ++f) {
      const VertexSet fe = h.edge(f);
      if (!fe.IsSubsetOf(support)) continue;
      const bool good = std::any_of(minimal.begin(), minimal.end(),
                                    [&](VertexSet t) { return t.IsSubsetOf(fe); });
      if (!good) {
        bad.push_back(f);
        bad_cover = bad_cover | fe;
      }
    }
    if (!bad.empty() && bad_cover == support) {
      return D3Violation{support, std::move(bad)};
    }
  }
  return std::nullopt;
}

bool SatisfiesD3(const Hypergraph& h) { return !FindD3Violation(h).has_value(); }

bool SatisfiesD2At(Engine& engine, const Position& x) {
  const int m = x.MinPile();
  if (m == 0) throw InvalidArgument("D2 defined only for positive positions");
  const Hypergraph& h = engine.hypergraph();
  const int height = engine.Height(x);
  for (VertexSet e : h.edges()) {
    if (x.MinOver(e) != m) continue;
    if (engine.Height(ApplySlowMove(x, e)) == height - 1) return true;
  }
  return false;
}

KConditions CheckKConstruction(const Hypergraph& kk, int k, int delta) {
  if (delta <= 0 || delta > k - 3) {
    throw InvalidArgument("K construction needs 0 < delta <= k - 3 (k=" +
                          std::to_string(k) + ", delta=" +
                          std::to_string(delta) + ")");
  }
  const auto size = Uniformity(kk);
  if (!size || *size != k + delta - 1) {
    throw InvalidArgument("K construction needs a (k + delta - 1)-uniform "
                          "hypergraph");
  }
  KConditions out{true, true, true};
  for (int a = 0; a < kk.num_edges(); ++a) {
    for (int b = a; b < kk.num_edges(); ++b) {
      const int common = (kk.edge(a) & kk.edge(b)).size();
      if (common < delta) out.k1 = false;
      if (a != b && common > k - 2) out.k2 = false;
    }
  }
  VertexSet in_all = kk.ground_set();
  for (VertexSet e : kk.edges()) in_all = in_all & e;
  out.k3 = in_all.empty();
  return out;
}

const char* ToString(JmVerdictTag tag) {
  switch (tag) {
    case JmVerdictTag::kProvablyJm:
      return "ProvablyJM";
    case JmVerdictTag::kProvablyNotJm:
      return "ProvablyNotJM";
    case JmVerdictTag::kUnknown:
      return "Unknown";
  }
  return "?";
}

JmVerdict JmSufficiency(const Hypergraph& h, int d2_box_bound,
                        std::int64_t max_d2_positions) {
  if (d2_box_bound < 1) throw InvalidArgument("D2 box bound must be >= 1");
  JmVerdict verdict;
  const auto components = ConnectedComponents(h);
  verdict.connected = components.size() == 1;
  if (!verdict.connected) {
    verdict.tag = JmVerdictTag::kProvablyNotJm;
    verdict.reason = "not connected";
    verdict.witness_sets = components;
    return verdict;
  }
  if (auto bad = FindMinimalTfViolation(h)) {
    verdict.tag = JmVerdictTag::kProvablyNotJm;
    verdict.reason =
        bad->kind == MinimalTfViolation::Kind::kTransversalEdge
            ? "not transversal-free: edge meets every edge"
            : "not minimal transversal-free: induced subhypergraph has no "
              "transversal edge";
    verdict.witness_sets = {bad->set};
    return verdict;
  }
  verdict.minimal_transversal_free = true;

  const auto chainless = FindChainlessPair(h);
  verdict.chain_property = !chainless.has_value();
  const auto d3 = FindD3Violation(h);
  verdict.d3 = !d3.has_value();
  if (!chainless && !d3) {
    verdict.tag = JmVerdictTag::kProvablyJm;
    verdict.reason = "A1, D1 and D3 hold";
    return verdict;
  }
  verdict.tag = JmVerdictTag::kUnknown;
  if (chainless) {
    verdict.reason = "D1 fails";
    verdict.witness_sets = {h.edge(chainless->first),
                            h.edge(chainless->second)};
  } else {
    verdict.reason = "D3 fails";
    verdict.witness_sets = {d3->support};
  }

  // Advisory D2 sampling.
  const int n = h.num_vertices();
  std::int64_t volume = 1;
  for (int i = 0; i < n && volume <= max_d2_positions; ++i) {
    volume *= d2_box_bound;
  }
  if (volume > max_d2_positions) {
    verdict.d2_sampling_skipped = true;
    return verdict;
  }
  Engine engine(h);
  Position x = Position::Filled(n, 1);
  while (true) {
    ++verdict.d2_positions_sampled;
    if (!SatisfiesD2At(engine, x)) {
      if (verdict.d2_failures == 0) verdict.d2_first_failure = x;
      ++verdict.d2_failures;
    }
    int i = n - 1;
    while (i >= 0 && x[i] == d2_box_bound) x[i--] = 1;
    if (i < 0) break;
    ++x[i];
  }
  return verdict;
}

}  // namespace hypernim
