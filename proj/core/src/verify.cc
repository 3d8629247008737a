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

#include "hypernim/verify.h"

#include <algorithm>
#include <deque>
#include <exception>
#include <set>
#include <thread>
#include <unordered_set>
#include <utility>

#include "hypernim/errors.h"
#include "hypernim/structure.h"

namespace hypernim {

Box Box::Cube(int n, int lo, int hi) {
  if (n < 1 || lo < 0 || hi < lo) {
    throw InvalidArgument("box needs n >= 1 and 0 <= lo <= hi");
  }
  return Box{std::vector<int>(n, lo), std::vector<int>(n, hi)};
}

Box Box::Point(const Position& x) { return Box{x.piles(), x.piles()}; }

std::int64_t Box::Volume() const {
  std::int64_t v = 1;
  for (int i = 0; i < dims(); ++i) {
    v *= hi[i] - lo[i] + 1;
    if (v > (std::int64_t{1} << 50)) return v;
  }
  return v;
}

Position Box::At(std::int64_t rank) const {
  std::vector<int> piles(dims());
  for (int i = dims() - 1; i >= 0; --i) {
    const int width = hi[i] - lo[i] + 1;
    piles[i] = lo[i] + static_cast<int>(rank % width);
    rank /= width;
  }
  return Position(std::move(piles));
}

std::string Box::ToString() const {
  const bool same =
      std::all_of(lo.begin(), lo.end(), [&](int v) { return v == lo[0]; }) &&
      std::all_of(hi.begin(), hi.end(), [&](int v) { return v == hi[0]; });
  if (same) {
    return "[" + std::to_string(lo[0]) + ".." + std::to_string(hi[0]) + "]^" +
           std::to_string(dims());
  }
  std::string out;
  for (int i = 0; i < dims(); ++i) {
    if (i > 0) out += "x";
    out += "[" + std::to_string(lo[i]) + ".." + std::to_string(hi[i]) + "]";
  }
  return out;
}

const char* ToString(ReportStatus s) {
  return s == ReportStatus::kAllMatch ? "AllMatch" : "CounterexampleFound";
}

bool ConformanceReport::AllHold() const {
  if (status != ReportStatus::kAllMatch) return false;
  for (const auto& [name, outcome] : per_condition) {
    if (!outcome.holds) return false;
  }
  return true;
}

namespace {

// Advances x to the next position of the box; false past the end.
bool Next(const Box& box, Position& x) {
  for (int i = box.dims() - 1; i >= 0; --i) {
    if (x[i] < box.hi[i]) {
      ++x[i];
      return true;
    }
    x[i] = box.lo[i];
  }
  return false;
}

void CheckBox(const Hypergraph& h, const Box& box,
              const VerifyOptions& options) {
  if (box.dims() != h.num_vertices()) {
    throw InvalidArgument("box has " + std::to_string(box.dims()) +
                          " coordinates, hypergraph has " +
                          std::to_string(h.num_vertices()) + " vertices");
  }
  if (box.Volume() > options.max_positions) {
    throw ResourceLimitError("box " + box.ToString() + " has more than " +
                             std::to_string(options.max_positions) +
                             " positions");
  }
}

// Runs fn(engine, begin, end) on contiguous odometer ranges, one engine per
// worker, and returns the per-range results in range order.
template <typename R, typename Fn>
std::vector<R> RunPartitioned(const Hypergraph& h, std::int64_t volume,
                              const VerifyOptions& options, Fn fn) {
  const int workers = static_cast<int>(
      std::clamp<std::int64_t>(options.workers, 1, std::max<std::int64_t>(volume, 1)));
  std::vector<R> out(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](int w) {
    try {
      Engine engine(h, options.limits);
      out[w] = fn(engine, volume * w / workers, volume * (w + 1) / workers);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

struct SgChunk {
  std::optional<std::int64_t> rank;
  std::optional<Counterexample> counterexample;
};

int UniformBound(const Box& box) {
  return *std::max_element(box.hi.begin(), box.hi.end());
}

}  // namespace

ConformanceReport VerifySgEqualsJm(const Hypergraph& h, int bound,
                                   const VerifyOptions& options) {
  if (bound < 1) throw InvalidArgument("bound must be >= 1");
  return VerifySgEqualsJm(h, Box::Cube(h.num_vertices(), 0, bound), options);
}

ConformanceReport VerifySgEqualsJm(const Hypergraph& h, const Box& box,
                                   const VerifyOptions& options) {
  CheckBox(h, box, options);
  const std::int64_t volume = box.Volume();
  auto chunks = RunPartitioned<SgChunk>(
      h, volume, options,
      [&](Engine& engine, std::int64_t begin, std::int64_t end) {
        SgChunk out;
        Position x = box.At(begin);
        for (std::int64_t r = begin; r < end; ++r, Next(box, x)) {
          const int sg = engine.Grundy(x);
          const JmProfile p = ComputeJmProfile(engine, x);
          if (sg != p.u) {
            out.rank = r;
            out.counterexample = Counterexample{x, sg, p.u};
            break;
          }
        }
        return out;
      });
  ConformanceReport report;
  report.family_id = options.family_id;
  report.box = box.ToString();
  report.bound = UniformBound(box);
  report.positions_checked = volume;
  ConditionOutcome& outcome = report.per_condition["sg-equals-u"];
  for (const SgChunk& c : chunks) {
    if (!c.counterexample) continue;
    report.status = ReportStatus::kCounterexampleFound;
    report.first_counterexample = c.counterexample;
    report.positions_checked = *c.rank + 1;
    outcome.holds = false;
    outcome.first_violation = c.counterexample->x;
    outcome.witness = "x=" + FormatPosition(c.counterexample->x) +
                      " sg=" + std::to_string(c.counterexample->sg) +
                      " U=" + std::to_string(c.counterexample->u);
    break;
  }
  return report;
}

ConformanceReport CompareSg(const Hypergraph& a, const Hypergraph& b,
                            int bound, const VerifyOptions& options) {
  if (a.num_vertices() != b.num_vertices()) {
    throw InvalidArgument("compared hypergraphs differ in vertex count");
  }
  const Box box = Box::Cube(a.num_vertices(), 0, bound);
  CheckBox(a, box, options);
  const std::int64_t volume = box.Volume();
  auto chunks = RunPartitioned<SgChunk>(
      a, volume, options,
      [&](Engine& engine_a, std::int64_t begin, std::int64_t end) {
        Engine engine_b(b, options.limits);
        SgChunk out;
        Position x = box.At(begin);
        for (std::int64_t r = begin; r < end; ++r, Next(box, x)) {
          const int ga = engine_a.Grundy(x);
          const int gb = engine_b.Grundy(x);
          if (ga != gb) {
            out.rank = r;
            out.counterexample = Counterexample{x, ga, gb};
            break;
          }
        }
        return out;
      });
  ConformanceReport report;
  report.family_id = options.family_id;
  report.box = box.ToString();
  report.bound = bound;
  report.positions_checked = volume;
  ConditionOutcome& outcome = report.per_condition["sg-equal"];
  for (const SgChunk& c : chunks) {
    if (!c.counterexample) continue;
    report.status = ReportStatus::kCounterexampleFound;
    report.first_counterexample = c.counterexample;
    report.positions_checked = *c.rank + 1;
    outcome.holds = false;
    outcome.first_violation = c.counterexample->x;
    outcome.witness = "x=" + FormatPosition(c.counterexample->x) +
                      " sg1=" + std::to_string(c.counterexample->sg) +
                      " sg2=" + std::to_string(c.counterexample->u);
    break;
  }
  return report;
}

namespace {

struct ConditionChunk {
  // Per condition: rank and witness of the first violation in the range.
  std::map<std::string, std::pair<std::int64_t, std::string>> first;
  std::map<std::string, Position> where;
};

std::string MoveWitness(const Position& x, const Position& y) {
  return FormatPosition(x) + "->" + FormatPosition(y);
}

}  // namespace

ConformanceReport CheckConditions(const Hypergraph& h, int bound,
                                  const std::vector<std::string>& which,
                                  const VerifyOptions& options) {
  if (bound < 0) throw InvalidArgument("bound must be >= 0");
  return CheckConditions(h, Box::Cube(h.num_vertices(), 0, bound), which,
                         options);
}

ConformanceReport CheckConditions(const Hypergraph& h, const Box& box,
                                  const std::vector<std::string>& which,
                                  const VerifyOptions& options) {
  CheckBox(h, box, options);
  std::set<std::string> wanted;
  for (const std::string& w : which) {
    if (std::find(kConditionNames.begin(), kConditionNames.end(), w) ==
        kConditionNames.end()) {
      throw InvalidArgument("unknown condition '" + w + "'");
    }
    wanted.insert(w);
  }
  ConformanceReport report;
  report.family_id = options.family_id;
  report.box = box.ToString();
  report.bound = UniformBound(box);
  report.positions_checked = box.Volume();

  // Property A is only claimed for transversal-free hypergraphs.
  if (wanted.count("A")) {
    for (VertexSet e : h.edges()) {
      if (IsTransversal(h, e)) {
        ConditionOutcome& a = report.per_condition["A"];
        a.holds = false;
        a.skipped = true;
        a.note = "not transversal-free";
        a.witness = "transversal edge " + e.ToString();
        wanted.erase("A");
        break;
      }
    }
  }
  const bool want_a = wanted.count("A"), want_b1 = wanted.count("B1"),
             want_b2 = wanted.count("B2"), want_b3 = wanted.count("B3"),
             want_c2 = wanted.count("C2"), want_c3 = wanted.count("C3");

  auto chunks = RunPartitioned<ConditionChunk>(
      h, box.Volume(), options,
      [&](Engine& engine, std::int64_t begin, std::int64_t end) {
        ConditionChunk out;
        auto fail = [&](const char* name, std::int64_t rank,
                        const Position& x, std::string witness) {
          if (out.first.count(name)) return;
          out.first[name] = {rank, std::move(witness)};
          out.where.emplace(name, x);
        };
        Position x = box.At(begin);
        std::vector<char> long_heights, short_values, same_m_y;
        std::set<std::pair<std::int64_t, std::int64_t>> lower_m_y;
        for (std::int64_t r = begin; r < end; ++r, Next(box, x)) {
          if (out.first.size() == wanted.size()) break;
          const JmProfile p = ComputeJmProfile(engine, x);
          const int height = p.is_long() ? *p.height : engine.Height(x);
          long_heights.assign(height + 1, 0);
          short_values.assign(std::max<std::int64_t>(p.m, p.v) + 1, 0);
          same_m_y.assign(p.y + 1, 0);
          lower_m_y.clear();
          std::optional<Position> a_violation;
          ForEachMove(h, x, [&](int, const Position& t) {
            const JmProfile q = ComputeJmProfile(engine, t);
            if (want_a && q.u == p.u && !a_violation) a_violation = t;
            if (q.is_long()) {
              if (*q.height <= height) long_heights[*q.height] = 1;
            } else if (q.v < static_cast<std::int64_t>(short_values.size())) {
              short_values[q.v] = 1;
            }
            if (q.m == p.m && q.y <= p.y) same_m_y[q.y] = 1;
            if (want_c3 && q.m < p.m && q.y <= p.y) {
              lower_m_y.emplace(q.m, q.y);
            }
          });
          if (want_a && a_violation) {
            fail("A", r, x,
                 MoveWitness(x, *a_violation) + " U=" + std::to_string(p.u));
          }
          if (p.is_long()) {
            if (want_b1) {
              for (int z = static_cast<int>(p.m); z < height; ++z) {
                if (!long_heights[z]) {
                  fail("B1", r, x,
                       "x=" + FormatPosition(x) + " z=" + std::to_string(z));
                  break;
                }
              }
            }
            if (want_b2) {
              for (std::int64_t z = 0; z < p.m; ++z) {
                if (!short_values[z]) {
                  fail("B2", r, x,
                       "x=" + FormatPosition(x) + " z=" + std::to_string(z));
                  break;
                }
              }
            }
          } else if (want_b3) {
            for (std::int64_t z = 0; z < p.v; ++z) {
              if (!short_values[z]) {
                fail("B3", r, x,
                     "x=" + FormatPosition(x) + " z=" + std::to_string(z));
                break;
              }
            }
          }
          if (want_c2) {
            for (std::int64_t eta = 1; eta < p.y; ++eta) {
              if (!same_m_y[eta]) {
                fail("C2", r, x,
                     "x=" + FormatPosition(x) + " eta=" + std::to_string(eta));
                break;
              }
            }
          }
          if (want_c3) {
            bool ok = true;
            for (std::int64_t mu = 0; ok && mu < p.m; ++mu) {
              for (std::int64_t eta = p.m - mu + 1; ok && eta <= p.y; ++eta) {
                if (!lower_m_y.count({mu, eta})) {
                  ok = false;
                  fail("C3", r, x,
                       "x=" + FormatPosition(x) + " mu=" + std::to_string(mu) +
                           " eta=" + std::to_string(eta));
                }
              }
            }
          }
        }
        return out;
      });

  for (const std::string& name : wanted) {
    ConditionOutcome& outcome = report.per_condition[name];
    for (const ConditionChunk& c : chunks) {
      auto it = c.first.find(name);
      if (it == c.first.end()) continue;
      outcome.holds = false;
      outcome.witness = it->second.second;
      outcome.first_violation = c.where.at(name);
      break;
    }
  }
  return report;
}

ConformanceReport HeightLawSuite(const Hypergraph& h, int bound,
                                 std::optional<int> sg_bound,
                                 const VerifyOptions& options) {
  if (bound < 0) throw InvalidArgument("bound must be >= 0");
  const int n = h.num_vertices();
  const Box box = Box::Cube(n, 0, bound);
  CheckBox(h, box, options);
  Engine engine(h, options.limits);
  const std::int64_t volume = box.Volume();

  ConformanceReport report;
  report.family_id = options.family_id;
  report.box = box.ToString();
  report.bound = bound;
  report.positions_checked = volume;

  // Heights of the whole box, indexed by odometer rank.
  std::vector<int> height(volume);
  auto rank_of = [&](const Position& x) {
    std::int64_t r = 0;
    for (int i = 0; i < n; ++i) r = r * (bound + 1) + x[i];
    return r;
  };
  {
    Position x = box.At(0);
    for (std::int64_t r = 0; r < volume; ++r, Next(box, x)) {
      height[r] = engine.Height(x);
    }
  }
  auto y_of = [&](const Position& x) {
    return height[rank_of(x.ShiftedDown(x.MinPile()))] + 1;
  };
  auto fail = [&](const std::string& name, const Position& x,
                  std::string witness) {
    ConditionOutcome& o = report.per_condition[name];
    if (!o.holds) return;
    o.holds = false;
    o.first_violation = x;
    o.witness = std::move(witness);
  };

  // l0 on a possibly smaller box.
  {
    const int b0 = std::min(bound, sg_bound.value_or(bound));
    ConditionOutcome& o = report.per_condition["l0"];
    o.note = "sg checked on [0.." + std::to_string(b0) + "]^" +
             std::to_string(n);
    const Box sub = Box::Cube(n, 0, b0);
    Position x = sub.At(0);
    do {
      const int g = engine.Grundy(x);
      if (g > height[rank_of(x)]) {
        fail("l0", x, "x=" + FormatPosition(x) + " sg=" + std::to_string(g) +
                          " h=" + std::to_string(height[rank_of(x)]));
        break;
      }
    } while (Next(sub, x));
  }

  // l1 over every comparable pair x' <= x.
  report.per_condition["l1"];
  {
    Position x = box.At(0);
    bool done = false;
    do {
      const int hx = height[rank_of(x)];
      const Box below{std::vector<int>(n, 0), x.piles()};
      Position lower = below.At(0);
      do {
        const int hl = height[rank_of(lower)];
        const long long gap = x.Sum() - lower.Sum();
        if (hl > hx || hl < hx - gap) {
          fail("l1", x,
               "x=" + FormatPosition(x) + " x'=" + FormatPosition(lower));
          done = true;
          break;
        }
      } while (Next(below, lower));
    } while (!done && Next(box, x));
  }

  const bool tf = IsTransversalFree(h);
  report.per_condition["l2"];
  report.per_condition["l-my"];
  ConditionOutcome& l3t = report.per_condition["l3T"];
  if (!tf) {
    l3t.skipped = true;
    l3t.note = "skipped: hypergraph is not transversal-free";
  }
  {
    Position x = box.At(0);
    do {
      const int m = x.MinPile();
      const int yx = y_of(x);
      for (VertexSet e : h.edges()) {
        if (x.MinOver(e) == 0) continue;
        const Position top = ApplySlowMove(x, e);
        const int htop = height[rank_of(top)];
        Box targets = Box::Point(top);
        e.ForEach([&](int v) { targets.lo[v] = 0; });
        // Heights present in the sub-box above each target, checked by
        // walking targets and their up-sets.
        Position t = targets.At(0);
        do {
          const int ht = height[rank_of(t)];
          if (tf && ht < m) {
            fail("l3T", x, MoveWitness(x, t) + " h'=" + std::to_string(ht));
          }
          const int mt = t.MinPile();
          if (mt == m && y_of(t) == yx) {
            fail("l-my", x, MoveWitness(x, t));
          }
          if (report.per_condition["l2"].holds) {
            Box above = targets;
            above.lo = t.piles();
            std::vector<char> seen(htop + 1, 0);
            Position u = above.At(0);
            do {
              seen[height[rank_of(u)]] = 1;
            } while (Next(above, u));
            for (int z = ht; z <= htop; ++z) {
              if (!seen[z]) {
                fail("l2", x,
                     MoveWitness(x, t) + " z=" + std::to_string(z));
                break;
              }
            }
          }
        } while (Next(targets, t));
      }
    } while (Next(box, x));
  }
  return report;
}

Position CubeCounterexamplePosition(int p) {
  if (p < 1) throw InvalidArgument("cube counterexample needs p >= 1");
  const int m = static_cast<int>(Choose2(3 * p + 1));
  const int q = m + p;
  return Position{m, q, q, q, 2 * q, 2 * q, 2 * q, 3 * q};
}

CubeCheckResult CubeCounterexampleCheck(int p, CubeCheckMethod method) {
  const Hypergraph h = CubeFacets();
  CubeCheckResult result;
  result.x = CubeCounterexamplePosition(p);
  const int m = result.x[0];
  const int q = m + p;
  Engine engine(h);
  result.profile = ComputeJmProfile(engine, result.x);
  result.profile_as_expected =
      result.profile.m == m && result.profile.y == 3 * p + 1 &&
      result.profile.is_long() && result.profile.height == 3 * q;
  const int z = 3 * q - 1;
  if (method == CubeCheckMethod::kAuto) {
    method = CountMoves(h, result.x) <= 2'000'000 ? CubeCheckMethod::kExhaustive
                                                   : CubeCheckMethod::kUpSet;
  }
  result.method = method;

  auto examine = [&](const Position& t) {
    ++result.successors_examined;
    if (engine.Height(t) != z) return true;
    if (ComputeJmProfile(engine, t).is_long()) {
      result.long_successor = t;
      return false;
    }
    return true;
  };

  if (method == CubeCheckMethod::kExhaustive) {
    ForEachMove(h, result.x,
                [&](int, const Position& t) { return examine(t); });
    return result;
  }
  for (VertexSet e : h.edges()) {
    const Position top = ApplySlowMove(result.x, e);
    if (engine.Height(top) < z) continue;
    // Every successor has height at most z, and {height >= z} is closed
    // upwards, so unit decrements from the slow move reach all of it.
    std::unordered_set<Position, PositionHash> seen{top};
    std::deque<Position> queue{top};
    while (!queue.empty()) {
      const Position t = queue.front();
      queue.pop_front();
      if (!examine(t)) return result;
      e.ForEach([&](int v) {
        if (t[v] == 0) return;
        Position next = t;
        --next[v];
        if (seen.count(next) || engine.Height(next) < z) return;
        seen.insert(next);
        queue.push_back(std::move(next));
      });
    }
  }
  return result;
}

bool BoundsReport::AllHold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.holds; });
}

BoundsReport BoundsAudit(const Hypergraph& h,
                         const std::optional<GraphOrigin>& origin) {
  BoundsReport report;
  const auto k = Uniformity(h);
  report.uniform = k.has_value();
  report.k = k.value_or(0);
  if (h.num_vertices() <= kMaxMinimalTfVertices) {
    report.minimal_transversal_free = IsMinimalTransversalFree(h);
  }
  auto binom = [](int n, int r) {
    std::int64_t out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
  };
  const bool min_tf = report.minimal_transversal_free.value_or(false);
  auto add = [&](std::string name, std::int64_t value, std::int64_t limit,
                 std::string note, bool lower = false) {
    BoundCheck c;
    c.name = std::move(name);
    c.value = value;
    c.limit = limit;
    c.holds = lower ? value >= limit : value <= limit;
    c.equality = value == limit;
    c.note = std::move(note);
    report.checks.push_back(std::move(c));
  };
  const std::int64_t kk = report.k;
  if (report.uniform && min_tf) {
    add("vertex-bound", h.num_vertices(), kk * binom(2 * kk, kk),
        "n <= k*C(2k,k)");
  }
  if (report.uniform && IsSelfDual(h) && ExchangeAxiomHolds(h)) {
    add("self-dual-lower", h.num_edges(), std::int64_t{1} << kk,
        "2^k <= |edges|", /*lower=*/true);
    add("self-dual-upper", h.num_edges(), binom(2 * kk, kk),
        "|edges| <= C(2k,k)");
  }
  if (origin && min_tf && IsConnected(origin->graph)) {
    const std::int64_t gk = origin->k;
    const int edges = origin->graph.num_edges();
    switch (origin->family) {
      case SubgraphFamily::kEdgeConnected:
        add("ecbound-i", edges, gk * gk + gk, "|E| <= k^2+k");
        break;
      case SubgraphFamily::kEdgeTree:
        add("ecbound-ii", edges, (gk * gk * gk + gk) / 2 + 1,
            "|E| <= k^3/2+k/2+1");
        break;
      case SubgraphFamily::kVertexConnected:
      case SubgraphFamily::kVertexTree: {
        // The statement and the closing line of its proof give different
        // polynomials; the larger one is used.
        const std::int64_t stated = 2 * gk * gk * gk + 4 * gk * gk + gk + 2;
        const std::int64_t proved = 4 * gk * gk * gk + 2 * gk * gk + gk + 2;
        add("ecbound-iii", origin->graph.num_vertices(),
            std::max(stated, proved),
            stated >= proved ? "|U| <= 2k^3+4k^2+k+2 (stated form active)"
                             : "|U| <= 4k^3+2k^2+k+2 (proof form active)");
        break;
      }
    }
  }
  return report;
}

std::string RenderReport(const ConformanceReport& report) {
  std::string out;
  if (!report.family_id.empty()) out += "family: " + report.family_id + "\n";
  out += "box: " + report.box + "\n";
  out += "positions checked: " + std::to_string(report.positions_checked) +
         "\n";
  out += "status: " + std::string(ToString(report.status)) + "\n";
  if (report.first_counterexample) {
    const Counterexample& c = *report.first_counterexample;
    out += "first counterexample: x=" + FormatPosition(c.x) +
           " sg=" + std::to_string(c.sg) + " U=" + std::to_string(c.u) + "\n";
  }
  for (const auto& [name, o] : report.per_condition) {
    out += "condition " + name + ": ";
    out += o.skipped ? "skipped" : (o.holds ? "holds" : "fails");
    if (!o.witness.empty()) out += " (" + o.witness + ")";
    if (!o.note.empty()) out += " [" + o.note + "]";
    out += "\n";
  }
  out += "scope: exhaustive over " + report.box +
         " only; this is not a proof for unbounded positions\n";
  return out;
}

std::string RenderMachine(const ConformanceReport& report) {
  std::string out;
  if (!report.family_id.empty()) out += "family=" + report.family_id + "\n";
  out += "box=" + report.box + "\n";
  out += "positions=" + std::to_string(report.positions_checked) + "\n";
  out += "status=" + std::string(ToString(report.status)) + "\n";
  for (const auto& [name, o] : report.per_condition) {
    std::string witness = o.witness.empty() ? "-" : o.witness;
    std::replace(witness.begin(), witness.end(), ' ', ';');
    out += "CONDITION " + name + (o.holds ? " HOLDS " : " FAILS ") + witness +
           "\n";
  }
  out += "scope=bounded\n";
  return out;
}

}  // namespace hypernim
