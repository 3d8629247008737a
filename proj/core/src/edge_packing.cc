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

#include "hypernim/edge_packing.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypernim/errors.h"

namespace hypernim {
namespace {

constexpr double kEps = 1e-9;

// Dense tableau simplex for  max 1'x  s.t.  A x <= b, x >= 0  with A >= 0 and
// b >= 0, so the slack basis is feasible. Bland's rule prevents cycling.
class PackingLp {
 public:
  PackingLp(int rows, int cols)
      : rows_(rows), cols_(cols), width_(cols + rows + 1),
        tab_((rows + 1) * width_, 0.0), basis_(rows) {}

  void Set(int r, int c, double v) { at(r, c) = v; }
  void SetRhs(int r, double v) { at(r, width_ - 1) = v; }

  double Solve(std::vector<double>* x) {
    for (int r = 0; r < rows_; ++r) {
      at(r, cols_ + r) = 1.0;
      basis_[r] = cols_ + r;
    }
    for (int c = 0; c < cols_; ++c) at(rows_, c) = -1.0;
    while (true) {
      int enter = -1;
      for (int c = 0; c < cols_ + rows_; ++c) {
        if (at(rows_, c) < -kEps) {
          enter = c;
          break;
        }
      }
      if (enter < 0) break;
      int leave = -1;
      double best = 0;
      for (int r = 0; r < rows_; ++r) {
        const double a = at(r, enter);
        if (a <= kEps) continue;
        const double ratio = at(r, width_ - 1) / a;
        if (leave < 0 || ratio < best - kEps ||
            (ratio < best + kEps && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      // Packing LPs are bounded: every column has a positive entry.
      if (leave < 0) break;
      Pivot(leave, enter);
    }
    x->assign(cols_, 0.0);
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < cols_) (*x)[basis_[r]] = std::max(0.0, at(r, width_ - 1));
    }
    return at(rows_, width_ - 1);
  }

 private:
  double& at(int r, int c) { return tab_[r * width_ + c]; }

  void Pivot(int pr, int pc) {
    const double inv = 1.0 / at(pr, pc);
    for (int c = 0; c < width_; ++c) at(pr, c) *= inv;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (std::abs(f) <= kEps * kEps) continue;
      for (int c = 0; c < width_; ++c) at(r, c) -= f * at(pr, c);
    }
    basis_[pr] = pc;
  }

  int rows_;
  int cols_;
  int width_;
  std::vector<double> tab_;
  std::vector<int> basis_;
};

class BranchAndBound {
 public:
  BranchAndBound(std::vector<VertexSet> edges, std::vector<int> vertices,
                 std::int64_t max_nodes)
      : edges_(std::move(edges)), vertices_(std::move(vertices)),
        max_nodes_(max_nodes) {}

  // cap is indexed by original vertex id.
  void Run(std::vector<int> cap) {
    const int m = static_cast<int>(edges_.size());
    std::vector<int> ub(m);
    for (int j = 0; j < m; ++j) ub[j] = Implied(cap, j);
    std::vector<int> fixed(m, 0);
    best_mult_.assign(m, 0);
    Search(cap, ub, fixed, 0);
  }

  int best() const { return best_; }
  const std::vector<int>& best_multiplicity() const { return best_mult_; }

 private:
  int Implied(const std::vector<int>& cap, int j) const {
    int lim = std::numeric_limits<int>::max();
    edges_[j].ForEach([&](int v) { lim = std::min(lim, cap[v]); });
    return lim;
  }

  void Search(const std::vector<int>& cap, const std::vector<int>& ub,
              const std::vector<int>& fixed, int acc) {
    if (++nodes_ > max_nodes_) {
      throw ResourceLimitError("edge packing search exceeded " +
                               std::to_string(max_nodes_) + " nodes");
    }
    const int m = static_cast<int>(edges_.size());
    std::vector<int> cols;
    for (int j = 0; j < m; ++j) {
      if (std::min(ub[j], Implied(cap, j)) > 0) cols.push_back(j);
    }
    if (cols.empty()) {
      Offer(fixed, acc);
      return;
    }
    std::vector<int> bound_rows;
    for (int j : cols) {
      if (ub[j] < Implied(cap, j)) bound_rows.push_back(j);
    }
    const int nv = static_cast<int>(vertices_.size());
    const int nc = static_cast<int>(cols.size());
    PackingLp lp(nv + static_cast<int>(bound_rows.size()), nc);
    for (int r = 0; r < nv; ++r) {
      const int v = vertices_[r];
      lp.SetRhs(r, cap[v]);
      for (int c = 0; c < nc; ++c) {
        if (edges_[cols[c]].contains(v)) lp.Set(r, c, 1.0);
      }
    }
    for (std::size_t b = 0; b < bound_rows.size(); ++b) {
      const int r = nv + static_cast<int>(b);
      const int c = static_cast<int>(
          std::find(cols.begin(), cols.end(), bound_rows[b]) - cols.begin());
      lp.Set(r, c, 1.0);
      lp.SetRhs(r, ub[bound_rows[b]]);
    }
    std::vector<double> frac;
    const double lp_value = lp.Solve(&frac);
    const int bound = acc + static_cast<int>(std::floor(lp_value + 1e-6));
    if (bound <= best_) return;

    // Round down and fill greedily for a lower bound.
    std::vector<int> mult = fixed;
    std::vector<int> residual = cap;
    std::vector<int> room = ub;
    int total = acc;
    for (int c = 0; c < nc; ++c) {
      const int t = static_cast<int>(std::floor(frac[c] + 1e-7));
      if (t <= 0) continue;
      const int j = cols[c];
      mult[j] += t;
      room[j] -= t;
      total += t;
      edges_[j].ForEach([&](int v) { residual[v] -= t; });
    }
    for (int j : cols) {
      const int t = std::min(room[j], Implied(residual, j));
      if (t <= 0) continue;
      mult[j] += t;
      total += t;
      edges_[j].ForEach([&](int v) { residual[v] -= t; });
    }
    Offer(mult, total);
    if (best_ >= bound) return;

    // Branch on the most fractional variable.
    int branch = -1;
    double branch_score = 1.0;
    for (int c = 0; c < nc; ++c) {
      const double f = frac[c] - std::floor(frac[c]);
      if (f <= 1e-6 || f >= 1 - 1e-6) continue;
      const double score = std::abs(f - 0.5);
      if (score < branch_score) {
        branch = c;
        branch_score = score;
      }
    }
    // An integral LP optimum was captured by the rounding step above.
    if (branch < 0) return;
    const int j = cols[branch];
    const int lo = static_cast<int>(std::floor(frac[branch]));
    const int hi = lo + 1;

    if (hi <= ub[j] && hi <= Implied(cap, j)) {
      std::vector<int> cap_up = cap;
      edges_[j].ForEach([&](int v) { cap_up[v] -= hi; });
      std::vector<int> ub_up = ub;
      ub_up[j] -= hi;
      std::vector<int> fixed_up = fixed;
      fixed_up[j] += hi;
      Search(cap_up, ub_up, fixed_up, acc + hi);
    }
    std::vector<int> ub_down = ub;
    ub_down[j] = lo;
    Search(cap, ub_down, fixed, acc);
  }

  void Offer(const std::vector<int>& mult, int total) {
    if (total > best_) {
      best_ = total;
      best_mult_ = mult;
    }
  }

  std::vector<VertexSet> edges_;
  std::vector<int> vertices_;
  std::int64_t max_nodes_;
  std::int64_t nodes_ = 0;
  int best_ = -1;
  std::vector<int> best_mult_;
};

}  // namespace

PackingResult MaxEdgePacking(const std::vector<VertexSet>& edges,
                             const Position& capacity,
                             std::int64_t max_nodes) {
  PackingResult result;
  result.multiplicity.assign(edges.size(), 0);
  // Edges through an empty pile can never be used.
  std::vector<int> active;
  VertexSet covered;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].span() > capacity.size()) {
      throw InvalidArgument("edge " + edges[i].ToString() +
                            " exceeds position length");
    }
    if (capacity.MinOver(edges[i]) > 0) {
      active.push_back(static_cast<int>(i));
      covered = covered | edges[i];
    }
  }
  if (active.empty()) return result;
  std::vector<VertexSet> sub;
  sub.reserve(active.size());
  for (int i : active) sub.push_back(edges[i]);
  BranchAndBound bnb(std::move(sub), covered.Members(), max_nodes);
  bnb.Run(capacity.piles());
  result.value = bnb.best();
  for (std::size_t a = 0; a < active.size(); ++a) {
    result.multiplicity[active[a]] = bnb.best_multiplicity()[a];
  }
  return result;
}

}  // namespace hypernim
