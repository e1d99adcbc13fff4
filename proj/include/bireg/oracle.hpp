// Copyright 2026 The bireg Authors.
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

// Brute-force oracles and conjecture-level verifiers.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bireg/core.hpp"
#include "bireg/inequality.hpp"
#include "bireg/matching.hpp"
#include "bireg/tensor.hpp"

namespace bireg {

struct BruteForceOptions {
  int max_edges = 16;
  std::uint64_t node_budget = 500'000'000;
};

// Searches all involutions of the edge set for one with
// [u o iota, v] = all-ones. Edges are decided in index order: the first
// open edge is either fixed or swapped with a later open edge; a partial
// relabeling is abandoned as soon as some (girl, color) cell is hit twice.
// Open edges with identical endpoints are interchangeable, so only the
// first of each kind is tried as a partner.
inline std::optional<Involution> brute_force_involution(
    const LabeledBigraph& g, const BruteForceOptions& options = {}) {
  g.validate();
  const int edges = g.edge_count();
  if (edges > options.max_edges)
    throw BudgetExceeded("brute_force_involution: too many edges", 0);
  const int n = g.left_size, k = g.right_size;
  if (edges != n * k) return std::nullopt;
  for (int d : g.left_degrees())
    if (d != k) return std::nullopt;
  for (int d : g.right_degrees())
    if (d != n) return std::nullopt;

  std::vector<char> hit(static_cast<std::size_t>(n) * k, 0);
  auto cell = [&](int girl, int color) -> char& {
    return hit[static_cast<std::size_t>(girl) * k + color];
  };
  std::vector<int> map(edges, -1);
  std::uint64_t nodes = 0;

  auto search = [&](auto&& self, int first) -> bool {
    if (++nodes > options.node_budget)
      throw BudgetExceeded("brute_force_involution: node budget", nodes);
    while (first < edges && map[first] >= 0) ++first;
    if (first == edges) return true;
    const auto [ue, ve] = g.edges[first];
    if (!cell(ue, ve)) {
      cell(ue, ve) = 1;
      map[first] = first;
      if (self(self, first + 1)) return true;
      map[first] = -1;
      cell(ue, ve) = 0;
    }
    std::vector<std::pair<int, int>> tried;
    for (int f = first + 1; f < edges; ++f) {
      if (map[f] >= 0) continue;
      const auto [uf, vf] = g.edges[f];
      if (std::find(tried.begin(), tried.end(), g.edges[f]) != tried.end())
        continue;
      tried.push_back(g.edges[f]);
      // e receives girl uf, f receives girl ue.
      if (cell(uf, ve) || cell(ue, vf) || (uf == ue && ve == vf)) continue;
      cell(uf, ve) = cell(ue, vf) = 1;
      map[first] = f;
      map[f] = first;
      if (self(self, first + 1)) return true;
      map[first] = map[f] = -1;
      cell(uf, ve) = cell(ue, vf) = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return Involution{map};
}

struct WeakBallsVerdict {
  bool holds = false;
  LoopMatchingResult matching;  // matching, or the Tutte obstruction
};

// Perfect matching (loops allowed) in the loop multigraph of the cell
// product of b in B(n, k).
inline WeakBallsVerdict verify_weak_balls(const WeightMatrix& b) {
  if (!b.in_bnk(b.rows, b.cols))
    throw PreconditionError("verify_weak_balls needs a member of B(n,k)");
  WeakBallsVerdict v;
  v.matching = perfect_matching_with_loops(as_loop_graph(symmetric_product(b)));
  v.holds = v.matching.success();
  return v;
}

enum class HigginsStatus { kVacuous, kHolds, kCounterexample };

inline std::string to_string(HigginsStatus s) {
  switch (s) {
    case HigginsStatus::kVacuous: return "vacuous";
    case HigginsStatus::kHolds: return "holds";
    case HigginsStatus::kCounterexample: return "counterexample";
  }
  return "?";
}

struct HigginsVerdict {
  HigginsStatus status = HigginsStatus::kVacuous;
  BipartiteMatching bipartite;   // on the double cover
  LoopMatchingResult ordinary;   // only when the bipartite one is perfect
};

// Binary m: if the double cover of the cell product has a perfect matching,
// the ordinary graph with loops must have one too.
inline HigginsVerdict verify_higgins(const WeightMatrix& m) {
  if (!m.binary() || m.rows < 1 || m.cols < 1)
    throw PreconditionError("verify_higgins needs a non-empty binary matrix");
  const auto product = symmetric_product(m);
  HigginsVerdict v;
  v.bipartite = max_bipartite_matching(double_cover(product));
  if (!v.bipartite.left_perfect()) return v;
  v.ordinary = perfect_matching_with_loops(as_loop_graph(product));
  v.status = v.ordinary.success() ? HigginsStatus::kHolds
                                  : HigginsStatus::kCounterexample;
  return v;
}

// Hall coefficient of the double cover of the cell product; equals 1 for
// every member of B(n, k).
inline HallValue verify_equivalence_direction(const WeightMatrix& b,
                                              int max_left = 20) {
  if (!b.in_bnk(b.rows, b.cols))
    throw PreconditionError("verify_equivalence_direction needs B(n,k)");
  return hall_coefficient(double_cover(symmetric_product(b)), max_left);
}

// Edges leaving the zero-cell set V1 in the cell product: n k t - lhs.
inline std::int64_t cut_size(const WeightMatrix& b, const std::vector<Cell>& cells) {
  for (const auto& [x, y] : cells) {
    if (x < 0 || x >= b.rows || y < 0 || y >= b.cols)
      throw PreconditionError("cell outside the matrix");
    if (b(x, y) != 0) throw PreconditionError("cut_size needs zero cells");
  }
  std::int64_t lhs = 0;
  for (const auto& [xi, yi] : cells)
    for (const auto& [xj, yj] : cells) lhs += b(xi, yj) * b(xj, yi);
  return std::int64_t{b.rows} * b.cols * static_cast<std::int64_t>(cells.size()) -
         lhs;
}

// Same quantity counted edge by edge in the product multigraph.
inline std::int64_t direct_cut_count(const WeightMatrix& b,
                                     const std::vector<Cell>& cells) {
  const auto p = symmetric_product(b);
  std::vector<char> inside(p.size(), 0);
  for (const auto& [x, y] : cells) inside[p.cell(x, y)] = 1;
  std::int64_t out = 0;
  for (int a = 0; a < p.size(); ++a)
    if (inside[a])
      for (int c = 0; c < p.size(); ++c)
        if (!inside[c]) out += p.data(a, c);
  return out;
}

}  // namespace bireg
