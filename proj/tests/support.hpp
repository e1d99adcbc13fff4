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

// Independent oracles and random fixtures shared by the test suites. The
// oracles are deliberately naive: plain recursion over every choice, no
// pruning shared with the library.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "bireg/core.hpp"
#include "bireg/matching.hpp"
#include "bireg/random.hpp"
#include "bireg/rational.hpp"

namespace bireg::testing {

// Number of n x k non-negative integer matrices with row sums k and column
// sums n, counted row by row over compositions of k.
inline std::uint64_t count_bnk(int n, int k) {
  std::function<std::uint64_t(int, std::vector<int>&)> rows =
      [&](int r, std::vector<int>& cap) -> std::uint64_t {
    if (r == n) {
      for (int c : cap)
        if (c != 0) return 0;
      return 1;
    }
    std::uint64_t total = 0;
    std::function<void(int, int)> place = [&](int c, int left) {
      if (c == k) {
        if (left == 0) total += rows(r + 1, cap);
        return;
      }
      for (int v = 0; v <= std::min(left, cap[c]); ++v) {
        cap[c] -= v;
        place(c + 1, left - v);
        cap[c] += v;
      }
    };
    place(0, k);
    return total;
  };
  std::vector<int> cap(k, n);
  return rows(0, cap);
}

// Maximum matching size by trying every assignment of each left vertex.
inline int brute_max_matching(const BipGraph& g) {
  std::vector<char> used(g.cols, 0);
  std::function<int(int)> go = [&](int l) -> int {
    if (l == g.rows) return 0;
    int best = go(l + 1);
    for (int r = 0; r < g.cols; ++r)
      if (g(l, r) > 0 && !used[r]) {
        used[r] = 1;
        best = std::max(best, 1 + go(l + 1));
        used[r] = 0;
      }
    return best;
  };
  return go(0);
}

// min |N(X)| / |X| over non-empty X, by listing every subset.
inline Rational brute_hall(const BipGraph& g) {
  std::optional<Rational> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.rows); ++mask) {
    std::set<int> nbrs;
    int size = 0;
    for (int l = 0; l < g.rows; ++l)
      if (mask >> l & 1) {
        ++size;
        for (int r = 0; r < g.cols; ++r)
          if (g(l, r) > 0) nbrs.insert(r);
      }
    const Rational v(static_cast<std::int64_t>(nbrs.size()), size);
    if (!best || v < *best) best = v;
  }
  return *best;
}

// Does a perfect matching exist when a loop may cover its own vertex?
inline bool brute_loop_matching(const LoopGraph& g) {
  std::vector<char> done(g.size, 0);
  std::function<bool()> go = [&]() -> bool {
    int v = 0;
    while (v < g.size && done[v]) ++v;
    if (v == g.size) return true;
    done[v] = 1;
    if (g.adjacency(v, v) > 0 && go()) return true;
    for (int w = v + 1; w < g.size; ++w)
      if (!done[w] && g.adjacency(v, w) > 0) {
        done[w] = 1;
        if (go()) return true;
        done[w] = 0;
      }
    done[v] = 0;
    return false;
  };
  return go();
}

inline bool brute_perfect_matching(const SimpleGraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<char> done(n, 0);
  std::function<bool()> go = [&]() -> bool {
    int v = 0;
    while (v < n && done[v]) ++v;
    if (v == n) return true;
    done[v] = 1;
    for (int w : g[v])
      if (!done[w]) {
        done[w] = 1;
        if (go()) return true;
        done[w] = 0;
      }
    done[v] = 0;
    return false;
  };
  return go();
}

inline BipGraph random_bipartite(Rng& rng, int rows, int cols, double density,
                                 int max_mult = 1) {
  BipGraph g(rows, cols);
  for (auto& x : g.data) x = rng.chance(density) ? rng.range(1, max_mult) : 0;
  return g;
}

inline LoopGraph random_loop_graph(Rng& rng, int size, double edge_p, double loop_p) {
  WeightMatrix a(size, size);
  for (int v = 0; v < size; ++v) {
    a(v, v) = rng.chance(loop_p) ? 1 : 0;
    for (int w = v + 1; w < size; ++w) a(v, w) = a(w, v) = rng.chance(edge_p) ? 1 : 0;
  }
  return LoopGraph(a);
}

inline SimpleGraph random_simple_graph(Rng& rng, int size, double p) {
  SimpleGraph g(size);
  for (int v = 0; v < size; ++v)
    for (int w = v + 1; w < size; ++w)
      if (rng.chance(p)) {
        g[v].push_back(w);
        g[w].push_back(v);
      }
  return g;
}

// Multigraph as an edge list: random endpoints.
inline LabeledBigraph random_multigraph(Rng& rng, int left, int right, int edges) {
  LabeledBigraph g{left, right, {}};
  for (int e = 0; e < edges; ++e)
    g.edges.emplace_back(rng.range(0, left - 1), rng.range(0, right - 1));
  return g;
}

// Recount of [u o iota, v] with plain loops.
inline bool all_ones_after(const LabeledBigraph& g, const std::vector<int>& iota) {
  if (iota.size() != g.edges.size()) return false;
  std::vector<int> count(static_cast<std::size_t>(g.left_size) * g.right_size, 0);
  for (std::size_t e = 0; e < iota.size(); ++e) {
    if (iota[e] < 0 || iota[e] >= static_cast<int>(iota.size())) return false;
    if (iota[iota[e]] != static_cast<int>(e)) return false;
    ++count[g.edges[iota[e]].first * g.right_size + g.edges[e].second];
  }
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

}  // namespace bireg::testing
