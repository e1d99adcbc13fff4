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

// Matching primitives: bipartite maximum matching with a Hall witness,
// Koenig factorization of regular bipartite multigraphs, the exact Hall
// coefficient, Edmonds' blossom algorithm for general graphs and the
// loop-aware perfect matching reduction.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "bireg/core.hpp"
#include "bireg/rational.hpp"

namespace bireg {

// Bipartite (multi)graph given by its left x right multiplicity matrix.
using BipGraph = WeightMatrix;

struct BipartiteMatching {
  std::vector<int> mate_left;   // -1 when unmatched
  std::vector<int> mate_right;  // -1 when unmatched
  int size = 0;
  // Non-empty iff the matching misses a left vertex; then |N(X)| < |X|.
  std::vector<int> deficient_set;

  bool left_perfect() const {
    return size == static_cast<int>(mate_left.size());
  }
};

namespace detail {

inline std::vector<std::vector<int>> left_adjacency(const BipGraph& g) {
  std::vector<std::vector<int>> adj(g.rows);
  for (int l = 0; l < g.rows; ++l)
    for (int r = 0; r < g.cols; ++r)
      if (g(l, r) > 0) adj[l].push_back(r);
  return adj;
}

inline bool kuhn_augment(int l, const std::vector<std::vector<int>>& adj,
                         std::vector<int>& mate_left,
                         std::vector<int>& mate_right,
                         std::vector<char>& seen) {
  for (int r : adj[l]) {
    if (seen[r]) continue;
    seen[r] = 1;
    if (mate_right[r] < 0 ||
        kuhn_augment(mate_right[r], adj, mate_left, mate_right, seen)) {
      mate_left[l] = r;
      mate_right[r] = l;
      return true;
    }
  }
  return false;
}

}  // namespace detail

inline BipartiteMatching max_bipartite_matching(const BipGraph& g) {
  const auto adj = detail::left_adjacency(g);
  BipartiteMatching m;
  m.mate_left.assign(g.rows, -1);
  m.mate_right.assign(g.cols, -1);
  for (int l = 0; l < g.rows; ++l) {
    std::vector<char> seen(g.cols, 0);
    if (detail::kuhn_augment(l, adj, m.mate_left, m.mate_right, seen)) ++m.size;
  }
  if (m.left_perfect()) return m;

  // Alternating search from the exposed left vertices. Every right vertex
  // it reaches is matched (no augmenting path remains), so the reached
  // left set X has |N(X)| = |X| - #exposed < |X|.
  std::vector<char> in_x(g.rows, 0), seen_r(g.cols, 0);
  std::queue<int> q;
  for (int l = 0; l < g.rows; ++l)
    if (m.mate_left[l] < 0) {
      in_x[l] = 1;
      q.push(l);
    }
  while (!q.empty()) {
    const int l = q.front();
    q.pop();
    for (int r : adj[l]) {
      if (seen_r[r]) continue;
      seen_r[r] = 1;
      const int next = m.mate_right[r];
      if (next >= 0 && !in_x[next]) {
        in_x[next] = 1;
        q.push(next);
      }
    }
  }
  for (int l = 0; l < g.rows; ++l)
    if (in_x[l]) m.deficient_set.push_back(l);
  return m;
}

// Right neighbourhood of a set of left vertices.
inline std::vector<int> neighborhood(const BipGraph& g,
                                     const std::vector<int>& left_set) {
  std::vector<char> hit(g.cols, 0);
  for (int l : left_set)
    for (int r = 0; r < g.cols; ++r)
      if (g(l, r) > 0) hit[r] = 1;
  std::vector<int> out;
  for (int r = 0; r < g.cols; ++r)
    if (hit[r]) out.push_back(r);
  return out;
}

// Common degree of a regular square multigraph, or nullopt.
inline std::optional<std::int64_t> regular_degree(const BipGraph& g) {
  if (g.rows != g.cols || g.rows == 0 || !g.non_negative()) return std::nullopt;
  const std::int64_t d = g.row_sum(0);
  for (int i = 0; i < g.rows; ++i)
    if (g.row_sum(i) != d || g.col_sum(i) != d) return std::nullopt;
  return d;
}

// Perfect matching of a d-regular bipartite multigraph (d >= 1) as a
// permutation left -> right.
inline Permutation konig_perfect_matching(const BipGraph& g) {
  const auto d = regular_degree(g);
  if (!d || *d < 1)
    throw PreconditionError("konig_perfect_matching needs a regular square "
                            "multigraph of positive degree");
  const auto m = max_bipartite_matching(g);
  if (!m.left_perfect())
    throw LemmaViolation("regular bipartite multigraph without a perfect "
                         "matching",
                         nlohmann::json{{"rows", g.rows}, {"data", g.data}});
  return Permutation{m.mate_left};
}

// Splits a d-regular square multigraph into d perfect matchings whose
// permutation matrices sum to g.
inline std::vector<Permutation> konig_factorize(const BipGraph& g) {
  const auto d = regular_degree(g);
  if (!d) throw PreconditionError("konig_factorize needs a regular multigraph");
  BipGraph residual = g;
  std::vector<Permutation> out;
  for (std::int64_t step = 0; step < *d; ++step) {
    Permutation p = konig_perfect_matching(residual);
    for (int i = 0; i < p.size(); ++i) --residual(i, p(i));
    out.push_back(std::move(p));
  }
  return out;
}

struct HallValue {
  Rational value;
  std::vector<int> witness;  // ascending left vertex ids
};

// h(G) = min over non-empty X of |N(X)| / |X|, by full subset scan.
// Ties prefer smaller |X|, then the lexicographically smaller X.
inline HallValue hall_coefficient(const BipGraph& g, int max_left = 20) {
  if (g.rows < 1 || g.cols < 1)
    throw PreconditionError("hall_coefficient needs non-empty parts");
  if (g.rows > max_left || g.rows > 30)
    throw BudgetExceeded("hall_coefficient subset scan over budget", 0);
  const int words = (g.cols + 63) / 64;
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(g.rows) * words, 0);
  for (int l = 0; l < g.rows; ++l)
    for (int r = 0; r < g.cols; ++r)
      if (g(l, r) > 0) nbr[l * words + r / 64] |= std::uint64_t{1} << (r % 64);

  auto members = [](std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
      if (mask & 1u) out.push_back(i);
    return out;
  };

  std::vector<std::uint64_t> acc(words);
  std::int64_t best_num = 0, best_den = 0;
  std::uint32_t best_mask = 0;
  const std::uint32_t limit = std::uint32_t{1} << g.rows;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const int l = std::countr_zero(rest);
      for (int w = 0; w < words; ++w) acc[w] |= nbr[l * words + w];
    }
    std::int64_t num = 0;
    for (auto w : acc) num += std::popcount(w);
    const std::int64_t den = std::popcount(mask);
    bool better = best_den == 0;
    if (!better) {
      const std::int64_t lhs = num * best_den, rhs = best_num * den;
      if (lhs != rhs) {
        better = lhs < rhs;
      } else if (den != best_den) {
        better = den < best_den;
      } else {
        const auto a = members(mask), b = members(best_mask);
        better = std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                              b.end());
      }
    }
    if (better) {
      best_num = num;
      best_den = den;
      best_mask = mask;
    }
  }
  return HallValue{Rational(best_num, best_den), members(best_mask)};
}

// Undirected multigraph on [0, size) with loops on the diagonal.
struct LoopGraph {
  int size = 0;
  WeightMatrix adjacency;  // symmetric, size x size

  LoopGraph() = default;
  explicit LoopGraph(int n) : size(n), adjacency(n, n) {}
  explicit LoopGraph(WeightMatrix adj)
      : size(adj.rows), adjacency(std::move(adj)) {
    if (adjacency.rows != adjacency.cols)
      throw PreconditionError("loop graph adjacency must be square");
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        if (adjacency(a, b) != adjacency(b, a) || adjacency(a, b) < 0)
          throw PreconditionError("loop graph adjacency must be symmetric "
                                  "and non-negative");
  }

  bool has_loop(int v) const { return adjacency(v, v) > 0; }
  bool adjacent(int a, int b) const { return adjacency(a, b) > 0; }

  void add_edge(int a, int b, std::int64_t mult = 1) {
    adjacency(a, b) += mult;
    if (a != b) adjacency(b, a) += mult;
  }
};

// Loop-free simple graph as adjacency lists.
using SimpleGraph = std::vector<std::vector<int>>;

namespace detail {

// Edmonds' blossom algorithm, one BFS per exposed vertex.
class Blossom {
 public:
  explicit Blossom(const SimpleGraph& adj)
      : n_(static_cast<int>(adj.size())), adj_(adj) {}

  std::vector<int> run() {
    match_.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        const int pv = parent_[u];
        const int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> on_path(n_, 0);
    for (;;) {
      a = base_[a];
      on_path[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    std::vector<int> queue;
    queue.reserve(n_);
    used_[root] = 1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  const SimpleGraph& adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

inline int matching_size(const std::vector<int>& mate) {
  int c = 0;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) c += mate[v] > v;
  return c;
}

inline SimpleGraph without_vertex(const SimpleGraph& g, int removed) {
  SimpleGraph out(g.size());
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    if (v == removed) continue;
    for (int w : g[v])
      if (w != removed) out[v].push_back(w);
  }
  return out;
}

// Gallai-Edmonds: D = vertices missed by some maximum matching, A = N(D)\D.
// G - A has exactly |A| + deficiency odd components drawn from D.
inline std::vector<int> tutte_berge_set(const SimpleGraph& g) {
  const int n = static_cast<int>(g.size());
  const int nu = matching_size(Blossom(g).run());
  std::vector<char> in_d(n, 0);
  for (int v = 0; v < n; ++v) {
    // v is inessential iff removing it keeps the matching number.
    in_d[v] = matching_size(Blossom(without_vertex(g, v)).run()) == nu;
  }
  std::vector<char> in_a(n, 0);
  for (int v = 0; v < n; ++v)
    if (in_d[v])
      for (int w : g[v])
        if (!in_d[w]) in_a[w] = 1;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (in_a[v]) out.push_back(v);
  return out;
}

}  // namespace detail

// Simple loop-free graph from a LoopGraph: multiplicities collapse to 0/1
// and loops are dropped.
inline SimpleGraph simple_part(const LoopGraph& g) {
  SimpleGraph adj(g.size);
  for (int a = 0; a < g.size; ++a)
    for (int b = 0; b < g.size; ++b)
      if (a != b && g.adjacent(a, b)) adj[a].push_back(b);
  return adj;
}

// Perfect matching of a loop-free graph as a mate array, or nullopt.
inline std::optional<std::vector<int>> general_perfect_matching(
    const SimpleGraph& g) {
  auto mate = detail::Blossom(g).run();
  if (2 * detail::matching_size(mate) != static_cast<int>(g.size()))
    return std::nullopt;
  return mate;
}

// Number of odd connected components of g - removed that carry no loop.
inline int odd_loop_free_components(const LoopGraph& g,
                                    const std::vector<int>& removed) {
  std::vector<char> gone(g.size, 0);
  for (int v : removed) gone.at(v) = 1;
  std::vector<char> seen(g.size, 0);
  int count = 0;
  for (int s = 0; s < g.size; ++s) {
    if (gone[s] || seen[s]) continue;
    int verts = 0;
    bool loop = false;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++verts;
      loop = loop || g.has_loop(v);
      for (int w = 0; w < g.size; ++w)
        if (!gone[w] && !seen[w] && w != v && g.adjacent(v, w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (!loop && verts % 2 == 1) ++count;
  }
  return count;
}

struct LoopMatchingResult {
  // Vertex involution: theta(v) = v uses the loop at v.
  std::optional<Involution> matching;
  // Set U with more than |U| odd loop-free components in G - U.
  std::vector<int> obstruction;
  int odd_components = 0;

  bool success() const { return matching.has_value(); }
};

// Perfect matching where loops may cover single vertices. Loop vertices are
// joined to a clique of l or l + 1 new vertices (total made even), loops are
// removed, and a general perfect matching is sought. On failure the Tutte
// set of the augmented graph, with the new vertices stripped, is a
// deficiency witness for the original graph.
inline LoopMatchingResult perfect_matching_with_loops(const LoopGraph& g) {
  std::vector<int> loops;
  for (int v = 0; v < g.size; ++v)
    if (g.has_loop(v)) loops.push_back(v);
  const int l = static_cast<int>(loops.size());
  const int extra = (g.size + l) % 2 == 0 ? l : l + 1;
  const int total = g.size + extra;

  SimpleGraph aug = simple_part(g);
  aug.resize(total);
  for (int a = g.size; a < total; ++a) {
    for (int b = g.size; b < total; ++b)
      if (a != b) aug[a].push_back(b);
    for (int v : loops) {
      aug[a].push_back(v);
      aug[v].push_back(a);
    }
  }

  LoopMatchingResult result;
  if (auto mate = general_perfect_matching(aug)) {
    Involution theta = Involution::identity(g.size);
    for (int v = 0; v < g.size; ++v)
      theta.map[v] = (*mate)[v] < g.size ? (*mate)[v] : v;
    result.matching = std::move(theta);
    return result;
  }

  for (int v : detail::tutte_berge_set(aug))
    if (v < g.size) result.obstruction.push_back(v);
  result.odd_components = odd_loop_free_components(g, result.obstruction);
  if (result.odd_components <= static_cast<int>(result.obstruction.size())) {
    throw LemmaViolation(
        "no perfect matching but the stripped Tutte set is not a witness",
        nlohmann::json{{"size", g.size},
                       {"adjacency", g.adjacency.data},
                       {"set", result.obstruction}});
  }
  return result;
}

}  // namespace bireg
