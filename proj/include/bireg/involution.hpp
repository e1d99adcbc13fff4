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

// Swap involutions and four-part bijections built from wind colorings.
//
// Given a coloring w with [w, v] all-ones, an involution iota with
// u(iota(e)) = alpha(w(e)) yields [u o iota, v] = alpha [w, v] = all-ones.
// Such an iota exists iff the bucket sizes N = [u, w] satisfy
// N(i, f) = N(alpha(f), alpha^-1(i)); bucket (i, f) is then paired
// positionally with bucket (alpha(f), alpha^-1(i)).

#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "bireg/coloring.hpp"
#include "bireg/core.hpp"
#include "bireg/matching.hpp"

namespace bireg {

// Edges grouped by (girl, color); lists ascending.
struct BucketTable {
  WeightMatrix counts;  // = [u, w]
  std::vector<std::vector<int>> lists;

  const std::vector<int>& bucket(int girl, int color) const {
    return lists[static_cast<std::size_t>(girl) * counts.cols + color];
  }
};

inline BucketTable build_buckets(const LabeledBigraph& g, const Coloring& w) {
  BucketTable t{left_color_degrees(g, w), {}};
  t.lists.resize(static_cast<std::size_t>(g.left_size) * w.palette);
  for (int e = 0; e < g.edge_count(); ++e)
    t.lists[static_cast<std::size_t>(g.edges[e].first) * w.palette +
            w.colors[e]]
        .push_back(e);
  return t;
}

// N(i, f) == N(alpha(f), alpha^-1(i)) for every girl i and color f.
inline bool alpha_condition(const WeightMatrix& counts, const Permutation& alpha) {
  if (counts.rows != counts.cols || alpha.size() != counts.rows ||
      !alpha.valid())
    return false;
  const auto inv = alpha.inverse();
  for (int i = 0; i < counts.rows; ++i)
    for (int f = 0; f < counts.cols; ++f)
      if (counts(i, f) != counts(alpha(f), inv(i))) return false;
  return true;
}

// Girls and colors along a single 2-regular exceptional cycle: girl[t] is
// adjacent to color[t - 1] and color[t]. nullopt unless the graph is one
// cycle through every vertex.
struct CycleWalk {
  std::vector<int> rows;
  std::vector<int> cols;
};

inline std::optional<CycleWalk> walk_cycle(const WeightMatrix& e) {
  const int n = e.rows;
  if (n == 0 || e.cols != n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (e.row_sum(i) != 2 || e.col_sum(i) != 2) return std::nullopt;
  CycleWalk walk;
  int girl = 0, prev_color = -1;
  for (int step = 0; step < n; ++step) {
    walk.rows.push_back(girl);
    int color = -1;
    for (int c = 0; c < n; ++c)
      if (e(girl, c) && c != prev_color) {
        color = c;
        break;
      }
    walk.cols.push_back(color);
    int next = -1;
    for (int i = 0; i < n; ++i)
      if (e(i, color) && i != girl) next = i;
    prev_color = color;
    girl = next;
  }
  if (girl != walk.rows.front()) return std::nullopt;
  auto rows = walk.rows, cols = walk.cols;
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  for (int i = 0; i < n; ++i)
    if (rows[i] != i || cols[i] != i) return std::nullopt;
  return walk;
}

// A permutation alpha (colors -> girls) meeting alpha_condition. Structured
// candidates come first (identity, the exceptional matching, the dihedral
// maps of the exceptional cycle); every candidate is checked, and for
// n <= 8 all of S_n is searched before giving up.
inline Permutation find_alpha(const BucketTable& buckets,
                              const ExceptionalGraph& exceptional) {
  const auto& n_mat = buckets.counts;
  const int n = n_mat.rows;
  if (n_mat.cols != n) throw PreconditionError("find_alpha needs a square [u,w]");
  std::vector<Permutation> candidates{Permutation::identity(n)};
  const int reg = exceptional.regularity();
  if (reg == 1) {
    Permutation a = Permutation::identity(n);
    for (int f = 0; f < n; ++f)
      for (int i = 0; i < n; ++i)
        if (exceptional.edges(i, f)) a.map[f] = i;
    candidates.push_back(a);
  } else if (reg == 2) {
    if (auto walk = walk_cycle(exceptional.edges)) {
      // girl rows[t] meets cols[t - 1] and cols[t]; map cols[j] to
      // rows[(shift -/+ j) mod n].
      for (int shift = 0; shift < n; ++shift)
        for (int dir : {-1, 1}) {
          Permutation a = Permutation::identity(n);
          for (int j = 0; j < n; ++j)
            a.map[walk->cols[j]] = walk->rows[((shift + dir * j) % n + n) % n];
          candidates.push_back(a);
        }
    }
  }
  for (const auto& a : candidates)
    if (alpha_condition(n_mat, a)) return a;
  if (n <= 8) {
    Permutation a = Permutation::identity(n);
    do {
      if (alpha_condition(n_mat, a)) return a;
    } while (std::next_permutation(a.map.begin(), a.map.end()));
  }
  throw LemmaViolation("no alpha satisfies the bucket pairing condition",
                       nlohmann::json{{"n", n}, {"counts", n_mat.data}});
}

// Bucket (i, f) is mapped index-by-index onto bucket (alpha(f), alpha^-1(i)).
// A self-paired bucket (i == alpha(f)) pairs first with last inward and
// leaves its middle element fixed when its size is odd.
inline Involution pair_buckets(const BucketTable& buckets,
                               const Permutation& alpha) {
  if (!alpha_condition(buckets.counts, alpha))
    throw PreconditionError("alpha does not satisfy the pairing condition");
  const int n = buckets.counts.rows;
  const auto inv = alpha.inverse();
  int edges = 0;
  for (const auto& l : buckets.lists) edges += static_cast<int>(l.size());
  Involution iota = Involution::identity(edges);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < n; ++f) {
      const auto& mine = buckets.bucket(i, f);
      const int pi = alpha(f), pf = inv(i);
      if (pi == i && pf == f) {
        for (std::size_t a = 0, b = mine.size(); a + 1 < b; ++a, --b) {
          iota.map[mine[a]] = mine[b - 1];
          iota.map[mine[b - 1]] = mine[a];
        }
      } else {
        const auto& theirs = buckets.bucket(pi, pf);
        if (theirs.size() != mine.size())
          throw PreconditionError("paired buckets differ in size");
        for (std::size_t p = 0; p < mine.size(); ++p)
          iota.map[mine[p]] = theirs[p];
      }
    }
  return iota;
}

// [u o iota, v] == all-ones, the target identity.
inline bool swaps_to_uniform(const LabeledBigraph& g, const Involution& iota) {
  if (!iota.valid() || iota.size() != g.edge_count()) return false;
  return bracket(apply_involution(g, iota)) ==
         WeightMatrix(g.left_size, g.right_size, 1);
}

// n = k: fill an n x n board column by column with Koenig matchings of the
// residual girl x color multigraph; transposing the board is the
// involution, fixing the n diagonal balls.
inline Involution board_method(const LabeledBigraph& g) {
  g.validate();
  if (g.left_size != g.right_size || !g.in_ank())
    throw PreconditionError("board_method needs an instance with n = k");
  const int n = g.left_size;
  // Unused edge ids per (girl, color), ascending.
  std::vector<std::vector<int>> pool(static_cast<std::size_t>(n) * n);
  for (int e = g.edge_count() - 1; e >= 0; --e)
    pool[static_cast<std::size_t>(g.edges[e].first) * n + g.edges[e].second]
        .push_back(e);
  BipGraph residual = bracket(g);
  std::vector<int> board(static_cast<std::size_t>(n) * n);
  for (int col = 0; col < n; ++col) {
    const auto pi = konig_perfect_matching(residual);
    for (int girl = 0; girl < n; ++girl) {
      auto& p = pool[static_cast<std::size_t>(girl) * n + pi(girl)];
      board[static_cast<std::size_t>(girl) * n + col] = p.back();
      p.pop_back();
      --residual(girl, pi(girl));
    }
  }
  Involution iota = Involution::identity(g.edge_count());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      iota.map[board[static_cast<std::size_t>(r) * n + c]] =
          board[static_cast<std::size_t>(c) * n + r];
  return iota;
}

// Which constructive route applies to (n, k).
struct BallsRoute {
  enum class Kind { kWind, kSix } kind = Kind::kWind;
  WindParameters params;
};

// k = m n + eps with |eps| <= 2 and |eps| < n (smallest |eps|, ties to the
// positive side), else n = 6 with k = 6m + 3. A forced eps is honored when
// it is admissible.
inline BallsRoute covered_route(int n, int k,
                                std::optional<int> forced_epsilon = {}) {
  if (n < 1 || k < 1) throw PreconditionError("n, k must be positive");
  auto admissible = [&](int eps) {
    return std::abs(eps) <= 2 && std::abs(eps) < n && (k - eps) % n == 0 &&
           (k - eps) / n >= 0 && (eps >= 0 || (k - eps) / n >= 1);
  };
  if (forced_epsilon) {
    if (!admissible(*forced_epsilon))
      throw UncoveredParameters("requested eps is not admissible for (n,k)");
    return {BallsRoute::Kind::kWind,
            WindParameters{(k - *forced_epsilon) / n, *forced_epsilon}};
  }
  for (int eps : {0, 1, -1, 2, -2})
    if (admissible(eps))
      return {BallsRoute::Kind::kWind, WindParameters{(k - eps) / n, eps}};
  if (n == 6 && k % 6 == 3 && k >= 9)
    return {BallsRoute::Kind::kSix, WindParameters{(k - 3) / 6, 3}};
  throw UncoveredParameters("(n,k) = (" + std::to_string(n) + "," +
                            std::to_string(k) + ") is not a covered class");
}

inline bool is_covered(int n, int k) {
  try {
    covered_route(n, k);
    return true;
  } catch (const UncoveredParameters&) {
    return false;
  }
}

struct BallsOptions {
  std::optional<int> epsilon;  // force a representation k = m n + eps
  bool board_for_square = false;
};

struct BallsSolution {
  Involution iota;
  std::string method;  // "wind", "wind-hamiltonian", "six", "board"
  std::optional<WindParameters> params;
  std::optional<Coloring> coloring;
  std::optional<Permutation> alpha;
};

inline BallsSolution solve_balls(const LabeledBigraph& g,
                                 const BallsOptions& options = {}) {
  g.validate();
  if (!g.in_ank())
    throw PreconditionError("solve_balls needs a biregular instance with nk edges");
  BallsSolution out;
  if (options.board_for_square && g.left_size == g.right_size) {
    out.iota = board_method(g);
    out.method = "board";
  } else {
    const auto route = covered_route(g.left_size, g.right_size, options.epsilon);
    Coloring w;
    ExceptionalGraph ex;
    if (route.kind == BallsRoute::Kind::kSix) {
      auto six = six_coloring(g);
      w = std::move(six.coloring);
      ex = std::move(six.exceptional);
      out.method = "six";
    } else {
      auto wind = wind_coloring(g, route.params);
      w = std::move(wind.coloring);
      ex = std::move(wind.exceptional);
      out.method = "wind";
      if (std::abs(route.params.epsilon) == 2) {
        auto ham = make_hamiltonian(g, w, route.params);
        w = std::move(ham.coloring);
        ex = std::move(ham.exceptional);
        out.method = "wind-hamiltonian";
      }
    }
    const auto buckets = build_buckets(g, w);
    const auto alpha = find_alpha(buckets, ex);
    out.iota = pair_buckets(buckets, alpha);
    out.params = route.params;
    out.coloring = std::move(w);
    out.alpha = alpha;
  }
  if (!swaps_to_uniform(g, out.iota))
    throw LemmaViolation("constructed involution does not reach all-ones",
                         nlohmann::json{{"involution", out.iota.map},
                                        {"method", out.method}});
  return out;
}

// ---------------------------------------------------------------------------
// Four parts.

struct FourPartsSolution {
  std::vector<int> psi;  // E1 -> E2
  Coloring w1;           // E1 -> L2
  Coloring w2;           // E2 -> L1
  Permutation sigma1;    // of L1
  Permutation sigma2;    // of L2
  WindParameters params;
};

// Both identities [u2 o psi, v1] = W(L2, R1), [u1 o psi^-1, v2] = W(L1, R2).
inline bool four_parts_holds(const LabeledBigraph& g1, const LabeledBigraph& g2,
                             const std::vector<int>& psi) {
  if (static_cast<int>(psi.size()) != g1.edge_count() ||
      g1.edge_count() != g2.edge_count() || !Permutation{psi}.valid())
    return false;
  const auto inv = Permutation{psi}.inverse();
  const auto lhs = bracket_pair(pull_back_left(g2, psi), g2.left_size,
                                g1.right_labels(), g1.right_size);
  const auto rhs = bracket_pair(pull_back_left(g1, inv.map), g1.left_size,
                                g2.right_labels(), g2.right_size);
  return lhs == WeightMatrix(g2.left_size, g1.right_size, 1) &&
         rhs == WeightMatrix(g1.left_size, g2.right_size, 1);
}

namespace detail {

// (tau, sigma) with e1(i, f) == e2t(tau(i), sigma(f)) for exceptional
// graphs that are empty, perfect matchings or single cycles.
inline std::optional<std::pair<Permutation, Permutation>> align_exceptional(
    const WeightMatrix& e1, const WeightMatrix& e2t) {
  const int rows = e1.rows, cols = e1.cols;
  auto tau = Permutation::identity(rows), sigma = Permutation::identity(cols);
  const auto total = e1.total();
  if (total != e2t.total() || rows != e2t.rows || cols != e2t.cols)
    return std::nullopt;
  if (total == 0) return std::pair{tau, sigma};
  if (total == rows && rows == cols) {
    for (int i = 0; i < rows; ++i)
      for (int f = 0; f < cols; ++f)
        if (e1(i, f))
          for (int g = 0; g < cols; ++g)
            if (e2t(i, g)) sigma.map[f] = g;
    if (!sigma.valid()) return std::nullopt;
    return std::pair{tau, sigma};
  }
  const auto w1 = walk_cycle(e1), w2 = walk_cycle(e2t);
  if (!w1 || !w2) return std::nullopt;
  for (int t = 0; t < rows; ++t) {
    tau.map[w1->rows[t]] = w2->rows[t];
    sigma.map[w1->cols[t]] = w2->cols[t];
  }
  return std::pair{tau, sigma};
}

}  // namespace detail

// Wind colorings w1: E1 -> L2, w2: E2 -> L1 whose exceptional graphs are
// isomorphic with fixed parts; bucket (i, f) of (u1, w1) goes
// index-by-index to bucket (sigma2(f), sigma1^-1(i)) of (u2, w2).
// Covered: n1 = n2, k1 = k2 with k = m n + eps, |eps| <= 2; or n1 | k1.
inline FourPartsSolution solve_4parts(const LabeledBigraph& g1,
                                      const LabeledBigraph& g2) {
  g1.validate();
  g2.validate();
  const int n1 = g1.left_size, k1 = g1.right_size;
  const int n2 = g2.left_size, k2 = g2.right_size;
  if (n1 * k2 != n2 * k1 || g1.edge_count() != n1 * k2 ||
      g2.edge_count() != n1 * k2 || !g1.biregular() || !g2.biregular())
    throw PreconditionError("solve_4parts needs biregular g1, g2 with "
                            "n1 k2 = n2 k1 = |E1| = |E2|");
  FourPartsSolution out;
  WindParameters p1, p2;
  if (k1 % n1 == 0) {
    const int m = k1 / n1;
    p1 = WindParameters{m, 0};  // left degree of g1 is k2 = m n2
    p2 = WindParameters{m, 0};  // left degree of g2 is k1 = m n1
  } else if (n1 == n2 && k1 == k2) {
    const auto route = covered_route(n1, k1);
    if (route.kind != BallsRoute::Kind::kWind)
      throw UncoveredParameters("four parts: (n,k) not covered");
    p1 = p2 = route.params;
  } else {
    throw UncoveredParameters("four parts: parameters not covered");
  }
  out.params = p1;
  auto c1 = wind_coloring(g1, n2, p1);
  auto c2 = wind_coloring(g2, n1, p2);
  if (std::abs(p1.epsilon) == 2) {
    auto h1 = make_hamiltonian(g1, c1.coloring, p1);
    auto h2 = make_hamiltonian(g2, c2.coloring, p2);
    c1 = {std::move(h1.coloring), std::move(h1.exceptional)};
    c2 = {std::move(h2.coloring), std::move(h2.exceptional)};
  }
  out.w1 = c1.coloring;
  out.w2 = c2.coloring;

  const auto aligned = detail::align_exceptional(c1.exceptional.edges,
                                                 c2.exceptional.edges.transposed());
  const auto b1 = build_buckets(g1, out.w1);
  const auto b2 = build_buckets(g2, out.w2);
  auto artifact = [&] {
    return nlohmann::json{{"counts1", b1.counts.data}, {"counts2", b2.counts.data}};
  };
  if (!aligned)
    throw LemmaViolation("exceptional graphs are not isomorphic", artifact());
  out.sigma1 = aligned->first.inverse();
  out.sigma2 = aligned->second;
  const auto s1_inv = aligned->first;
  for (int i = 0; i < n1; ++i)
    for (int f = 0; f < n2; ++f)
      if (b1.counts(i, f) != b2.counts(out.sigma2(f), s1_inv(i)))
        throw LemmaViolation("aligned buckets differ in size", artifact());

  out.psi.assign(g1.edges.size(), -1);
  for (int i = 0; i < n1; ++i)
    for (int f = 0; f < n2; ++f) {
      const auto& src = b1.bucket(i, f);
      const auto& dst = b2.bucket(out.sigma2(f), s1_inv(i));
      for (std::size_t p = 0; p < src.size(); ++p) out.psi[src[p]] = dst[p];
    }
  if (!four_parts_holds(g1, g2, out.psi))
    throw LemmaViolation("four-parts bijection fails a bracket identity",
                         artifact());
  return out;
}

}  // namespace bireg
