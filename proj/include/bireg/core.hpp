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

// Data model for bipartite labeled multigraphs: edge lists, bracket
// (weight) matrices, permutations and involutions of the edge set, and
// enumeration of the matrices with prescribed row and column sums.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bireg/errors.hpp"

namespace bireg {

// Non-negative integer matrix stored row-major. Used for bracket matrices,
// bipartite multiplicity matrices and members of B(n, k).
struct WeightMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  WeightMatrix() = default;
  WeightMatrix(int r, int c, std::int64_t fill = 0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {
    if (r < 0 || c < 0) throw PreconditionError("negative matrix dimension");
  }

  std::int64_t& operator()(int r, int c) {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
  std::int64_t operator()(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }

  std::int64_t row_sum(int r) const {
    std::int64_t s = 0;
    for (int c = 0; c < cols; ++c) s += (*this)(r, c);
    return s;
  }
  std::int64_t col_sum(int c) const {
    std::int64_t s = 0;
    for (int r = 0; r < rows; ++r) s += (*this)(r, c);
    return s;
  }
  std::int64_t total() const {
    return std::accumulate(data.begin(), data.end(), std::int64_t{0});
  }

  WeightMatrix transposed() const {
    WeightMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool non_negative() const {
    return std::all_of(data.begin(), data.end(),
                       [](std::int64_t x) { return x >= 0; });
  }

  bool binary() const {
    return std::all_of(data.begin(), data.end(),
                       [](std::int64_t x) { return x == 0 || x == 1; });
  }

  // Membership in B(n, k): n x k, row sums k, column sums n.
  bool in_bnk(int n, int k) const {
    if (rows != n || cols != k || !non_negative()) return false;
    for (int r = 0; r < rows; ++r)
      if (row_sum(r) != k) return false;
    for (int c = 0; c < cols; ++c)
      if (col_sum(c) != n) return false;
    return true;
  }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;
};

// (L, R, E, u, v) with L = [0, left_size), R = [0, right_size) and E the
// index range of `edges`. Parallel edges are repeated pairs.
struct LabeledBigraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }

  std::vector<int> left_labels() const {
    std::vector<int> out(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) out[e] = edges[e].first;
    return out;
  }
  std::vector<int> right_labels() const {
    std::vector<int> out(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) out[e] = edges[e].second;
    return out;
  }

  std::vector<int> left_degrees() const {
    std::vector<int> d(left_size, 0);
    for (const auto& [l, r] : edges) ++d[l];
    return d;
  }
  std::vector<int> right_degrees() const {
    std::vector<int> d(right_size, 0);
    for (const auto& [l, r] : edges) ++d[r];
    return d;
  }

  void validate() const {
    if (left_size <= 0 || right_size <= 0)
      throw PreconditionError("parts must be non-empty");
    for (const auto& [l, r] : edges) {
      if (l < 0 || l >= left_size || r < 0 || r >= right_size)
        throw PreconditionError("edge endpoint out of range");
    }
  }

  // All left degrees equal and all right degrees equal.
  bool biregular() const {
    if (left_size <= 0 || right_size <= 0) return false;
    const int e = edge_count();
    if (e % left_size != 0 || e % right_size != 0) return false;
    const auto ld = left_degrees();
    const auto rd = right_degrees();
    return std::all_of(ld.begin(), ld.end(),
                       [&](int d) { return d == e / left_size; }) &&
           std::all_of(rd.begin(), rd.end(),
                       [&](int d) { return d == e / right_size; });
  }

  // Member of A(n, k): biregular with n * k edges.
  bool in_ank() const {
    return edge_count() == left_size * right_size && biregular();
  }

  friend bool operator==(const LabeledBigraph&,
                         const LabeledBigraph&) = default;
};

// Bijection on [0, size).
struct Permutation {
  std::vector<int> map;

  static Permutation identity(int size) {
    Permutation p;
    p.map.resize(size);
    std::iota(p.map.begin(), p.map.end(), 0);
    return p;
  }

  int size() const { return static_cast<int>(map.size()); }
  int operator()(int i) const { return map[i]; }

  bool valid() const {
    std::vector<char> seen(map.size(), 0);
    for (int x : map) {
      if (x < 0 || x >= size() || seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation inv;
    inv.map.resize(map.size());
    for (int i = 0; i < size(); ++i) inv.map[map[i]] = i;
    return inv;
  }

  // (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const {
    Permutation out;
    out.map.resize(other.map.size());
    for (int i = 0; i < other.size(); ++i) out.map[i] = map[other.map[i]];
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

// Self-inverse permutation of the edge set; fixed points allowed.
struct Involution {
  std::vector<int> map;

  static Involution identity(int size) {
    return Involution{Permutation::identity(size).map};
  }

  int size() const { return static_cast<int>(map.size()); }
  int operator()(int i) const { return map[i]; }

  bool valid() const {
    for (int i = 0; i < size(); ++i) {
      const int j = map[i];
      if (j < 0 || j >= size() || map[j] != i) return false;
    }
    return true;
  }

  int fixed_points() const {
    int c = 0;
    for (int i = 0; i < size(); ++i) c += map[i] == i;
    return c;
  }

  friend bool operator==(const Involution&, const Involution&) = default;
};

// [f, h]: entry (a, b) counts indices e with f(e) = a and h(e) = b.
inline WeightMatrix bracket_pair(std::span<const int> f, int f_range,
                                 std::span<const int> h, int h_range) {
  if (f.size() != h.size())
    throw PreconditionError("labelings have different domains");
  WeightMatrix out(f_range, h_range);
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (f[e] < 0 || f[e] >= f_range || h[e] < 0 || h[e] >= h_range)
      throw PreconditionError("label outside its co-domain");
    ++out(f[e], h[e]);
  }
  return out;
}

inline WeightMatrix bracket(const LabeledBigraph& g) {
  WeightMatrix out(g.left_size, g.right_size);
  for (const auto& [l, r] : g.edges) ++out(l, r);
  return out;
}

inline WeightMatrix uniform_matrix(int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("uniform_matrix needs n, k >= 1");
  return WeightMatrix(n, k, 1);
}

// Row-major expansion: entry (x, y) = c emits c copies of (x, y).
inline LabeledBigraph instance_from_matrix(const WeightMatrix& b) {
  if (!b.non_negative()) throw PreconditionError("negative matrix entry");
  LabeledBigraph g{b.rows, b.cols, {}};
  g.edges.reserve(static_cast<std::size_t>(b.total()));
  for (int x = 0; x < b.rows; ++x)
    for (int y = 0; y < b.cols; ++y)
      for (std::int64_t c = 0; c < b(x, y); ++c) g.edges.emplace_back(x, y);
  return g;
}

// Edge e becomes (u(iota(e)), v(e)).
inline LabeledBigraph apply_involution(const LabeledBigraph& g,
                                       const Involution& iota) {
  if (iota.size() != g.edge_count())
    throw PreconditionError("involution size does not match edge count");
  LabeledBigraph out = g;
  for (int e = 0; e < g.edge_count(); ++e)
    out.edges[e].first = g.edges[iota(e)].first;
  return out;
}

// Relabel left endpoints through an arbitrary edge map: e -> u(map(e)).
inline std::vector<int> pull_back_left(const LabeledBigraph& g,
                                       std::span<const int> edge_map) {
  std::vector<int> out(edge_map.size());
  for (std::size_t e = 0; e < edge_map.size(); ++e)
    out[e] = g.edges.at(edge_map[e]).first;
  return out;
}

struct EnumerationOptions {
  // Stop with BudgetExceeded once this many matrices have been emitted.
  std::uint64_t max_count = std::numeric_limits<std::uint64_t>::max();
  // Fixed leading entries (row-major); restricts the walk to one shard.
  std::vector<std::int64_t> prefix;
};

// Emits every member of B(n, k) once, in lexicographic row-major order.
// Returns the number emitted.
inline std::uint64_t enumerate_bnk(
    int n, int k, const std::function<void(const WeightMatrix&)>& visit,
    const EnumerationOptions& options = {}) {
  if (n < 1 || k < 1) throw PreconditionError("enumerate_bnk needs n, k >= 1");
  WeightMatrix m(n, k);
  std::vector<std::int64_t> row_left(n, k);
  std::vector<std::int64_t> col_left(k, n);
  std::uint64_t count = 0;
  const std::size_t cells = static_cast<std::size_t>(n) * k;

  std::function<void(std::size_t)> fill = [&](std::size_t pos) {
    if (pos == cells) {
      if (count >= options.max_count)
        throw BudgetExceeded("B(n,k) enumeration budget exceeded", count);
      ++count;
      visit(m);
      return;
    }
    const int r = static_cast<int>(pos / k);
    const int c = static_cast<int>(pos % k);
    std::int64_t lo = 0;
    std::int64_t hi = std::min(row_left[r], col_left[c]);
    // The last column and last row are forced by the sums.
    if (c == k - 1) lo = row_left[r];
    if (r == n - 1) lo = std::max(lo, col_left[c]);
    if (pos < options.prefix.size()) {
      lo = std::max(lo, options.prefix[pos]);
      hi = std::min(hi, options.prefix[pos]);
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      m(r, c) = v;
      row_left[r] -= v;
      col_left[c] -= v;
      fill(pos + 1);
      row_left[r] += v;
      col_left[c] += v;
    }
    m(r, c) = 0;
  };
  fill(0);
  return count;
}

inline std::vector<WeightMatrix> collect_bnk(int n, int k) {
  std::vector<WeightMatrix> out;
  enumerate_bnk(n, k, [&](const WeightMatrix& m) { out.push_back(m); });
  return out;
}

}  // namespace bireg
