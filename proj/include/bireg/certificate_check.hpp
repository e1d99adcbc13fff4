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

// Independent certificate validation. Deliberately self-contained: it reads
// the raw JSON and recounts everything with its own loops, depending only
// on the core data model, so a bug in a solver cannot vouch for itself.
//
// Kinds: balls-involution, four-parts-bijection, matching, tutte-obstruction,
// bipartite-matching, deficient-set, inequality-violation.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bireg/core.hpp"
#include "bireg/rational.hpp"

namespace bireg {

struct CheckResult {
  bool ok = false;
  std::string reason;  // empty when ok

  explicit operator bool() const { return ok; }
};

namespace check_detail {

using nlohmann::json;

struct Reject {
  std::string reason;
};

inline const json& get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Reject{std::string("missing '") + key + "'"};
  return j.at(key);
}

inline std::int64_t integer(const json& j) {
  if (!j.is_number_integer()) throw Reject{"expected an integer"};
  return j.get<std::int64_t>();
}

inline std::vector<std::int64_t> int_array(const json& j) {
  if (!j.is_array()) throw Reject{"expected an array"};
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(integer(x));
  return out;
}

inline std::vector<std::vector<std::int64_t>> int_grid(const json& j, std::int64_t rows,
                                                       std::int64_t cols) {
  if (!j.is_array() || static_cast<std::int64_t>(j.size()) != rows)
    throw Reject{"grid has the wrong number of rows"};
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : j) {
    auto r = int_array(row);
    if (static_cast<std::int64_t>(r.size()) != cols)
      throw Reject{"grid row has the wrong length"};
    out.push_back(std::move(r));
  }
  return out;
}

struct Edges {
  std::int64_t n = 0, k = 0;
  std::vector<std::int64_t> left, right;
};

inline Edges instance(const json& j) {
  Edges e;
  e.n = integer(get(j, "n"));
  e.k = integer(get(j, "k"));
  if (e.n < 1 || e.k < 1) throw Reject{"instance parts must be non-empty"};
  const auto& list = get(j, "edges");
  if (!list.is_array()) throw Reject{"edges must be an array"};
  for (const auto& pair : list) {
    const auto p = int_array(pair);
    if (p.size() != 2 || p[0] < 0 || p[0] >= e.n || p[1] < 0 || p[1] >= e.k)
      throw Reject{"edge endpoint out of range"};
    e.left.push_back(p[0]);
    e.right.push_back(p[1]);
  }
  return e;
}

// Every index hit exactly once.
inline bool bijective(const std::vector<std::int64_t>& map) {
  std::vector<char> seen(map.size(), 0);
  for (auto x : map) {
    if (x < 0 || x >= static_cast<std::int64_t>(map.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// Counts (relabeled left, right) pairs and demands each of rows x cols once.
inline bool all_ones(const std::vector<std::int64_t>& rows_of_edge, std::int64_t rows,
                     const std::vector<std::int64_t>& cols_of_edge, std::int64_t cols) {
  if (static_cast<std::int64_t>(rows_of_edge.size()) != rows * cols) return false;
  std::vector<std::int64_t> count(rows * cols, 0);
  for (std::size_t e = 0; e < rows_of_edge.size(); ++e) {
    const auto r = rows_of_edge[e], c = cols_of_edge[e];
    if (r < 0 || r >= rows || c < 0 || c >= cols) return false;
    if (++count[r * cols + c] > 1) return false;
  }
  return true;
}

inline void balls(const json& cert) {
  const auto g = instance(get(cert, "instance"));
  const auto iota = int_array(get(cert, "involution"));
  const auto e = static_cast<std::int64_t>(g.left.size());
  if (static_cast<std::int64_t>(iota.size()) != e)
    throw Reject{"involution length differs from edge count"};
  for (std::int64_t i = 0; i < e; ++i)
    if (iota[i] < 0 || iota[i] >= e || iota[iota[i]] != i)
      throw Reject{"map is not an involution"};
  std::vector<std::int64_t> relabeled(e);
  for (std::int64_t i = 0; i < e; ++i) relabeled[i] = g.left[iota[i]];
  if (!all_ones(relabeled, g.n, g.right, g.k))
    throw Reject{"[u o iota, v] is not all-ones"};
}

inline void four_parts(const json& cert) {
  const auto g1 = instance(get(cert, "instance1"));
  const auto g2 = instance(get(cert, "instance2"));
  const auto psi = int_array(get(cert, "psi"));
  if (psi.size() != g1.left.size() || psi.size() != g2.left.size() || !bijective(psi))
    throw Reject{"psi is not a bijection E1 -> E2"};
  std::vector<std::int64_t> a(psi.size()), b(psi.size()), right2(psi.size());
  for (std::size_t e = 0; e < psi.size(); ++e) {
    a[e] = g2.left[psi[e]];       // u2 o psi on E1
    b[psi[e]] = g1.left[e];       // u1 o psi^-1 on E2
  }
  if (!all_ones(a, g2.n, g1.right, g1.k))
    throw Reject{"[u2 o psi, v1] is not all-ones"};
  if (!all_ones(b, g1.n, g2.right, g2.k))
    throw Reject{"[u1 o psi^-1, v2] is not all-ones"};
}

struct Graph {
  std::int64_t size = 0;
  std::vector<std::vector<std::int64_t>> adj;
};

inline Graph loop_graph(const json& j) {
  Graph g;
  g.size = integer(get(j, "vertices"));
  if (g.size < 0) throw Reject{"negative vertex count"};
  g.adj = int_grid(get(j, "adjacency"), g.size, g.size);
  for (std::int64_t a = 0; a < g.size; ++a)
    for (std::int64_t b = 0; b < g.size; ++b)
      if (g.adj[a][b] != g.adj[b][a] || g.adj[a][b] < 0)
        throw Reject{"adjacency is not symmetric and non-negative"};
  return g;
}

inline void matching(const json& cert) {
  const auto g = loop_graph(get(cert, "graph"));
  const auto theta = int_array(get(cert, "theta"));
  if (static_cast<std::int64_t>(theta.size()) != g.size)
    throw Reject{"theta length differs from vertex count"};
  for (std::int64_t v = 0; v < g.size; ++v) {
    const auto w = theta[v];
    if (w < 0 || w >= g.size || theta[w] != v) throw Reject{"theta is not an involution"};
    if (g.adj[v][w] <= 0) throw Reject{"theta uses a missing edge or loop"};
  }
}

inline void tutte(const json& cert) {
  const auto g = loop_graph(get(cert, "graph"));
  const auto set = int_array(get(cert, "set"));
  std::vector<char> removed(g.size, 0);
  for (auto v : set) {
    if (v < 0 || v >= g.size || removed[v]) throw Reject{"bad obstruction set"};
    removed[v] = 1;
  }
  std::vector<std::int64_t> comp(g.size, -1);
  std::int64_t odd_loop_free = 0;
  for (std::int64_t s = 0; s < g.size; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    std::vector<std::int64_t> stack{s};
    comp[s] = s;
    std::int64_t count = 0;
    bool loop = false;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      ++count;
      if (g.adj[v][v] > 0) loop = true;
      for (std::int64_t w = 0; w < g.size; ++w)
        if (w != v && g.adj[v][w] > 0 && !removed[w] && comp[w] < 0) {
          comp[w] = s;
          stack.push_back(w);
        }
    }
    if (!loop && count % 2 == 1) ++odd_loop_free;
  }
  if (odd_loop_free <= static_cast<std::int64_t>(set.size()))
    throw Reject{"G - U does not have more than |U| odd loop-free components"};
}

struct Bip {
  std::int64_t rows = 0, cols = 0;
  std::vector<std::vector<std::int64_t>> m;
};

inline Bip bipartite(const json& j) {
  Bip b;
  b.rows = integer(get(j, "rows"));
  b.cols = integer(get(j, "cols"));
  if (b.rows < 0 || b.cols < 0) throw Reject{"negative dimension"};
  b.m = int_grid(get(j, "data"), b.rows, b.cols);
  return b;
}

inline void bipartite_matching(const json& cert) {
  const auto g = bipartite(get(cert, "graph"));
  const auto mate = int_array(get(cert, "mate"));
  if (static_cast<std::int64_t>(mate.size()) != g.rows)
    throw Reject{"mate length differs from the left part"};
  std::vector<char> used(g.cols, 0);
  for (std::int64_t l = 0; l < g.rows; ++l) {
    const auto r = mate[l];
    if (r < 0 || r >= g.cols || used[r]) throw Reject{"mate is not injective"};
    if (g.m[l][r] <= 0) throw Reject{"mate uses a missing edge"};
    used[r] = 1;
  }
}

inline void deficient_set(const json& cert) {
  const auto g = bipartite(get(cert, "graph"));
  const auto set = int_array(get(cert, "set"));
  std::vector<char> in(g.rows, 0), hit(g.cols, 0);
  for (auto l : set) {
    if (l < 0 || l >= g.rows || in[l]) throw Reject{"bad deficient set"};
    in[l] = 1;
  }
  std::int64_t nbrs = 0;
  for (auto l : set)
    for (std::int64_t r = 0; r < g.cols; ++r)
      if (g.m[l][r] > 0 && !hit[r]) {
        hit[r] = 1;
        ++nbrs;
      }
  if (set.empty() || nbrs >= static_cast<std::int64_t>(set.size()))
    throw Reject{"|N(X)| is not smaller than |X|"};
}

inline Rational rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw Reject{"expected a rational"};
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    throw Reject{"malformed rational"};
  }
}

inline void inequality_violation(const json& cert) {
  const auto& mj = get(cert, "matrix");
  const auto rows = integer(get(mj, "rows")), cols = integer(get(mj, "cols"));
  const auto& data = get(mj, "data");
  if (rows < 1 || cols < 1 || !data.is_array() ||
      static_cast<std::int64_t>(data.size()) != rows)
    throw Reject{"bad matrix"};
  std::vector<std::vector<Rational>> m;
  for (const auto& row : data) {
    if (!row.is_array() || static_cast<std::int64_t>(row.size()) != cols)
      throw Reject{"bad matrix row"};
    m.emplace_back();
    for (const auto& x : row) {
      m.back().push_back(rational(x));
      if (m.back().back() < 0) throw Reject{"negative entry"};
    }
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (const auto& c : get(cert, "cells")) {
    const auto p = int_array(c);
    if (p.size() != 2 || p[0] < 0 || p[0] >= rows || p[1] < 0 || p[1] >= cols)
      throw Reject{"bad cell"};
    if (m[p[0]][p[1]] != 0) throw Reject{"cell is not a zero entry"};
    for (const auto& q : cells)
      if (q.first == p[0] && q.second == p[1]) throw Reject{"repeated cell"};
    cells.emplace_back(p[0], p[1]);
  }
  if (cells.size() % 2 == 0) throw Reject{"even number of cells"};
  Rational lhs(0), row_max(0), col_max(0);
  for (const auto& [xi, yi] : cells)
    for (const auto& [xj, yj] : cells) lhs += m[xi][yj] * m[xj][yi];
  for (std::int64_t r = 0; r < rows; ++r) {
    Rational s(0);
    for (std::int64_t c = 0; c < cols; ++c) s += m[r][c];
    if (s > row_max) row_max = s;
  }
  for (std::int64_t c = 0; c < cols; ++c) {
    Rational s(0);
    for (std::int64_t r = 0; r < rows; ++r) s += m[r][c];
    if (s > col_max) col_max = s;
  }
  const Rational rhs = Rational(static_cast<std::int64_t>(cells.size()) - 1) *
                       row_max * col_max;
  if (!(lhs > rhs)) throw Reject{"inequality is not violated"};
}

}  // namespace check_detail

inline CheckResult certificate_check(const nlohmann::json& cert) {
  using namespace check_detail;
  try {
    const auto& kind_field = get(cert, "kind");
    if (!kind_field.is_string()) throw Reject{"kind must be a string"};
    const auto kind = kind_field.get<std::string>();
    if (kind == "balls-involution") {
      balls(cert);
    } else if (kind == "four-parts-bijection") {
      four_parts(cert);
    } else if (kind == "matching") {
      matching(cert);
    } else if (kind == "tutte-obstruction") {
      tutte(cert);
    } else if (kind == "bipartite-matching") {
      bipartite_matching(cert);
    } else if (kind == "deficient-set") {
      deficient_set(cert);
    } else if (kind == "inequality-violation") {
      inequality_violation(cert);
    } else {
      throw Reject{"unknown certificate kind '" + kind + "'"};
    }
  } catch (const Reject& r) {
    return {false, r.reason};
  } catch (const nlohmann::json::exception& e) {
    return {false, std::string("schema violation: ") + e.what()};
  }
  return {true, {}};
}

}  // namespace bireg
