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

// Edge colorings of bipartite multigraphs:
//
//  * balance_two_colors   Euler-circuit alternation, every vertex within 1;
//  * balanced_coloring    m colors, pairwise rebalancing by cost descent;
//  * wind_coloring        palette-F coloring whose right color degrees are
//                         all 1 and whose left color degrees are m or
//                         m + sgn(eps) ("exceptional");
//  * make_hamiltonian     path flips until the exceptional graph is one
//                         cycle (|eps| = 2);
//  * six_coloring         the n = 6, k = 6m + 3 construction from three
//                         classes split along vertex triples.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "bireg/core.hpp"
#include "bireg/matching.hpp"

namespace bireg {

struct Coloring {
  int palette = 0;
  std::vector<int> colors;  // aligned with edge indices

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Left x palette table of color degrees.
inline WeightMatrix left_color_degrees(const LabeledBigraph& g,
                                       const Coloring& w) {
  return bracket_pair(g.left_labels(), g.left_size, w.colors, w.palette);
}

// Right x palette table of color degrees.
inline WeightMatrix right_color_degrees(const LabeledBigraph& g,
                                        const Coloring& w) {
  return bracket_pair(g.right_labels(), g.right_size, w.colors, w.palette);
}

// Largest gap between two color degrees at one vertex.
inline std::int64_t color_degree_spread(const LabeledBigraph& g,
                                        const Coloring& w) {
  std::int64_t worst = 0;
  for (const auto& table : {left_color_degrees(g, w), right_color_degrees(g, w)}) {
    for (int v = 0; v < table.rows; ++v) {
      std::int64_t lo = table(v, 0), hi = table(v, 0);
      for (int c = 1; c < table.cols; ++c) {
        lo = std::min(lo, table(v, c));
        hi = std::max(hi, table(v, c));
      }
      worst = std::max(worst, hi - lo);
    }
  }
  return worst;
}

// Sum over vertices and colors of squared color degrees.
inline std::int64_t coloring_cost(const LabeledBigraph& g, const Coloring& w) {
  std::int64_t cost = 0;
  for (const auto& table : {left_color_degrees(g, w), right_color_degrees(g, w)})
    for (auto d : table.data) cost += d * d;
  return cost;
}

// Two-coloring with |blue - red| <= 1 at every vertex. One auxiliary vertex
// per part absorbs the odd-degree vertices (plus one edge between the two
// auxiliaries if their degrees are odd); alternating along Euler circuits of
// the even graph then balances every vertex exactly, and dropping the
// auxiliary edges costs at most one per original vertex.
inline Coloring balance_two_colors(const LabeledBigraph& g) {
  g.validate();
  const int n = g.left_size, k = g.right_size;
  const int aux_left = n + k, aux_right = n + k + 1;
  const int vertices = n + k + 2;

  std::vector<std::pair<int, int>> ends;  // (left-side id, right-side id)
  ends.reserve(g.edges.size() + n + k + 1);
  for (const auto& [l, r] : g.edges) ends.emplace_back(l, n + r);
  const int original = static_cast<int>(ends.size());
  const auto ld = g.left_degrees();
  const auto rd = g.right_degrees();
  int aux_left_deg = 0, aux_right_deg = 0;
  for (int l = 0; l < n; ++l)
    if (ld[l] % 2) {
      ends.emplace_back(l, aux_right);
      ++aux_right_deg;
    }
  for (int r = 0; r < k; ++r)
    if (rd[r] % 2) {
      ends.emplace_back(aux_left, n + r);
      ++aux_left_deg;
    }
  if (aux_left_deg % 2) ends.emplace_back(aux_left, aux_right);

  std::vector<std::vector<std::pair<int, int>>> adj(vertices);  // (edge, other)
  for (int e = 0; e < static_cast<int>(ends.size()); ++e) {
    adj[ends[e].first].emplace_back(e, ends[e].second);
    adj[ends[e].second].emplace_back(e, ends[e].first);
  }

  std::vector<int> color(ends.size(), -1);
  std::vector<char> used(ends.size(), 0);
  std::vector<std::size_t> next(vertices, 0);
  for (int start = 0; start < vertices; ++start) {
    // Hierholzer; `circuit` receives the closed trail edge by edge.
    std::vector<int> circuit;
    std::vector<std::pair<int, int>> stack{{start, -1}};
    while (!stack.empty()) {
      const int v = stack.back().first;
      while (next[v] < adj[v].size() && used[adj[v][next[v]].first]) ++next[v];
      if (next[v] < adj[v].size()) {
        const auto [e, w] = adj[v][next[v]];
        used[e] = 1;
        stack.emplace_back(w, e);
      } else {
        if (stack.back().second >= 0) circuit.push_back(stack.back().second);
        stack.pop_back();
      }
    }
    for (std::size_t i = 0; i < circuit.size(); ++i)
      color[circuit[i]] = static_cast<int>(i % 2);
  }
  Coloring out{2, std::vector<int>(color.begin(), color.begin() + original)};
  return out;
}

// m-coloring where at every vertex any two color degrees differ by <= 1.
// Starts round-robin and repeatedly rebalances the first color pair (in
// fixed order) that is unbalanced somewhere; each step strictly lowers the
// integer cost, so the loop terminates.
inline Coloring balanced_coloring(const LabeledBigraph& g, int m) {
  g.validate();
  if (m < 1) throw PreconditionError("balanced_coloring needs m >= 1");
  Coloring w{m, std::vector<int>(g.edges.size())};
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    w.colors[e] = static_cast<int>(e % m);
  if (m == 1) return w;

  std::int64_t cost = coloring_cost(g, w);
  for (;;) {
    const auto left = left_color_degrees(g, w);
    const auto right = right_color_degrees(g, w);
    auto unbalanced = [&](int a, int b) {
      for (const auto* t : {&left, &right})
        for (int v = 0; v < t->rows; ++v)
          if (std::llabs((*t)(v, a) - (*t)(v, b)) > 1) return true;
      return false;
    };
    int pa = -1, pb = -1;
    for (int a = 0; a < m && pa < 0; ++a)
      for (int b = a + 1; b < m; ++b)
        if (unbalanced(a, b)) {
          pa = a;
          pb = b;
          break;
        }
    if (pa < 0) return w;

    LabeledBigraph sub{g.left_size, g.right_size, {}};
    std::vector<int> ids;
    for (int e = 0; e < g.edge_count(); ++e)
      if (w.colors[e] == pa || w.colors[e] == pb) {
        sub.edges.push_back(g.edges[e]);
        ids.push_back(e);
      }
    const auto two = balance_two_colors(sub);
    for (std::size_t i = 0; i < ids.size(); ++i)
      w.colors[ids[i]] = two.colors[i] == 0 ? pa : pb;
    const std::int64_t next_cost = coloring_cost(g, w);
    if (next_cost >= cost)
      throw LemmaViolation("pairwise rebalancing did not lower the cost",
                           nlohmann::json{{"colors", w.colors}});
    cost = next_cost;
  }
}

// Bipartite graph of exceptional positions of [u, w]: entry (girl, color)
// is 1 exactly where the weight is m + sign.
struct ExceptionalGraph {
  int m = 0;
  int sign = 0;
  WeightMatrix edges;  // girls x palette, 0/1

  // Common degree of every vertex on both sides, or -1.
  int regularity() const {
    if (edges.rows == 0) return -1;
    const std::int64_t d = edges.row_sum(0);
    for (int r = 0; r < edges.rows; ++r)
      if (edges.row_sum(r) != d) return -1;
    for (int c = 0; c < edges.cols; ++c)
      if (edges.col_sum(c) != d) return -1;
    return static_cast<int>(d);
  }

  // Connected components among the vertices that carry an edge.
  int components() const;
};

inline int ExceptionalGraph::components() const {
  const int n = edges.rows, f = edges.cols;
  std::vector<int> parent(n + f);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> touched(n + f, 0);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < f; ++c)
      if (edges(i, c)) {
        parent[find(i)] = find(n + c);
        touched[i] = touched[n + c] = 1;
      }
  int count = 0;
  for (int x = 0; x < n + f; ++x) count += touched[x] && find(x) == x;
  return count;
}

// k = m * F + eps with |eps| < F.
struct WindParameters {
  int m = 0;
  int epsilon = 0;
  int sign() const { return (epsilon > 0) - (epsilon < 0); }
};

// Exceptional graph of [u, w]; throws if some weight is neither m nor
// m + sgn(eps) or the graph is not |eps|-regular.
inline ExceptionalGraph exceptional_graph(const LabeledBigraph& g,
                                          const Coloring& w,
                                          WindParameters params) {
  const auto uw = left_color_degrees(g, w);
  ExceptionalGraph out{params.m, params.sign(), WeightMatrix(uw.rows, uw.cols)};
  for (int i = 0; i < uw.rows; ++i)
    for (int c = 0; c < uw.cols; ++c) {
      if (uw(i, c) == params.m + params.sign() && params.sign() != 0) {
        out.edges(i, c) = 1;
      } else if (uw(i, c) != params.m) {
        throw LemmaViolation("[u,w] weight outside {m, m+sgn(eps)}",
                             nlohmann::json{{"uw", uw.data},
                                            {"m", params.m},
                                            {"epsilon", params.epsilon}});
      }
    }
  if (out.regularity() != std::abs(params.epsilon))
    throw LemmaViolation("exceptional graph is not |eps|-regular",
                         nlohmann::json{{"exceptional", out.edges.data},
                                        {"epsilon", params.epsilon}});
  return out;
}

struct WindColoring {
  Coloring coloring;
  ExceptionalGraph exceptional;
};

// Palette-F coloring with every right color degree 1 and left color degrees
// in {m, m + sgn(eps)}. Needs all right degrees equal to F and all left
// degrees equal to m * F + eps.
inline WindColoring wind_coloring(const LabeledBigraph& g, int palette,
                                  WindParameters params) {
  g.validate();
  if (palette < 1 || std::abs(params.epsilon) >= palette || params.m < 0)
    throw PreconditionError("wind_coloring needs |eps| < palette");
  for (int d : g.right_degrees())
    if (d != palette)
      throw PreconditionError("wind_coloring needs right degrees == palette");
  for (int d : g.left_degrees())
    if (d != params.m * palette + params.epsilon)
      throw PreconditionError("wind_coloring needs left degrees m*F + eps");
  WindColoring out;
  out.coloring = balanced_coloring(g, palette);
  const auto right = right_color_degrees(g, out.coloring);
  if (right != WeightMatrix(g.right_size, palette, 1))
    throw LemmaViolation("[w,v] is not all-ones",
                         nlohmann::json{{"colors", out.coloring.colors}});
  out.exceptional = exceptional_graph(g, out.coloring, params);
  return out;
}

// Square case: palette = left part size n, k = m * n + eps.
inline WindColoring wind_coloring(const LabeledBigraph& g,
                                  WindParameters params) {
  return wind_coloring(g, g.left_size, params);
}

struct HamiltonianResult {
  Coloring coloring;
  ExceptionalGraph exceptional;
  // Component count of the exceptional graph before each flip and at the
  // end; strictly decreasing.
  std::vector<int> component_history;
};

// For |eps| = 2 and n > 2: recolors until the exceptional graph is a single
// cycle of length 2n. While it is disconnected, take Red = color 0 and Blue =
// the least color outside Red's component, s = least girl next to Red.
// Orient the "out" color left -> right and the other right -> left, where
// out = Red for eps > 0 and Blue for eps < 0; s is then a source-heavy
// vertex and a breadth-first path from s reaches a girl t with more in- than
// out-edges. Swapping the two colors along the path replaces s-Red, t-Blue by
// s-Blue, t-Red in the exceptional graph, merging two cycles.
inline HamiltonianResult make_hamiltonian(const LabeledBigraph& g,
                                          const Coloring& w,
                                          WindParameters params) {
  const int n = g.left_size;
  if (std::abs(params.epsilon) != 2 || n <= 2 || w.palette != n)
    throw PreconditionError("make_hamiltonian needs |eps| = 2, n > 2 and a "
                            "palette of size n");
  HamiltonianResult out{w, exceptional_graph(g, w, params), {}};
  for (;;) {
    const int comps = out.exceptional.components();
    out.component_history.push_back(comps);
    if (out.component_history.size() >= 2 &&
        comps >= out.component_history[out.component_history.size() - 2])
      throw LemmaViolation("flip did not merge exceptional cycles",
                           nlohmann::json{{"colors", out.coloring.colors}});
    if (comps <= 1) return out;

    // Component labels over girls [0, n) and colors [n, 2n).
    const auto& ex = out.exceptional.edges;
    std::vector<int> label(2 * n, -1);
    for (int s = 0, next = 0; s < 2 * n; ++s) {
      if (label[s] >= 0) continue;
      std::vector<int> stack{s};
      label[s] = next;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n; ++y) {
          const int other = x < n ? n + y : y;
          const bool edge = x < n ? ex(x, y) : ex(y, x - n);
          if (edge && label[other] < 0) {
            label[other] = next;
            stack.push_back(other);
          }
        }
      }
      ++next;
    }
    const int red = 0;
    int blue = -1;
    for (int c = 1; c < n && blue < 0; ++c)
      if (label[n + c] != label[n + red]) blue = c;
    int s = -1;
    for (int i = 0; i < n && s < 0; ++i)
      if (ex(i, red)) s = i;

    const int out_color = params.epsilon > 0 ? red : blue;
    const int in_color = params.epsilon > 0 ? blue : red;
    // Digraph over girls [0, n) and right vertices [n, n + k).
    const int k = g.right_size;
    std::vector<std::vector<std::pair<int, int>>> arcs(n + k);  // (edge, head)
    std::vector<int> balance(n, 0);  // out - in, girls only
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto [l, r] = g.edges[e];
      if (out.coloring.colors[e] == out_color) {
        arcs[l].emplace_back(e, n + r);
        ++balance[l];
      } else if (out.coloring.colors[e] == in_color) {
        arcs[n + r].emplace_back(e, l);
        --balance[l];
      }
    }
    std::vector<int> via(n + k, -2);
    via[s] = -1;
    std::queue<int> q;
    q.push(s);
    int t = -1;
    while (!q.empty() && t < 0) {
      const int x = q.front();
      q.pop();
      for (const auto& [e, y] : arcs[x]) {
        if (via[y] != -2) continue;
        via[y] = e;
        if (y < n && balance[y] < 0) {
          t = y;
          break;
        }
        q.push(y);
      }
    }
    if (t < 0)
      throw LemmaViolation("no flip path from a positive to a negative vertex",
                           nlohmann::json{{"colors", out.coloring.colors},
                                          {"red", red},
                                          {"blue", blue},
                                          {"start", s}});
    for (int x = t; via[x] >= 0;) {
      const int e = via[x];
      const auto [l, r] = g.edges[e];
      const bool was_out = out.coloring.colors[e] == out_color;
      out.coloring.colors[e] = was_out ? in_color : out_color;
      x = was_out ? l : n + r;  // tail of the arc
    }
    out.exceptional = exceptional_graph(g, out.coloring, params);
  }
}

// ---------------------------------------------------------------------------
// n = 6, k = 6m + 3.

// One class of a 3-coloring: 6 girls of degree 2m + 1, 6m + 3 right
// vertices of degree 2, as a bipartite multigraph.
struct ColorClass {
  LabeledBigraph graph;
  std::vector<int> edge_ids;  // class edge -> edge of the full instance
  int m = 0;
};

inline ColorClass make_color_class(const LabeledBigraph& g, const Coloring& w,
                                   int color, int m) {
  ColorClass cls{{g.left_size, g.right_size, {}}, {}, m};
  for (int e = 0; e < g.edge_count(); ++e)
    if (w.colors[e] == color) {
      cls.graph.edges.push_back(g.edges[e]);
      cls.edge_ids.push_back(e);
    }
  return cls;
}

inline int class_neighborhood_size(const ColorClass& cls,
                                   std::initializer_list<int> girls) {
  std::vector<char> hit(cls.graph.right_size, 0);
  int count = 0;
  for (const auto& [l, r] : cls.graph.edges)
    if (std::find(girls.begin(), girls.end(), l) != girls.end() && !hit[r]) {
      hit[r] = 1;
      ++count;
    }
  return count;
}

// Two girls are complementary when their joint neighborhood has the minimum
// possible size 2m + 1.
inline bool complementary(const ColorClass& cls, int a, int b) {
  return class_neighborhood_size(cls, {a, b}) == 2 * cls.m + 1;
}

inline void check_color_class(const ColorClass& cls) {
  const auto& g = cls.graph;
  if (g.left_size != 6 || g.right_size != 6 * cls.m + 3)
    throw PreconditionError("color class must be 6 x (6m+3)");
  for (int d : g.left_degrees())
    if (d != 2 * cls.m + 1)
      throw PreconditionError("color class left degrees must be 2m+1");
  for (int d : g.right_degrees())
    if (d != 2) throw PreconditionError("color class right degrees must be 2");
}

inline nlohmann::json color_class_artifact(const ColorClass& cls) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [l, r] : cls.graph.edges) edges.push_back({l, r});
  return {{"m", cls.m}, {"n", 6}, {"k", cls.graph.right_size}, {"edges", edges}};
}

// A girl w outside {u, v, f} with |N({u, v, w})| >= 3m + 3 and no
// complementary pair in {u, v, w}. Candidates are scanned in index order and
// verified directly.
inline int find_triple(const ColorClass& cls, int u, int v, int f) {
  check_color_class(cls);
  if (u == v || u == f || v == f || std::min({u, v, f}) < 0 ||
      std::max({u, v, f}) > 5)
    throw PreconditionError("find_triple needs three distinct girls");
  if (class_neighborhood_size(cls, {u, v}) < 2 * cls.m + 2)
    throw PreconditionError("find_triple needs non-complementary u, v");
  for (int w = 0; w < 6; ++w) {
    if (w == u || w == v || w == f) continue;
    if (class_neighborhood_size(cls, {u, v, w}) >= 3 * cls.m + 3 &&
        !complementary(cls, u, w) && !complementary(cls, v, w))
      return w;
  }
  auto artifact = color_class_artifact(cls);
  artifact["u"] = u;
  artifact["v"] = v;
  artifact["f"] = f;
  throw LemmaViolation("no admissible third girl in color class", artifact);
}

// Splits a color class into two sub-colors: in the first the triple girls
// have degree m + 1, the others m, and every right vertex exactly 1. The
// degree-constrained subgraph is a perfect matching between girl copies
// (m + 1 or m per girl) and right vertices. Returns 0/1 per class edge, or
// nullopt when no such split exists.
inline std::optional<std::vector<int>> try_split(const ColorClass& cls,
                                                 std::array<int, 3> triple) {
  std::vector<int> copy_owner;
  for (int girl = 0; girl < 6; ++girl) {
    const bool in = std::find(triple.begin(), triple.end(), girl) != triple.end();
    for (int c = 0; c < cls.m + (in ? 1 : 0); ++c) copy_owner.push_back(girl);
  }
  const int k = cls.graph.right_size;
  BipGraph flow(static_cast<int>(copy_owner.size()), k);
  for (const auto& [l, r] : cls.graph.edges)
    for (int c = 0; c < flow.rows; ++c)
      if (copy_owner[c] == l) flow(c, r) = 1;
  const auto m = max_bipartite_matching(flow);
  if (!m.left_perfect()) return std::nullopt;
  std::vector<int> side(cls.graph.edges.size(), 1);
  for (int c = 0; c < flow.rows; ++c) {
    const int girl = copy_owner[c], r = m.mate_left[c];
    for (std::size_t e = 0; e < cls.graph.edges.size(); ++e)
      if (side[e] == 1 && cls.graph.edges[e] == std::pair{girl, r}) {
        side[e] = 0;
        break;
      }
  }
  return side;
}

// As try_split, for a triple meeting the neighborhood bound. A complementary
// pair inside the complement of the triple also blocks the split, so
// infeasibility is reported as an artifact rather than assumed impossible.
inline std::vector<int> split_color_with_triple(const ColorClass& cls,
                                                std::array<int, 3> triple) {
  check_color_class(cls);
  if (cls.m < 1) throw PreconditionError("split needs m >= 1");
  if (class_neighborhood_size(cls, {triple[0], triple[1], triple[2]}) <
      3 * cls.m + 3)
    throw PreconditionError("split needs |N(triple)| >= 3m+3");
  auto side = try_split(cls, triple);
  if (!side) {
    auto artifact = color_class_artifact(cls);
    artifact["triple"] = triple;
    throw LemmaViolation("degree-constrained split is infeasible", artifact);
  }
  return *side;
}

struct SixColoring {
  Coloring coloring;  // palette 6
  ExceptionalGraph exceptional;
  // Degree-(m+1) triple of the first sub-color of each class.
  std::array<std::array<int, 3>, 3> triples{};
  // "greedy" when the lemma-driven choice split cleanly, else "search".
  std::string triple_source;
};

namespace detail {

using Triple = std::array<int, 3>;

// Lemma-driven choice: a non-complementary pair plus find_triple in the
// first class, then (b, c, 4) and (3, 4, x) in the next two, redoing the
// first class when x is the first class's remaining girl.
inline std::array<Triple, 3> greedy_triples(const std::array<ColorClass, 3>& cls) {
  auto other_than = [](std::initializer_list<int> skip) {
    for (int x = 0; x < 6; ++x)
      if (std::find(skip.begin(), skip.end(), x) == skip.end()) return x;
    return -1;
  };

  int u = -1, v = -1;
  for (int a = 0; a < 6 && u < 0; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (!complementary(cls[0], a, b)) {
        u = a;
        v = b;
        break;
      }
  const int w1 = find_triple(cls[0], u, v, other_than({u, v}));
  Triple t1{u, v, w1};

  int one = -1, b = -1, c = -1;
  for (int drop = 0; drop < 3 && one < 0; ++drop) {
    const int x = t1[(drop + 1) % 3], y = t1[(drop + 2) % 3];
    if (!complementary(cls[1], x, y)) {
      one = t1[drop];
      b = std::min(x, y);
      c = std::max(x, y);
    }
  }
  const int four = find_triple(cls[1], b, c, one);
  Triple t2{b, c, four};

  int two = b, three = c;
  if (complementary(cls[2], three, four)) std::swap(two, three);
  const int x = find_triple(cls[2], three, four, two);
  Triple t3{three, four, x};
  if (x == one) t1 = {two, three, find_triple(cls[0], two, three, one)};
  return {t1, t2, t3};
}

// Every labeling of the overlapping patterns (1,2,3) (2,3,4) (3,4,5),
// (2,3,4) (2,3,4) (3,4,1) and (2,3,5) (2,3,4) (3,4,1) by distinct girls.
inline std::vector<std::array<Triple, 3>> pattern_triples() {
  std::vector<std::array<Triple, 3>> out;
  std::array<int, 6> g{0, 1, 2, 3, 4, 5};
  do {
    const int p1 = g[0], p2 = g[1], p3 = g[2], p4 = g[3], p5 = g[4];
    out.push_back({Triple{p1, p2, p3}, Triple{p2, p3, p4}, Triple{p3, p4, p5}});
    out.push_back({Triple{p2, p3, p4}, Triple{p2, p3, p4}, Triple{p3, p4, p1}});
    out.push_back({Triple{p2, p3, p5}, Triple{p2, p3, p4}, Triple{p3, p4, p1}});
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

}  // namespace detail

// n = 6, k = 6m + 3 (m >= 1): balanced 3-coloring, one triple per class in
// the overlapping pattern of the construction, then each class is split
// into two sub-colors. Class c yields colors 2c (triple at m + 1) and
// 2c + 1 (complement at m + 1).
inline SixColoring six_coloring(const LabeledBigraph& g) {
  g.validate();
  if (g.left_size != 6 || g.right_size % 6 != 3 || g.right_size < 9 ||
      !g.in_ank())
    throw PreconditionError("six_coloring needs n = 6, k = 6m+3, m >= 1");
  const int m = (g.right_size - 3) / 6;
  const auto three = balanced_coloring(g, 3);
  std::array<ColorClass, 3> cls{make_color_class(g, three, 0, m),
                                make_color_class(g, three, 1, m),
                                make_color_class(g, three, 2, m)};
  for (const auto& c : cls) check_color_class(c);

  // Split feasibility per (class, triple), keyed by the triple's bitmask.
  std::array<std::map<int, std::optional<std::vector<int>>>, 3> memo;
  auto split = [&](int c, const detail::Triple& t)
      -> const std::optional<std::vector<int>>& {
    const int key = (1 << t[0]) | (1 << t[1]) | (1 << t[2]);
    auto it = memo[c].find(key);
    if (it == memo[c].end()) it = memo[c].emplace(key, try_split(cls[c], t)).first;
    return it->second;
  };
  auto feasible = [&](const std::array<detail::Triple, 3>& ts) {
    for (int c = 0; c < 3; ++c)
      if (!split(c, ts[c])) return false;
    return true;
  };

  SixColoring out;
  const auto greedy = detail::greedy_triples(cls);
  if (feasible(greedy)) {
    out.triples = greedy;
    out.triple_source = "greedy";
  } else {
    const auto candidates = detail::pattern_triples();
    const auto hit = std::find_if(candidates.begin(), candidates.end(), feasible);
    if (hit == candidates.end()) {
      nlohmann::json artifact = {{"classes", nlohmann::json::array()}};
      for (const auto& c : cls) artifact["classes"].push_back(color_class_artifact(c));
      artifact["greedy"] = greedy;
      throw LemmaViolation("no triple pattern splits all three classes", artifact);
    }
    out.triples = *hit;
    out.triple_source = "search";
  }

  out.coloring = Coloring{6, std::vector<int>(g.edges.size(), -1)};
  for (int cc = 0; cc < 3; ++cc) {
    const auto& side = *split(cc, out.triples[cc]);
    for (std::size_t e = 0; e < side.size(); ++e)
      out.coloring.colors[cls[cc].edge_ids[e]] = 2 * cc + side[e];
  }
  if (right_color_degrees(g, out.coloring) != WeightMatrix(g.right_size, 6, 1))
    throw LemmaViolation("six_coloring: [w,v] is not all-ones",
                         nlohmann::json{{"colors", out.coloring.colors}});
  out.exceptional = exceptional_graph(g, out.coloring, WindParameters{m, 3});
  return out;
}

}  // namespace bireg
