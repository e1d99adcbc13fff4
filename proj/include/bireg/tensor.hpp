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

// Products of bipartite structures: the symmetric cell product of a matrix
// with its transpose, the standard bipartite tensor product and complete
// bipartite graphs.

#pragma once

#include <cstdint>

#include "bireg/core.hpp"
#include "bireg/matching.hpp"

namespace bireg {

// Square (n*k) x (n*k) matrix indexed by cells (x, y) of an n x k matrix,
// linearized as x * k + y.
struct CellIndexedMatrix {
  int base_rows = 0;
  int base_cols = 0;
  WeightMatrix data;

  int cell(int x, int y) const { return x * base_cols + y; }
  std::pair<int, int> coords(int index) const {
    return {index / base_cols, index % base_cols};
  }
  int size() const { return data.rows; }

  friend bool operator==(const CellIndexedMatrix&,
                         const CellIndexedMatrix&) = default;
};

// Entry ((x1, y1), (x2, y2)) = M(x1, y2) * M(x2, y1). Not the Kronecker
// product: the result is symmetric and cell (x, y) carries a loop of weight
// M(x, y)^2.
inline CellIndexedMatrix symmetric_product(const WeightMatrix& m) {
  const int n = m.rows, k = m.cols;
  CellIndexedMatrix out{n, k, WeightMatrix(n * k, n * k)};
  for (int x1 = 0; x1 < n; ++x1)
    for (int y1 = 0; y1 < k; ++y1)
      for (int x2 = 0; x2 < n; ++x2)
        for (int y2 = 0; y2 < k; ++y2)
          out.data(x1 * k + y1, x2 * k + y2) = m(x1, y2) * m(x2, y1);
  return out;
}

// The cell product read as a bipartite graph between two copies of the
// cell set.
inline BipGraph double_cover(const CellIndexedMatrix& p) { return p.data; }

// The cell product read as an ordinary multigraph with loops.
inline LoopGraph as_loop_graph(const CellIndexedMatrix& p) {
  return LoopGraph(p.data);
}

// Left (a, c) -> a * |L_H| + c, right (b, d) -> b * |R_H| + d.
inline BipGraph bigraph_tensor(const BipGraph& g, const BipGraph& h) {
  BipGraph out(g.rows * h.rows, g.cols * h.cols);
  for (int a = 0; a < g.rows; ++a)
    for (int b = 0; b < g.cols; ++b) {
      if (g(a, b) == 0) continue;
      for (int c = 0; c < h.rows; ++c)
        for (int d = 0; d < h.cols; ++d)
          out(a * h.rows + c, b * h.cols + d) = g(a, b) * h(c, d);
    }
  return out;
}

inline BipGraph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw PreconditionError("complete_bipartite needs p, q >= 1");
  return BipGraph(p, q, 1);
}

// 0/1 matrix with the support of m.
inline WeightMatrix support(const WeightMatrix& m) {
  WeightMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = m.data[i] != 0;
  return out;
}

}  // namespace bireg
