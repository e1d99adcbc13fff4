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

// Seeded randomness with platform-independent draws (the standard
// distributions are implementation-defined), plus the instance sampler.

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bireg/core.hpp"

namespace bireg {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, bound), rejection sampled.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t x = engine_();
      if (x < limit) return x % bound;
    }
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Evenly spread matrix with every row summing to row_sum and every column
// to col_sum: ball b in [0, rows * row_sum) goes to row b / row_sum and
// column b / col_sum.
inline WeightMatrix near_uniform_margins(int rows, int cols, int row_sum, int col_sum) {
  if (rows < 1 || cols < 1 || row_sum < 0 || col_sum < 0 ||
      std::int64_t{rows} * row_sum != std::int64_t{cols} * col_sum)
    throw PreconditionError("margins are inconsistent");
  WeightMatrix b(rows, cols);
  for (int ball = 0; ball < rows * row_sum; ++ball) ++b(ball / row_sum, ball / col_sum);
  return b;
}

inline WeightMatrix near_uniform_bnk(int n, int k) {
  return near_uniform_margins(n, k, k, n);
}

// Random walk by +-1 moves on 2 x 2 minors, which keep every row and
// column sum.
inline WeightMatrix random_margins(int rows, int cols, int row_sum, int col_sum,
                                   Rng& rng, int burn_in = 2000) {
  WeightMatrix b = near_uniform_margins(rows, cols, row_sum, col_sum);
  if (rows < 2 || cols < 2) return b;
  for (int step = 0; step < burn_in; ++step) {
    const int r1 = rng.range(0, rows - 1), r2 = rng.range(0, rows - 2);
    const int c1 = rng.range(0, cols - 1), c2 = rng.range(0, cols - 2);
    const int ra = r1, rb = r2 >= r1 ? r2 + 1 : r2;
    const int ca = c1, cb = c2 >= c1 ? c2 + 1 : c2;
    if (b(ra, cb) > 0 && b(rb, ca) > 0) {
      ++b(ra, ca);
      ++b(rb, cb);
      --b(ra, cb);
      --b(rb, ca);
    }
  }
  return b;
}

inline WeightMatrix random_bnk(int n, int k, Rng& rng, int burn_in = 2000) {
  return random_margins(n, k, k, n, rng, burn_in);
}

// Member of A(n, k) with a random bracket and shuffled edge order.
inline LabeledBigraph random_instance(int n, int k, Rng& rng, int burn_in = 2000) {
  auto g = instance_from_matrix(random_bnk(n, k, rng, burn_in));
  rng.shuffle(g.edges);
  return g;
}

inline LabeledBigraph random_instance(int n, int k, std::uint64_t seed,
                                      int burn_in = 2000) {
  Rng rng(seed);
  return random_instance(n, k, rng, burn_in);
}

}  // namespace bireg
