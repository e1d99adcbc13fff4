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

// The zero-cell matrix inequality
//
//   sum_{i,j} M(x_i, y_j) M(x_j, y_i) <= (t - 1) |M|_inf |M|_1
//
// for odd t and distinct zero cells (x_i, y_i). Both sides are exact
// rationals; floating point only enters the spectral certificate of the
// square case (distinct x_i and distinct y_i).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bireg/core.hpp"
#include "bireg/random.hpp"
#include "bireg/rational.hpp"

namespace bireg {

using Cell = std::pair<int, int>;

struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c) {}
  explicit RationalMatrix(const WeightMatrix& m) : RationalMatrix(m.rows, m.cols) {
    for (std::size_t i = 0; i < m.data.size(); ++i) data[i] = Rational(m.data[i]);
  }

  Rational& operator()(int r, int c) { return data[std::size_t(r) * cols + c]; }
  const Rational& operator()(int r, int c) const {
    return data[std::size_t(r) * cols + c];
  }

  // Maximum row l1-norm.
  Rational inf_norm() const {
    Rational best(0);
    for (int r = 0; r < rows; ++r) {
      Rational s(0);
      for (int c = 0; c < cols; ++c) s += (*this)(r, c);
      best = std::max(best, s);
    }
    return best;
  }
  // Maximum column l1-norm.
  Rational one_norm() const {
    Rational best(0);
    for (int c = 0; c < cols; ++c) {
      Rational s(0);
      for (int r = 0; r < rows; ++r) s += (*this)(r, c);
      best = std::max(best, s);
    }
    return best;
  }

  std::vector<Cell> zero_cells() const {
    std::vector<Cell> out;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if ((*this)(r, c) == 0) out.emplace_back(r, c);
    return out;
  }
};

struct InequalityInstance {
  RationalMatrix matrix;
  std::vector<Cell> cells;

  int t() const { return static_cast<int>(cells.size()); }

  // Distinct in-range zero cells, odd count, non-negative entries.
  void validate() const {
    if (matrix.rows < 1 || matrix.cols < 1)
      throw PreconditionError("inequality matrix must be non-empty");
    for (const auto& x : matrix.data)
      if (x < 0) throw PreconditionError("inequality matrix must be non-negative");
    if (cells.empty() || cells.size() % 2 == 0)
      throw PreconditionError("the number of cells must be odd");
    std::set<Cell> seen;
    for (const auto& [x, y] : cells) {
      if (x < 0 || x >= matrix.rows || y < 0 || y >= matrix.cols)
        throw PreconditionError("cell outside the matrix");
      if (matrix(x, y) != 0) throw PreconditionError("cell is not a zero entry");
      if (!seen.insert({x, y}).second) throw PreconditionError("repeated cell");
    }
  }
};

struct InequalitySides {
  Rational lhs;
  Rational rhs;
  Rational slack() const { return rhs - lhs; }
  bool holds() const { return lhs <= rhs; }
};

// sum_{i,j} M(x_i, y_j) M(x_j, y_i); no validation.
inline Rational cross_sum(const RationalMatrix& m, const std::vector<Cell>& cells) {
  Rational s(0);
  for (const auto& [xi, yi] : cells)
    for (const auto& [xj, yj] : cells) s += m(xi, yj) * m(xj, yi);
  return s;
}

inline InequalitySides inequality_sides(const InequalityInstance& inst) {
  inst.validate();
  return {cross_sum(inst.matrix, inst.cells),
          Rational(inst.t() - 1) * inst.matrix.inf_norm() * inst.matrix.one_norm()};
}

struct ExhaustiveReport {
  int zero_cells = 0;
  std::uint64_t subsets = 0;
  // Largest lhs - rhs seen and the first subset attaining it.
  std::optional<Rational> max_excess;
  std::vector<Cell> worst;
  bool violated = false;

  bool vacuous() const { return subsets == 0; }
};

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace detail

// All odd-size subsets (size <= max_t) of the zero cells, in order of size
// and then lexicographically.
inline ExhaustiveReport exhaustive_check(const RationalMatrix& m, int max_t,
                                         std::uint64_t budget = 50'000'000) {
  ExhaustiveReport report;
  const auto zeros = m.zero_cells();
  const int z = static_cast<int>(zeros.size());
  report.zero_cells = z;
  std::uint64_t total = 0;
  for (int t = 1; t <= std::min(max_t, z); t += 2) {
    total += detail::binomial(z, t);
    if (total > budget)
      throw BudgetExceeded("exhaustive_check subset count over budget", 0);
  }
  const Rational scale = m.inf_norm() * m.one_norm();
  std::vector<Cell> subset;
  std::vector<int> idx;
  for (int t = 1; t <= std::min(max_t, z); t += 2) {
    idx.resize(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    for (;;) {
      subset.clear();
      for (int i : idx) subset.push_back(zeros[i]);
      const Rational excess = cross_sum(m, subset) - Rational(t - 1) * scale;
      ++report.subsets;
      if (!report.max_excess || excess > *report.max_excess) {
        report.max_excess = excess;
        report.worst = subset;
      }
      int pos = t - 1;
      while (pos >= 0 && idx[pos] == z - t + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  report.violated = report.max_excess && *report.max_excess > 0;
  return report;
}

struct LambdaBound {
  bool constraints_ok = false;  // odd t, |lambda| <= kappa, sum == 0
  bool bound_ok = false;        // sum lambda^2 <= (t - 1) kappa^2
  double sum_squares = 0;
  double limit = 0;
};

// For odd t, lambdas in [-kappa, kappa] summing to zero have
// sum lambda^2 <= (t - 1) kappa^2.
inline LambdaBound lambdas_bound(const std::vector<double>& lambdas, double kappa,
                                 double tol = 1e-9) {
  LambdaBound r;
  const auto t = static_cast<double>(lambdas.size());
  const double scale = std::max(1.0, kappa);
  double sum = 0;
  bool in_box = true;
  for (double l : lambdas) {
    sum += l;
    r.sum_squares += l * l;
    in_box = in_box && std::abs(l) <= kappa + tol * scale;
  }
  r.constraints_ok = lambdas.size() % 2 == 1 && in_box &&
                     std::abs(sum) <= tol * t * scale;
  r.limit = (t - 1) * kappa * kappa;
  r.bound_ok = r.sum_squares <= r.limit + tol * t * scale * scale;
  return r;
}

struct SquareCaseReport {
  std::vector<double> eigenvalues;  // ascending
  double kappa = 0;                 // sqrt(|M|_inf |M|_1)
  double eigen_sum = 0;
  double eigen_square_sum = 0;
  InequalitySides sides;
  bool trace_ok = false;    // |sum lambda| <= 1e-9 t kappa
  bool range_ok = false;    // |lambda| <= kappa (+ tolerance)
  bool squares_ok = false;  // |sum lambda^2 - lhs| <= 1e-6 max(1, lhs)
  bool bound_ok = false;    // lambdas_bound holds
  bool holds = false;       // exact lhs <= rhs

  bool passed() const {
    return trace_ok && range_ok && squares_ok && bound_ok && holds;
  }
};

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Builds B(i, j) = sqrt(M(x_i, y_j) M(x_j, y_i)), which is symmetric with a
// zero diagonal, and checks the eigenvalue chain: trace 0, spectrum inside
// [-kappa, kappa], sum of squares = lhs, and the odd-t bound.
inline SquareCaseReport square_case_certificate(const InequalityInstance& inst) {
  inst.validate();
  const int t = inst.t();
  {
    std::set<int> xs, ys;
    for (const auto& [x, y] : inst.cells) {
      xs.insert(x);
      ys.insert(y);
    }
    if (static_cast<int>(xs.size()) != t || static_cast<int>(ys.size()) != t)
      throw PreconditionError("square case needs distinct rows and columns");
  }
  SquareCaseReport rep;
  rep.sides = inequality_sides(inst);
  rep.holds = rep.sides.holds();
  const auto& m = inst.matrix;
  Eigen::MatrixXd b(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      b(i, j) = std::sqrt(to_double(m(inst.cells[i].first, inst.cells[j].second) *
                                    m(inst.cells[j].first, inst.cells[i].second)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error("eigenvalue computation did not converge");
  for (int i = 0; i < t; ++i) rep.eigenvalues.push_back(solver.eigenvalues()(i));
  rep.kappa = std::sqrt(to_double(m.inf_norm() * m.one_norm()));
  for (double l : rep.eigenvalues) {
    rep.eigen_sum += l;
    rep.eigen_square_sum += l * l;
  }
  const double lhs = to_double(rep.sides.lhs);
  rep.trace_ok = std::abs(rep.eigen_sum) <= 1e-9 * t * std::max(rep.kappa, 1.0);
  rep.range_ok = std::all_of(rep.eigenvalues.begin(), rep.eigenvalues.end(),
                             [&](double l) {
                               return std::abs(l) <=
                                      rep.kappa + 1e-9 * std::max(1.0, rep.kappa);
                             });
  rep.squares_ok = std::abs(rep.eigen_square_sum - lhs) <= 1e-6 * std::max(1.0, lhs);
  const auto lb = lambdas_bound(rep.eigenvalues, rep.kappa);
  rep.bound_ok = lb.constraints_ok && lb.bound_ok;
  return rep;
}

struct SearchReport {
  int rows = 0;
  int cols = 0;
  double density = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t evaluated = 0;  // trials that had at least one zero cell
  std::uint64_t violations = 0;
  // Minimum rhs - lhs and the first instance attaining it.
  std::optional<Rational> min_slack;
  std::optional<InequalityInstance> witness;
};

// Entries are 0 with probability `density`, else uniform on {1, ..., 9};
// t is a uniform odd size up to min(#zeros, max_t) and the cells a uniform
// subset of the zero cells.
inline SearchReport random_counterexample_search(int rows, int cols,
                                                 double density,
                                                 std::uint64_t trials,
                                                 std::uint64_t seed,
                                                 int max_t = 9) {
  if (rows < 1 || cols < 1) throw PreconditionError("shape must be positive");
  SearchReport rep{rows, cols, density, trials, seed, 0, 0, {}, {}};
  Rng rng(seed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    RationalMatrix m(rows, cols);
    for (auto& x : m.data) x = rng.chance(density) ? 0 : rng.range(1, 9);
    auto zeros = m.zero_cells();
    if (zeros.empty()) continue;
    const int top = std::min<int>(static_cast<int>(zeros.size()), max_t);
    const int t = 2 * rng.range(0, (top - 1) / 2) + 1;
    for (int i = 0; i < t; ++i)
      std::swap(zeros[i], zeros[i + rng.below(zeros.size() - i)]);
    zeros.resize(t);
    InequalityInstance inst{std::move(m), std::move(zeros)};
    const auto sides = inequality_sides(inst);
    ++rep.evaluated;
    if (!sides.holds()) ++rep.violations;
    if (!rep.min_slack || sides.slack() < *rep.min_slack) {
      rep.min_slack = sides.slack();
      rep.witness = std::move(inst);
    }
  }
  return rep;
}

}  // namespace bireg
