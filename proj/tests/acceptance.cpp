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

// Acceptance suite: one PASS/FAIL line per criterion. Exit 0 when all pass,
// 2 when a conjecture sweep found a counterexample (its certificate is
// printed), 1 otherwise.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bireg/certificate.hpp"
#include "bireg/certificate_check.hpp"
#include "bireg/coloring.hpp"
#include "bireg/inequality.hpp"
#include "bireg/involution.hpp"
#include "bireg/oracle.hpp"
#include "bireg/random.hpp"
#include "bireg/tensor.hpp"
#include "support.hpp"

namespace bireg {
namespace {

using testing::all_ones_after;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every certificate emitted by the criteria, re-checked in the last one.
std::vector<json> g_certificates;
bool g_counterexample = false;

const std::vector<std::pair<int, int>> kExhaustiveShapes{{1, 1}, {2, 2}, {2, 3},
                                                         {3, 3}, {2, 4}, {3, 4}};

// Direct recount of [u2 o psi, v1].
WeightMatrix recount(const LabeledBigraph& from, const LabeledBigraph& to,
                     const std::vector<int>& psi) {
  WeightMatrix out(to.left_size, from.right_size);
  for (int e = 0; e < from.edge_count(); ++e)
    ++out(to.edges[psi[e]].first, from.edges[e].second);
  return out;
}

Outcome criterion1() {
  Outcome o;
  std::uint64_t total = 0, found = 0;
  for (const auto& [n, k] : kExhaustiveShapes)
    enumerate_bnk(n, k, [&](const WeightMatrix& b) {
      ++total;
      const auto g = instance_from_matrix(b);
      const auto iota = brute_force_involution(g);
      if (iota && all_ones_after(g, iota->map)) {
        ++found;
        if (total % 50 == 1)
          g_certificates.push_back(balls_certificate(g, *iota, "brute-force"));
      }
    });
  o.pass = found == total && total > 0;
  o.detail = std::to_string(found) + "/" + std::to_string(total) + " instances";
  return o;
}

Outcome criterion2() {
  Outcome o;
  Rng rng(2);
  int solved = 0, total = 0, compared = 0, agreed = 0;
  auto run = [&](int n, int k) {
    ++total;
    const auto g = random_instance(n, k, rng, 500);
    try {
      const auto s = solve_balls(g);
      const bool ok = all_ones_after(g, s.iota.map);
      solved += ok;
      if (total % 10 == 0) g_certificates.push_back(balls_certificate(g, s));
      if (n * k <= 12) {
        ++compared;
        agreed += brute_force_involution(g).has_value() == ok;
      }
    } catch (const Error&) {
      if (n * k <= 12) ++compared;
    }
  };
  int drawn = 0;
  while (drawn < 450) {
    const int n = rng.range(2, 7), eps = rng.range(-2, 2);
    const int m = rng.range(eps < 0 ? 1 : 0, 30 / n);
    const int k = m * n + eps;
    if (std::abs(eps) >= n || k < 1 || k > 30) continue;
    run(n, k);
    ++drawn;
  }
  for (int k : {9, 15, 21})
    for (int rep = 0; rep < 30; ++rep) run(6, k);
  o.pass = solved == total && agreed == compared && compared > 0;
  o.detail = std::to_string(solved) + "/" + std::to_string(total) + " solved, " +
             std::to_string(agreed) + "/" + std::to_string(compared) +
             " agree with brute force";
  return o;
}

Outcome criterion3() {
  Outcome o;
  Rng rng(3);
  int good = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int m = rng.range(1, 5);
    const auto g = testing::random_multigraph(rng, rng.range(1, 8), rng.range(1, 8),
                                              rng.range(0, 60));
    const auto w = balanced_coloring(g, m);
    std::vector<std::vector<int>> left(g.left_size, std::vector<int>(m)),
        right(g.right_size, std::vector<int>(m));
    for (int e = 0; e < g.edge_count(); ++e) {
      ++left[g.edges[e].first][w.colors[e]];
      ++right[g.edges[e].second][w.colors[e]];
    }
    bool ok = w.palette == m;
    for (const auto* side : {&left, &right})
      for (const auto& d : *side)
        ok = ok && *std::max_element(d.begin(), d.end()) -
                           *std::min_element(d.begin(), d.end()) <=
                       1;
    good += ok;
  }
  o.pass = good == 500;
  o.detail = std::to_string(good) + "/500 colorings balanced";
  return o;
}

// [w, v] all-ones and [u, w] in {m, m + sgn(eps)} with |eps| exceptions per
// row and column.
bool wind_ok(const LabeledBigraph& g, const Coloring& w, int m, int eps) {
  const int n = g.left_size, k = g.right_size;
  std::vector<std::vector<int>> wv(n, std::vector<int>(k)), uw(n, std::vector<int>(n));
  for (int e = 0; e < g.edge_count(); ++e) {
    ++wv[w.colors[e]][g.edges[e].second];
    ++uw[g.edges[e].first][w.colors[e]];
  }
  for (const auto& row : wv)
    for (int x : row)
      if (x != 1) return false;
  const int sign = (eps > 0) - (eps < 0);
  std::vector<int> rows(n, 0), cols(n, 0);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < n; ++f) {
      if (uw[i][f] != m && uw[i][f] != m + sign) return false;
      if (sign && uw[i][f] == m + sign) ++rows[i], ++cols[f];
    }
  for (int i = 0; i < n; ++i)
    if (rows[i] != std::abs(eps) || cols[i] != std::abs(eps)) return false;
  return true;
}

// One cycle through all 2n vertices of the exceptional graph.
bool single_cycle(const WeightMatrix& e) {
  const int n = e.rows;
  for (int i = 0; i < n; ++i)
    if (e.row_sum(i) != 2 || e.col_sum(i) != 2) return false;
  std::vector<int> seen(2 * n, 0);
  int x = 0, prev = -1, steps = 0;
  do {
    seen[x] = 1;
    int next = -1;
    for (int y = 0; y < n && next < 0; ++y) {
      const int other = x < n ? n + y : y;
      const bool edge = x < n ? e(x, y) : e(y, x - n);
      if (edge && other != prev) next = other;
    }
    prev = x;
    x = next;
    ++steps;
  } while (x > 0 && steps <= 2 * n);
  return x == 0 && steps == 2 * n &&
         std::count(seen.begin(), seen.end(), 1) == 2 * n;
}

Outcome criterion4() {
  Outcome o;
  Rng rng(4);
  int wind_good = 0, wind_total = 0;
  while (wind_total < 300) {
    const int n = rng.range(2, 7), eps = rng.range(-2, 2);
    const int m = rng.range(eps < 0 ? 1 : 0, 4);
    const int k = m * n + eps;
    if (std::abs(eps) >= n || k < 1 || k > 30) continue;
    ++wind_total;
    const auto g = random_instance(n, k, rng, 500);
    try {
      wind_good += wind_ok(g, wind_coloring(g, {m, eps}).coloring, m, eps);
    } catch (const Error&) {
    }
  }
  int ham_good = 0;
  for (int run = 0; run < 200; ++run) {
    const int n = 3 + run % 5, eps = run % 2 ? 2 : -2;
    const int m = rng.range(1, 4);
    const int k = m * n + eps;
    const auto g = random_instance(n, k, rng, 500);
    try {
      const auto w = wind_coloring(g, {m, eps});
      const auto h = make_hamiltonian(g, w.coloring, {m, eps});
      bool ok = wind_ok(g, h.coloring, m, eps) && single_cycle(h.exceptional.edges) &&
                !h.component_history.empty() && h.component_history.back() == 1;
      for (std::size_t i = 1; i < h.component_history.size(); ++i)
        ok = ok && h.component_history[i] < h.component_history[i - 1];
      ham_good += ok;
    } catch (const Error&) {
    }
  }
  o.pass = wind_good == 300 && ham_good == 200;
  o.detail = std::to_string(wind_good) + "/300 wind colorings, " +
             std::to_string(ham_good) + "/200 single cycles";
  return o;
}

// h(G) >= p/q exactly when G (x) K_{p,q} matches its left part.
bool tensor_with_kl(const BipGraph& g) {
  const Rational h = hall_coefficient(g).value;
  if (h != testing::brute_hall(g)) return false;
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      if ((h >= Rational(p, q)) !=
          (max_bipartite_matching(bigraph_tensor(g, complete_bipartite(p, q)))
               .left_perfect()))
        return false;
  return true;
}

Outcome criterion5() {
  Outcome o;
  int all = 0;
  for (int mask = 0; mask < 512; ++mask) {
    BipGraph g(3, 3);
    for (int i = 0; i < 9; ++i) g.data[i] = mask >> i & 1;
    all += tensor_with_kl(g);
  }
  Rng rng(5);
  int larger = 0;
  for (int trial = 0; trial < 200; ++trial)
    larger += tensor_with_kl(
        testing::random_bipartite(rng, rng.range(4, 6), rng.range(4, 7), 0.45, 2));
  int mult = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_bipartite(rng, rng.range(1, 5), rng.range(1, 5), 0.5);
    const auto h = testing::random_bipartite(rng, rng.range(1, 5), rng.range(1, 5), 0.5);
    mult += hall_coefficient(bigraph_tensor(g, h), 25).value ==
            testing::brute_hall(g) * testing::brute_hall(h);
  }
  o.pass = all == 512 && larger == 200 && mult == 100;
  o.detail = std::to_string(all) + "/512 3x3 graphs, " + std::to_string(larger) +
             "/200 larger, " + std::to_string(mult) + "/100 products";
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(6);
  int done = 0, good = 0;
  while (done < 200) {
    const int n1 = rng.range(1, 6), k1 = rng.range(1, 6), n2 = rng.range(1, 6),
              k2 = rng.range(1, 6);
    if (n1 * k2 != k1 * n2) continue;
    const auto m1 = random_margins(n1, k1, k2, n2, rng, 300);
    const auto m2 = random_margins(n2, k2, k1, n1, rng, 300);
    const auto product = bigraph_tensor(m1, m2.transposed());
    const auto matching = max_bipartite_matching(product);
    good += product.rows == product.cols && matching.left_perfect();
    if (done % 20 == 0) g_certificates.push_back(bipartite_certificate(product, matching));
    ++done;
  }
  o.pass = good == 200;
  o.detail = std::to_string(good) + "/200 perfect matchings";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(7);
  int done = 0, good = 0;
  while (done < 200) {
    LabeledBigraph g1, g2;
    if (done % 2 == 0) {
      const int n = rng.range(2, 7), k = rng.range(1, 20);
      if (!is_covered(n, k) || covered_route(n, k).kind != BallsRoute::Kind::kWind)
        continue;
      g1 = random_instance(n, k, rng, 300);
      g2 = random_instance(n, k, rng, 300);
    } else {
      const int n1 = rng.range(1, 4), m = rng.range(1, 3), n2 = rng.range(1, 5);
      const int k1 = m * n1, k2 = m * n2;
      g1 = instance_from_matrix(random_margins(n1, k1, k2, n2, rng, 300));
      g2 = instance_from_matrix(random_margins(n2, k2, k1, n1, rng, 300));
      rng.shuffle(g1.edges);
      rng.shuffle(g2.edges);
    }
    ++done;
    try {
      const auto s = solve_4parts(g1, g2);
      std::vector<int> inv(s.psi.size());
      for (std::size_t e = 0; e < s.psi.size(); ++e) inv[s.psi[e]] = static_cast<int>(e);
      good += recount(g1, g2, s.psi) == WeightMatrix(g2.left_size, g1.right_size, 1) &&
              recount(g2, g1, inv) == WeightMatrix(g1.left_size, g2.right_size, 1);
      if (done % 10 == 0) g_certificates.push_back(four_parts_certificate(g1, g2, s));
    } catch (const Error&) {
    }
  }
  o.pass = good == 200;
  o.detail = std::to_string(good) + "/200 bijections";
  return o;
}

Outcome criterion8() {
  Outcome o;
  Rng rng(8);
  int good = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = testing::random_loop_graph(rng, rng.range(1, 8), 0.3, 0.15);
    const auto r = perfect_matching_with_loops(g);
    good += r.success() == testing::brute_loop_matching(g);
    if (trial % 25 == 0) g_certificates.push_back(loop_matching_certificate(g, r));
  }
  o.pass = good == 1000;
  o.detail = std::to_string(good) + "/1000 agree";
  return o;
}

Outcome criterion9() {
  Outcome o;
  Rng rng(9);
  int random_clean = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int size = trial % 2 ? 5 : 4;
    WeightMatrix w(size, size);
    for (auto& x : w.data) x = rng.chance(0.4) ? 0 : rng.range(1, 9);
    const auto rep = exhaustive_check(RationalMatrix(w), 9);
    random_clean += !rep.violated;
    if (rep.violated) {
      g_counterexample = true;
      std::cout << canonical(inequality_certificate({RationalMatrix(w), rep.worst}))
                << "\n";
    }
  }
  std::uint64_t bnk = 0, bnk_clean = 0;
  for (const auto& [n, k] : kExhaustiveShapes)
    enumerate_bnk(n, k, [&](const WeightMatrix& b) {
      ++bnk;
      const auto rep = exhaustive_check(RationalMatrix(b), 9);
      bnk_clean += !rep.violated;
      if (rep.violated) {
        g_counterexample = true;
        std::cout << canonical(inequality_certificate({RationalMatrix(b), rep.worst}))
                  << "\n";
      }
    });
  int square = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int t = 2 * rng.range(0, 3) + 1;
    const int size = rng.range(t, t + 2);
    WeightMatrix w(size, size);
    for (auto& x : w.data) x = rng.chance(0.3) ? 0 : rng.range(1, 9);
    std::vector<int> rows(size), cols(size);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    rng.shuffle(rows);
    rng.shuffle(cols);
    std::vector<Cell> cells;
    for (int i = 0; i < t; ++i) {
      w(rows[i], cols[i]) = 0;
      cells.emplace_back(rows[i], cols[i]);
    }
    const auto rep = square_case_certificate({RationalMatrix(w), cells});
    const double lhs = to_double(rep.sides.lhs);
    square += rep.passed() &&
              std::abs(rep.eigen_sum) <= 1e-9 * t * std::max(rep.kappa, 1.0) &&
              std::abs(rep.eigen_square_sum - lhs) <= 1e-6 * std::max(1.0, lhs);
  }
  WeightMatrix j(3, 3, 1);
  for (int i = 0; i < 3; ++i) j(i, i) = 0;
  const auto sides = inequality_sides({RationalMatrix(j), {{0, 0}, {1, 1}, {2, 2}}});
  const bool example = sides.lhs == 6 && sides.rhs == 8;
  o.pass = random_clean == 500 && bnk_clean == bnk && square == 200 && example;
  o.detail = std::to_string(random_clean) + "/500 random, " + std::to_string(bnk_clean) +
             "/" + std::to_string(bnk) + " B(n,k), " + std::to_string(square) +
             "/200 square certificates, example lhs=" + to_string(sides.lhs) +
             " rhs=" + to_string(sides.rhs);
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto report = [&](const json& cert) {
    g_counterexample = true;
    std::cout << canonical(cert) << "\n";
  };
  int higgins_counter = 0, vacuous = 0;
  for (int mask = 0; mask < 512; ++mask) {
    WeightMatrix m(3, 3);
    for (int i = 0; i < 9; ++i) m.data[i] = mask >> i & 1;
    const auto v = verify_higgins(m);
    vacuous += v.status == HigginsStatus::kVacuous;
    if (v.status == HigginsStatus::kCounterexample) {
      ++higgins_counter;
      report(loop_matching_certificate(as_loop_graph(symmetric_product(m)), v.ordinary));
    }
  }
  int weak_counter = 0, weak_total = 0;
  enumerate_bnk(3, 3, [&](const WeightMatrix& b) {
    ++weak_total;
    const auto v = verify_weak_balls(b);
    if (!v.holds) {
      ++weak_counter;
      report(loop_matching_certificate(as_loop_graph(symmetric_product(b)), v.matching));
    } else if (weak_total % 5 == 0) {
      g_certificates.push_back(
          loop_matching_certificate(as_loop_graph(symmetric_product(b)), v.matching));
    }
  });
  int h_one = 0, h_total = 0;
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}})
    enumerate_bnk(n, k, [&](const WeightMatrix& b) {
      ++h_total;
      h_one += verify_equivalence_direction(b).value == 1;
    });
  o.pass = higgins_counter == 0 && weak_counter == 0 && h_one == h_total;
  o.detail = "higgins " + std::to_string(higgins_counter) + "/" +
             std::to_string(512 - vacuous) + " non-vacuous violated, weak balls " +
             std::to_string(weak_counter) + "/" + std::to_string(weak_total) +
             " violated, h=1 on " + std::to_string(h_one) + "/" + std::to_string(h_total);
  return o;
}

// Entry i of `key` takes the value of entry i + 1 (or -1 when they agree).
void mutate_arrays(const json& cert, const char* key, int& total, int& rejected) {
  if (!cert.contains(key)) return;
  const auto n = cert[key].size();
  for (std::size_t i = 0; i < n; ++i) {
    auto bad = cert;
    bad[key][i] = cert[key][(i + 1) % n];
    if (bad[key][i] == cert[key][i]) bad[key][i] = -1;
    ++total;
    rejected += !certificate_check(bad).ok;
  }
}

// Right label of edge e moved to the next color.
void mutate_edges(const json& cert, const char* key, int& total, int& rejected) {
  if (!cert.contains(key)) return;
  const int k = cert[key]["k"].get<int>();
  if (k < 2) return;
  for (std::size_t e = 0; e < cert[key]["edges"].size(); ++e) {
    auto bad = cert;
    bad[key]["edges"][e][1] = (cert[key]["edges"][e][1].get<int>() + 1) % k;
    ++total;
    rejected += !certificate_check(bad).ok;
  }
}

Outcome criterion11() {
  Outcome o;
  int valid = 0, total = 0, rejected = 0;
  for (const auto& cert : g_certificates) {
    valid += certificate_check(json::parse(canonical(cert))).ok;
    for (const char* key : {"involution", "psi", "theta", "mate", "set"})
      mutate_arrays(cert, key, total, rejected);
    for (const char* key : {"instance", "instance1", "instance2"})
      mutate_edges(cert, key, total, rejected);
  }
  const int certs = static_cast<int>(g_certificates.size());
  o.pass = certs > 0 && valid == certs && total > 0 && rejected == total;
  o.detail = std::to_string(valid) + "/" + std::to_string(certs) +
             " certificates valid, " + std::to_string(rejected) + "/" +
             std::to_string(total) + " mutations rejected";
  return o;
}

}  // namespace
}  // namespace bireg

int main() {
  using namespace bireg;
  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,  criterion6,
      criterion7, criterion8, criterion9, criterion10, criterion11};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
    all = all && o.pass;
    std::printf("criterion %2zu: %s  %s (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  if (g_counterexample) return 2;
  return all ? 0 : 1;
}
