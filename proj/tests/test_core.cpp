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

#include <gtest/gtest.h>

#include <numeric>

#include "bireg/core.hpp"
#include "bireg/json_io.hpp"
#include "bireg/random.hpp"
#include "support.hpp"

namespace bireg {
namespace {

WeightMatrix mat(int rows, int cols, std::vector<std::int64_t> data) {
  WeightMatrix m(rows, cols);
  m.data = std::move(data);
  return m;
}

TEST(Bracket, CountsEdgesPerPair) {
  EXPECT_EQ(bracket({2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}), uniform_matrix(2, 2));
  EXPECT_EQ(bracket({2, 2, {{0, 0}, {0, 0}, {1, 1}, {1, 1}}}), mat(2, 2, {2, 0, 0, 2}));
  EXPECT_EQ(bracket({1, 3, {{0, 0}, {0, 1}, {0, 2}}}), mat(1, 3, {1, 1, 1}));
}

TEST(Bracket, PairOfArbitraryLabelings) {
  const std::vector<int> zeros{0, 0, 0};
  EXPECT_EQ(bracket_pair(zeros, 1, zeros, 1), mat(1, 1, {3}));

  const LabeledBigraph g{2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 1}}};
  const std::vector<int> constant(5, 0);
  EXPECT_EQ(bracket_pair(g.left_labels(), 2, constant, 1), mat(2, 1, {2, 3}));
  EXPECT_THROW(bracket_pair(zeros, 1, constant, 1), PreconditionError);
  EXPECT_THROW(bracket_pair(std::vector<int>{1}, 1, std::vector<int>{0}, 1),
               PreconditionError);
}

TEST(Uniform, AllOnes) {
  EXPECT_EQ(uniform_matrix(2, 3), mat(2, 3, {1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(uniform_matrix(1, 1), mat(1, 1, {1}));
  EXPECT_EQ(uniform_matrix(3, 1), mat(3, 1, {1, 1, 1}));
  EXPECT_THROW(uniform_matrix(0, 2), PreconditionError);
}

TEST(InstanceFromMatrix, RowMajorExpansion) {
  const auto g = instance_from_matrix(mat(2, 2, {2, 0, 0, 2}));
  EXPECT_EQ(g.edges, (std::vector<std::pair<int, int>>{{0, 0}, {0, 0}, {1, 1}, {1, 1}}));
  const auto ones = instance_from_matrix(uniform_matrix(2, 2));
  EXPECT_EQ(ones.edge_count(), 4);
  EXPECT_EQ(bracket(ones), uniform_matrix(2, 2));
}

TEST(InstanceFromMatrix, DegreesForB34) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = instance_from_matrix(random_bnk(3, 4, rng));
    EXPECT_TRUE(g.in_ank());
    for (int d : g.left_degrees()) EXPECT_EQ(d, 4);
    for (int d : g.right_degrees()) EXPECT_EQ(d, 3);
  }
}

TEST(ApplyInvolution, Relabels) {
  const LabeledBigraph g{2, 2, {{0, 0}, {0, 0}, {1, 1}, {1, 1}}};
  EXPECT_EQ(apply_involution(g, Involution::identity(4)), g);
  const auto swapped = apply_involution(g, Involution{{2, 3, 0, 1}});
  EXPECT_EQ(swapped.edges,
            (std::vector<std::pair<int, int>>{{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
  EXPECT_EQ(bracket(swapped), mat(2, 2, {0, 2, 2, 0}));
  EXPECT_THROW(apply_involution(g, Involution::identity(3)), PreconditionError);
}

TEST(ApplyInvolution, PreservesRightLabels) {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_instance(3, 4, rng, 200);
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    Involution iota = Involution::identity(g.edge_count());
    for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
      iota.map[order[i]] = order[i + 1];
      iota.map[order[i + 1]] = order[i];
    }
    ASSERT_TRUE(iota.valid());
    const auto h = apply_involution(g, iota);
    EXPECT_EQ(h.right_labels(), g.right_labels());
    auto a = h.left_labels(), b = g.left_labels();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

// [u o s, v] = [u, v o s^-1] for any permutation s of the edges.
TEST(Bracket, ActionCompatibility) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.range(1, 5), k = rng.range(1, 6);
    const auto g = random_instance(n, k, rng, 300);
    Permutation s = Permutation::identity(g.edge_count());
    rng.shuffle(s.map);
    const auto lhs = bracket_pair(pull_back_left(g, s.map), n, g.right_labels(), k);
    const auto v = g.right_labels();
    std::vector<int> v_inv(v.size());
    const auto inv = s.inverse();
    for (std::size_t e = 0; e < v.size(); ++e) v_inv[e] = v[inv(static_cast<int>(e))];
    EXPECT_EQ(lhs, bracket_pair(g.left_labels(), n, v_inv, k));
  }
}

TEST(Permutation, GroupOperations) {
  const Permutation p{{2, 0, 1}}, q{{1, 0, 2}};
  EXPECT_TRUE(p.valid());
  EXPECT_FALSE((Permutation{{0, 0, 1}}).valid());
  EXPECT_EQ(p.compose(p.inverse()), Permutation::identity(3));
  EXPECT_EQ(p.compose(q).map, (std::vector<int>{0, 2, 1}));
  EXPECT_TRUE((Involution{{1, 0, 2}}).valid());
  EXPECT_FALSE((Involution{{1, 2, 0}}).valid());
  EXPECT_EQ((Involution{{1, 0, 2}}).fixed_points(), 1);
}

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(collect_bnk(1, 1), (std::vector<WeightMatrix>{mat(1, 1, {1})}));
  EXPECT_EQ(collect_bnk(2, 2),
            (std::vector<WeightMatrix>{mat(2, 2, {0, 2, 2, 0}), mat(2, 2, {1, 1, 1, 1}),
                                       mat(2, 2, {2, 0, 0, 2})}));
}

TEST(Enumerate, CountsMatchRecursiveCounter) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) {
      std::vector<WeightMatrix> seen;
      const auto count = enumerate_bnk(n, k, [&](const WeightMatrix& m) {
        EXPECT_TRUE(m.in_bnk(n, k));
        if (!seen.empty()) {
          EXPECT_TRUE(seen.back().data < m.data);  // strictly lexicographic
        }
        seen.push_back(m);
      });
      EXPECT_EQ(count, testing::count_bnk(n, k)) << n << "x" << k;
    }
  EXPECT_EQ(testing::count_bnk(2, 3), 7u);
  EXPECT_EQ(testing::count_bnk(3, 3), 55u);
}

TEST(Enumerate, RoundTripThroughInstances) {
  enumerate_bnk(3, 4, [](const WeightMatrix& m) {
    EXPECT_EQ(bracket(instance_from_matrix(m)), m);
  });
}

TEST(Enumerate, BudgetAndPrefixShards) {
  try {
    enumerate_bnk(3, 3, [](const WeightMatrix&) {}, {10, {}});
    FAIL() << "expected budget exceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.progress(), 10u);
  }
  std::uint64_t total = 0;
  for (std::int64_t first = 0; first <= 3; ++first)
    total += enumerate_bnk(3, 3, [](const WeightMatrix&) {},
                           {std::numeric_limits<std::uint64_t>::max(), {first}});
  EXPECT_EQ(total, 55u);
}

TEST(Json, InstanceAndMatrixRoundTrip) {
  const LabeledBigraph g{2, 3, {{0, 1}, {1, 2}, {0, 0}}};
  const auto text = canonical(instance_to_json(g));
  EXPECT_EQ(text, R"({"edges":[[0,1],[1,2],[0,0]],"k":3,"n":2})");
  EXPECT_EQ(instance_from_json(json::parse(text)), g);
  EXPECT_EQ(canonical(instance_to_json(instance_from_json(json::parse(text)))), text);

  const auto m = mat(2, 2, {1, 0, 3, 2});
  const auto mtext = canonical(matrix_to_json(m));
  EXPECT_EQ(mtext, R"({"cols":2,"data":[[1,0],[3,2]],"rows":2})");
  EXPECT_EQ(matrix_from_json(json::parse(mtext)), m);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(instance_from_json(json::parse(R"({"n":2,"k":2})")), PreconditionError);
  EXPECT_THROW(instance_from_json(json::parse(R"({"n":2,"k":2,"edges":[[2,0]]})")),
               PreconditionError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":1,"cols":2,"data":[[1]]})")),
               PreconditionError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"data":[[-1]]})")),
               PreconditionError);
}

TEST(Random, SamplerStaysInsideB) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.range(1, 6), k = rng.range(1, 6);
    EXPECT_TRUE(random_bnk(n, k, rng, 100).in_bnk(n, k));
  }
  EXPECT_EQ(random_instance(3, 5, 42), random_instance(3, 5, 42));
}

}  // namespace
}  // namespace bireg
