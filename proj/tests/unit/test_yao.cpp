// Copyright 2026 The qyao Authors.
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

#include <set>

#include "oracles.hpp"
#include "qyao/errors.hpp"
#include "qyao/yao.hpp"

using namespace qyao;

namespace {

BooleanFunction table_function(int n, std::uint64_t table) {
  std::vector<int> values;
  for (std::uint64_t w = 0; w < (1u << n); ++w) values.push_back(static_cast<int>((table >> w) & 1u));
  return BooleanFunction::from_truth_table(n, values, "table");
}

// Best mu-mass of a depth-<= d tree over the naive table set.
Rational best_mass(const std::set<std::uint64_t>& tables, const BooleanFunction& f, const InputDistribution& mu) {
  Rational best = 0;
  for (auto t : tables) {
    Rational mass = 0;
    for (const auto& e : mu.entries()) {
      if (static_cast<int>((t >> e.input.word()) & 1u) == f.evaluate(e.input)) mass += e.weight;
    }
    best = std::max(best, mass);
  }
  return best;
}

int brute_distributional(const BooleanFunction& f, const InputDistribution& mu, const Rational& eps) {
  for (int d = 0;; ++d) {
    if (best_mass(oracle::tree_tables(f.arity(), d), f, mu) >= 1 - eps) return d;
  }
}

Rational brute_game_value(const BooleanFunction& f, int d) {
  const auto inputs = f.domain();
  oracle::Matrix m;
  for (auto t : oracle::tree_tables(f.arity(), d)) {
    m.emplace_back();
    for (const auto& x : inputs) m.back().emplace_back(static_cast<int>((t >> x.word()) & 1u) == f.evaluate(x) ? 1 : 0);
  }
  return oracle::game_value(m);
}

}  // namespace

TEST(DecisionTree, BuildAndEvaluate) {
  const auto zero = DecisionTree::constant(2, 0);
  const auto one = DecisionTree::constant(2, 1);
  const auto x2 = DecisionTree::query(2, 1, zero, one);
  const auto tree = DecisionTree::query(2, 0, x2, one);  // OR_2
  EXPECT_EQ(tree.depth(), 2);
  EXPECT_EQ(tree.truth_table(), 0b1110u);
  for (const auto& x : all_inputs(2)) EXPECT_EQ(tree.evaluate(x), x.weight() > 0 ? 1 : 0);
  EXPECT_THROW(DecisionTree::query(2, 1, x2, one), InvalidSpec);
  EXPECT_EQ(tree.to_string(), "x1?(1:x2?(1:0))");
}

TEST(EnumerateTrees, Examples) {
  EXPECT_EQ(enumerate_trees(2, 0).size(), 2u);
  const auto one_var = enumerate_trees(1, 1);
  EXPECT_EQ(one_var.size(), 4u);
  EXPECT_THROW(enumerate_trees(5, 1), ResourceLimit);
  EXPECT_THROW(enumerate_trees(3, 4), ResourceLimit);
}

TEST(EnumerateTrees, MatchesNaiveEnumeration) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= n; ++d) {
      const auto trees = enumerate_trees(n, d);
      std::set<std::uint64_t> tables;
      for (const auto& t : trees) {
        EXPECT_LE(t.depth(), d);
        for (const auto& x : all_inputs(n)) {
          EXPECT_EQ(t.evaluate(x), static_cast<int>((t.truth_table() >> x.word()) & 1u));
        }
        tables.insert(t.truth_table());
      }
      EXPECT_EQ(tables.size(), trees.size()) << "duplicates at " << n << " " << d;
      EXPECT_EQ(tables, oracle::tree_tables(n, d)) << n << " " << d;
    }
  }
}

TEST(EnumerateTrees, FourVariablesCoverEveryFunctionAtFullDepth) {
  EXPECT_EQ(enumerate_trees(4, 4).size(), 65536u);
  const auto depth2 = enumerate_trees(4, 2);
  for (std::size_t i = 1; i < depth2.size(); ++i) EXPECT_LE(depth2[i - 1].depth(), depth2[i].depth());
}

TEST(PayoffMatrix, ConstantTreeAgainstOr) {
  const auto f = or_function(2).as_function();
  const auto p = payoff_matrix(f, {DecisionTree::constant(2, 1)}, all_inputs(2));
  EXPECT_EQ(p.at(0, 0), 0);
  EXPECT_EQ(p.at(0, 1), 1);
  EXPECT_EQ(p.at(0, 2), 1);
  EXPECT_EQ(p.at(0, 3), 1);
  const auto full = enumerate_trees(2, 2);
  const auto q = payoff_matrix(f, full, all_inputs(2));
  bool all_ones_row = false;
  for (int i = 0; i < q.rows(); ++i) {
    bool ok = true;
    for (int j = 0; j < q.cols(); ++j) ok = ok && q.at(i, j) == 1;
    all_ones_row = all_ones_row || ok;
  }
  EXPECT_TRUE(all_ones_row);
}

TEST(Distributional, Examples) {
  const auto or2 = or_function(2).as_function();
  EXPECT_EQ(distributional_complexity(or2, InputDistribution::uniform(2), Rational(1, 3)), 0);
  EXPECT_EQ(distributional_complexity(parity(2).as_function(), InputDistribution::uniform(2), Rational(0)), 2);
  for (std::uint64_t table = 0; table < 256; table += 37) {
    EXPECT_EQ(distributional_complexity(table_function(3, table), seeded_skew(3, table), Rational(1, 2)), 0);
  }
}

TEST(Distributional, MatchesBruteForce) {
  for (std::uint64_t table = 0; table < 256; ++table) {
    const auto f = table_function(3, table);
    const auto mu = seeded_skew(3, table + 1);
    for (const auto& eps : {Rational(0), Rational(1, 5), Rational(1, 3)}) {
      EXPECT_EQ(distributional_complexity(f, mu, eps), brute_distributional(f, mu, eps)) << table;
    }
  }
}

TEST(Randomized, Examples) {
  EXPECT_EQ(randomized_complexity(parity(2).as_function(), Rational(0)), 2);
  EXPECT_EQ(randomized_complexity(parity(3).as_function(), Rational(1, 2)), 0);
  EXPECT_EQ(randomized_complexity(or_function(2).as_function(), Rational(1, 3)), 1);
}

TEST(Randomized, ZeroErrorIsDeterministicComplexity) {
  for (std::uint64_t table = 0; table < 256; ++table) {
    int deterministic = 0;
    while (!oracle::tree_tables(3, deterministic).contains(table)) ++deterministic;
    EXPECT_EQ(randomized_complexity(table_function(3, table), Rational(0)), deterministic) << table;
  }
}

TEST(Randomized, GameValuesMatchVertexEnumeration) {
  for (std::uint64_t table = 0; table < 16; ++table) {
    const auto f = table_function(2, table);
    const auto report = verify_yao(f, Rational(0), 0);
    for (const auto& row : report.sweep) EXPECT_EQ(row.value, brute_game_value(f, row.depth)) << table;
  }
}

TEST(VerifyYao, Examples) {
  const auto constant = verify_yao(table_function(2, 0), Rational(0));
  EXPECT_EQ(constant.randomized, 0);
  EXPECT_EQ(constant.max_distributional, 0);
  EXPECT_TRUE(constant.equal);

  const auto par = verify_yao(parity(2).as_function(), Rational(0));
  EXPECT_EQ(par.randomized, 2);
  EXPECT_EQ(par.max_distributional, 2);
  EXPECT_TRUE(par.equal);
  EXPECT_FALSE(par.counterexample);
  EXPECT_EQ(par.random_checks, 100);

  const auto or2 = verify_yao(or_function(2).as_function(), Rational(1, 3));
  EXPECT_TRUE(or2.equal);
  EXPECT_FALSE(or2.counterexample);
}

TEST(VerifyYao, WitnessAchievesRandomizedComplexity) {
  const auto f = majority(3).as_function();
  const auto r = verify_yao(f, Rational(1, 3));
  ASSERT_EQ(r.witness.size(), r.inputs.size());
  std::vector<WeightedInput> entries;
  for (std::size_t j = 0; j < r.inputs.size(); ++j) entries.push_back({r.inputs[j], r.witness[j]});
  const auto mu = InputDistribution::normalized(3, entries);
  EXPECT_EQ(brute_distributional(f, mu, Rational(1, 3)), r.randomized);
}

TEST(VerifyYao, PromiseFunctionUsesDomain) {
  const auto f = simon_function(1);
  const auto r = verify_yao(f, Rational(0), 10);
  EXPECT_EQ(r.inputs.size(), 4u);
  EXPECT_TRUE(r.equal);
}

TEST(FloorPayoff, ExactAlgorithmGivesValueOne) {
  const auto f = or_function(2).as_function();
  AlgorithmReport exact;
  AlgorithmReport wrong;
  for (const auto& x : all_inputs(2)) {
    exact.records.push_back({x, Rational(0), f.evaluate(x), static_cast<double>(f.evaluate(x)), true, {}, 0});
    wrong.records.push_back({x, Rational(0), f.evaluate(x), 0.5, false, {}, 0});
  }
  const auto good = floor_success_payoff({exact, wrong}, f, all_inputs(2));
  EXPECT_EQ(*good.solution.exact_value, Rational(1));
  const auto bad = floor_success_payoff({wrong}, f, all_inputs(2));
  EXPECT_EQ(*bad.solution.exact_value, Rational(0));
  for (int j = 0; j < bad.matrix.cols(); ++j) EXPECT_EQ(bad.matrix.at(0, j), 0);
  EXPECT_THROW(floor_success_payoff({}, f, all_inputs(2)), InvalidSpec);
  AlgorithmReport partial;
  partial.records.push_back(exact.records[0]);
  EXPECT_THROW(floor_success_payoff({partial}, f, all_inputs(2)), InvalidSpec);
}
