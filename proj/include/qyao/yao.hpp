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

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qyao/boolean_function.hpp"
#include "qyao/distribution.hpp"
#include "qyao/rational.hpp"
#include "qyao/weak_exact.hpp"
#include "qyao/zero_sum.hpp"

namespace qyao {

/// Deterministic query algorithm on at most 4 variables. No variable is
/// queried twice on a path.
class DecisionTree {
 public:
  struct Node {
    int variable = -1;  // -1 for a leaf
    int output = 0;
    int low = -1;   // child when the variable reads 0
    int high = -1;  // child when it reads 1
  };

  static DecisionTree constant(int arity, int output);
  // Queries `variable` and continues with `low` or `high`.
  static DecisionTree query(int arity, int variable, const DecisionTree& low, const DecisionTree& high);

  int arity() const noexcept { return arity_; }
  int depth() const noexcept { return depth_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  int evaluate(const BitString& x) const;
  // Bit w is the output on the input with word w.
  std::uint64_t truth_table() const noexcept { return table_; }
  std::string to_string() const;

 private:
  int arity_ = 0;
  int depth_ = 0;
  std::uint64_t table_ = 0;
  std::vector<Node> nodes_;
};

// All decision trees of depth <= depth on N variables, one per computed
// function, ordered by (depth, truth table). Requires N <= 4 and depth <= N.
std::vector<DecisionTree> enumerate_trees(int N, int depth);

// Entry (i, j) is 1 iff trees[i] computes f on inputs[j].
PayoffMatrix payoff_matrix(const BooleanFunction& f, const std::vector<DecisionTree>& trees,
                           const std::vector<BitString>& inputs);

// Least depth d with a depth-d tree correct on mu-mass >= 1 - eps.
int distributional_complexity(const BooleanFunction& f, const InputDistribution& mu, const Rational& epsilon);

// Least depth d whose tree game over the domain has value >= 1 - eps.
int randomized_complexity(const BooleanFunction& f, const Rational& epsilon);

struct DepthRow {
  int depth = 0;
  int trees = 0;
  Rational value;
  GameSolution solution;
  // Hardest distribution of this depth's game, over the domain inputs.
  std::vector<Rational> mu;
  int distributional = 0;
};

struct YaoReport {
  std::string function;
  int arity = 0;
  Rational epsilon;
  std::vector<BitString> inputs;
  std::vector<DepthRow> sweep;
  int randomized = 0;
  int max_distributional = 0;
  std::vector<Rational> witness;
  bool equal = false;
  int random_checks = 0;
  bool counterexample = false;
  double max_gap = 0.0;
};

// R_eps(f) against max over LP-witnessed mu of D_eps^mu(f), plus a check that
// `random_checks` seeded distributions never exceed R_eps(f).
YaoReport verify_yao(const BooleanFunction& f, const Rational& epsilon, int random_checks = 100,
                     std::uint64_t seed = 1);

struct FloorPayoff {
  PayoffMatrix matrix;
  GameSolution solution;
  std::vector<Rational> hardest_mu;
};

// P[i][x] = 1 iff algorithm i is correct on x with probability >= 1 - 1e-9.
FloorPayoff floor_success_payoff(const std::vector<AlgorithmReport>& family, const BooleanFunction& f,
                                 const std::vector<BitString>& inputs);

}  // namespace qyao
