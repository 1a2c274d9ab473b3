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

#include "qyao/yao.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <random>
#include <unordered_map>

#include "qyao/errors.hpp"

namespace qyao {

DecisionTree DecisionTree::constant(int arity, int output) {
  if (arity < 1 || arity > 6) throw InvalidSpec("decision trees support 1..6 variables");
  DecisionTree t;
  t.arity_ = arity;
  t.nodes_.push_back({-1, output ? 1 : 0, -1, -1});
  t.table_ = output ? low_mask(1 << arity) : 0;
  return t;
}

DecisionTree DecisionTree::query(int arity, int variable, const DecisionTree& low, const DecisionTree& high) {
  if (variable < 0 || variable >= arity || low.arity_ != arity || high.arity_ != arity) {
    throw InvalidSpec("decision tree query out of range");
  }
  const auto uses = [variable](const DecisionTree& t) {
    return std::any_of(t.nodes_.begin(), t.nodes_.end(), [variable](const Node& n) { return n.variable == variable; });
  };
  if (uses(low) || uses(high)) throw InvalidSpec("variable queried twice on a path");
  DecisionTree t;
  t.arity_ = arity;
  t.depth_ = 1 + std::max(low.depth_, high.depth_);
  t.nodes_.push_back({variable, 0, 1, static_cast<int>(1 + low.nodes_.size())});
  const auto append = [&t](const DecisionTree& sub) {
    const int offset = static_cast<int>(t.nodes_.size());
    for (Node n : sub.nodes_) {
      if (n.low >= 0) n.low += offset;
      if (n.high >= 0) n.high += offset;
      t.nodes_.push_back(n);
    }
  };
  append(low);
  append(high);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << arity); ++w) {
    const auto& source = ((w >> variable) & 1U) ? high : low;
    if ((source.table_ >> w) & 1U) t.table_ |= std::uint64_t{1} << w;
  }
  return t;
}

int DecisionTree::evaluate(const BitString& x) const {
  if (x.size() != arity_) throw InvalidSpec("decision tree input has the wrong length");
  int node = 0;
  while (nodes_[static_cast<std::size_t>(node)].variable >= 0) {
    const auto& n = nodes_[static_cast<std::size_t>(node)];
    node = x.test(n.variable) ? n.high : n.low;
  }
  return nodes_[static_cast<std::size_t>(node)].output;
}

std::string DecisionTree::to_string() const {
  std::string out;
  const auto render = [&](auto&& self, int node) -> void {
    const auto& n = nodes_[static_cast<std::size_t>(node)];
    if (n.variable < 0) {
      out += std::to_string(n.output);
      return;
    }
    out += "x" + std::to_string(n.variable + 1) + "?(";
    self(self, n.high);
    out += ":";
    self(self, n.low);
    out += ")";
  };
  render(render, 0);
  return out;
}

namespace {

using TreeList = std::vector<DecisionTree>;

// Bit w set iff variable v is 1 in input word w.
std::uint64_t variable_table(int arity, int v) {
  std::uint64_t t = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << arity); ++w) {
    if ((w >> v) & 1U) t |= std::uint64_t{1} << w;
  }
  return t;
}

class TreeEnumerator {
 public:
  explicit TreeEnumerator(int arity) : arity_(arity) {}

  const TreeList& trees(int depth, unsigned available) {
    const auto key = std::make_pair(depth, available);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::unordered_map<std::uint64_t, DecisionTree> by_table;
    TreeList order;
    const auto offer = [&](DecisionTree t) {
      if (by_table.contains(t.truth_table())) return;
      by_table.emplace(t.truth_table(), t);
      order.push_back(std::move(t));
    };
    if (depth == 0 || available == 0) {
      offer(DecisionTree::constant(arity_, 0));
      offer(DecisionTree::constant(arity_, 1));
    } else {
      for (const auto& t : trees(depth - 1, available)) offer(t);
      for (int v = 0; v < arity_; ++v) {
        if (!((available >> v) & 1U)) continue;
        const TreeList& sub = trees(depth - 1, available & ~(1U << v));
        const std::uint64_t vt = variable_table(arity_, v);
        for (const auto& low : sub) {
          for (const auto& high : sub) {
            const std::uint64_t table = (high.truth_table() & vt) | (low.truth_table() & ~vt & low_mask(1 << arity_));
            if (by_table.contains(table)) continue;
            offer(DecisionTree::query(arity_, v, low, high));
          }
        }
      }
    }
    std::stable_sort(order.begin(), order.end(), [](const DecisionTree& a, const DecisionTree& b) {
      return std::make_pair(a.depth(), a.truth_table()) < std::make_pair(b.depth(), b.truth_table());
    });
    return memo_.emplace(key, std::move(order)).first->second;
  }

 private:
  int arity_;
  std::map<std::pair<int, unsigned>, TreeList> memo_;
};

void check_guard(int n, int depth) {
  if (n < 1 || n > 4 || depth < 0 || depth > n) {
    throw ResourceLimit("tree enumeration is limited to N <= 4 and depth <= N (got N=" + std::to_string(n) +
                        ", depth=" + std::to_string(depth) + ")");
  }
}

const TreeList& cached_trees(int n, int depth) {
  check_guard(n, depth);
  static std::mutex mutex;
  static std::map<int, TreeEnumerator> enumerators;
  std::lock_guard lock(mutex);
  auto it = enumerators.try_emplace(n, n).first;
  return it->second.trees(depth, (1U << n) - 1);
}

// Bit j set iff the tree with this table is correct on inputs[j].
std::uint64_t correctness(std::uint64_t table, const std::vector<BitString>& inputs, const std::vector<int>& fvals) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    const int out = static_cast<int>((table >> inputs[j].word()) & 1U);
    if (out == fvals[j]) mask |= std::uint64_t{1} << j;
  }
  return mask;
}

// Correctness patterns of depth-<= d trees with dominated patterns removed.
std::vector<std::uint64_t> maximal_patterns(const TreeList& trees, const std::vector<BitString>& inputs,
                                            const std::vector<int>& fvals) {
  std::vector<std::uint64_t> patterns;
  for (const auto& t : trees) patterns.push_back(correctness(t.truth_table(), inputs, fvals));
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) > std::popcount(b); });
  std::vector<std::uint64_t> kept;
  for (auto p : patterns) {
    if (std::none_of(kept.begin(), kept.end(), [p](std::uint64_t k) { return (k & p) == p; })) kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<int> values_on(const BooleanFunction& f, const std::vector<BitString>& inputs) {
  std::vector<int> out;
  for (const auto& x : inputs) out.push_back(f.evaluate(x));
  return out;
}

DepthRow solve_depth(const BooleanFunction& f, const std::vector<BitString>& inputs, const std::vector<int>& fvals,
                     int depth) {
  const auto& trees = cached_trees(f.arity(), depth);
  const auto patterns = maximal_patterns(trees, inputs, fvals);
  PayoffMatrix p(static_cast<int>(patterns.size()), static_cast<int>(inputs.size()));
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = 0; j < inputs.size(); ++j) {
      p.set(static_cast<int>(i), static_cast<int>(j), Rational(static_cast<int>((patterns[i] >> j) & 1U)));
    }
  }
  DepthRow row;
  row.depth = depth;
  row.trees = static_cast<int>(trees.size());
  row.solution = solve_zero_sum(p, {.exact = true});
  row.value = *row.solution.exact_value;
  row.mu = row.solution.exact_column_strategy;
  return row;
}

int distributional_on(const BooleanFunction& f, const std::vector<BitString>& inputs, const std::vector<int>& fvals,
                      const std::vector<Rational>& weights, const Rational& epsilon) {
  const Rational need = 1 - epsilon;
  std::vector<double> approx;
  for (const auto& w : weights) approx.push_back(w.get_d());
  for (int d = 0; d <= f.arity(); ++d) {
    for (const auto& t : cached_trees(f.arity(), d)) {
      const std::uint64_t mask = correctness(t.truth_table(), inputs, fvals);
      double s = 0.0;
      for (std::size_t j = 0; j < inputs.size(); ++j) {
        if ((mask >> j) & 1U) s += approx[j];
      }
      if (s < need.get_d() - 1e-9) continue;
      Rational exact = 0;
      for (std::size_t j = 0; j < inputs.size(); ++j) {
        if ((mask >> j) & 1U) exact += weights[j];
      }
      if (exact >= need) return d;
    }
  }
  throw InvalidSpec("no decision tree reaches the required mass; is mu supported in the domain?");
}

void check_epsilon(const Rational& epsilon) {
  if (epsilon < 0 || epsilon > 1) throw InvalidSpec("epsilon must lie in [0, 1]");
}

}  // namespace

std::vector<DecisionTree> enumerate_trees(int N, int depth) { return cached_trees(N, depth); }

PayoffMatrix payoff_matrix(const BooleanFunction& f, const std::vector<DecisionTree>& trees,
                           const std::vector<BitString>& inputs) {
  PayoffMatrix p(static_cast<int>(trees.size()), static_cast<int>(inputs.size()));
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    const int fx = f.evaluate(inputs[j]);
    p.col_labels.push_back(inputs[j].to_string());
    for (std::size_t i = 0; i < trees.size(); ++i) {
      p.set(static_cast<int>(i), static_cast<int>(j), Rational(trees[i].evaluate(inputs[j]) == fx ? 1 : 0));
    }
  }
  for (const auto& t : trees) p.row_labels.push_back(t.to_string());
  return p;
}

int distributional_complexity(const BooleanFunction& f, const InputDistribution& mu, const Rational& epsilon) {
  check_epsilon(epsilon);
  if (mu.length() != f.arity()) throw InvalidSpec("distribution length differs from the function arity");
  check_guard(f.arity(), f.arity());
  const auto inputs = mu.support();
  std::vector<Rational> weights;
  for (const auto& e : mu.entries()) weights.push_back(e.weight);
  return distributional_on(f, inputs, values_on(f, inputs), weights, epsilon);
}

int randomized_complexity(const BooleanFunction& f, const Rational& epsilon) {
  check_epsilon(epsilon);
  check_guard(f.arity(), f.arity());
  const auto inputs = f.domain();
  const auto fvals = values_on(f, inputs);
  for (int d = 0; d <= f.arity(); ++d) {
    if (solve_depth(f, inputs, fvals, d).value >= 1 - epsilon) return d;
  }
  throw InvalidSpec("no depth reaches the required game value");
}

YaoReport verify_yao(const BooleanFunction& f, const Rational& epsilon, int random_checks, std::uint64_t seed) {
  check_epsilon(epsilon);
  check_guard(f.arity(), f.arity());
  YaoReport report;
  report.function = f.name();
  report.arity = f.arity();
  report.epsilon = epsilon;
  report.inputs = f.domain();
  const auto fvals = values_on(f, report.inputs);
  const Rational need = 1 - epsilon;

  report.randomized = -1;
  for (int d = 0; d <= f.arity(); ++d) {
    DepthRow row = solve_depth(f, report.inputs, fvals, d);
    row.distributional = distributional_on(f, report.inputs, fvals, row.mu, epsilon);
    report.max_gap = std::max(report.max_gap, row.solution.gap);
    const bool reached = row.value >= need;
    report.sweep.push_back(std::move(row));
    if (reached) {
      report.randomized = d;
      break;
    }
  }
  if (report.randomized < 0) throw InvalidSpec("no depth reaches the required game value");

  report.max_distributional = -1;
  for (const auto& row : report.sweep) {
    if (row.distributional > report.max_distributional) {
      report.max_distributional = row.distributional;
      report.witness = row.mu;
    }
  }
  report.equal = report.max_distributional == report.randomized;

  std::mt19937_64 rng(seed);
  for (int r = 0; r < random_checks; ++r) {
    std::vector<Rational> weights;
    Rational total = 0;
    for (std::size_t j = 0; j < report.inputs.size(); ++j) {
      weights.emplace_back(static_cast<unsigned long>(1 + rng() % 1000));
      total += weights.back();
    }
    for (auto& w : weights) w /= total;
    if (distributional_on(f, report.inputs, fvals, weights, epsilon) > report.randomized) report.counterexample = true;
    ++report.random_checks;
  }
  return report;
}

FloorPayoff floor_success_payoff(const std::vector<AlgorithmReport>& family, const BooleanFunction& f,
                                 const std::vector<BitString>& inputs) {
  if (family.empty() || inputs.empty()) throw InvalidSpec("floor payoff needs a nonempty family and input list");
  FloorPayoff out;
  out.matrix = PayoffMatrix(static_cast<int>(family.size()), static_cast<int>(inputs.size()));
  for (const auto& x : inputs) out.matrix.col_labels.push_back(x.to_string());
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::unordered_map<BitString, double> acceptance;
    for (const auto& r : family[i].records) acceptance.emplace(r.input, r.acceptance);
    out.matrix.row_labels.push_back(family[i].algorithm + " " + family[i].distribution);
    for (std::size_t j = 0; j < inputs.size(); ++j) {
      const auto it = acceptance.find(inputs[j]);
      if (it == acceptance.end()) {
        throw InvalidSpec("report " + std::to_string(i) + " has no record for input " + inputs[j].to_string());
      }
      const double success = f.evaluate(inputs[j]) == 1 ? it->second : 1.0 - it->second;
      out.matrix.set(static_cast<int>(i), static_cast<int>(j), Rational(success >= 1.0 - sim::kCertainTolerance ? 1 : 0));
    }
  }
  out.solution = solve_zero_sum(out.matrix, {.exact = true});
  out.hardest_mu = out.solution.exact_column_strategy;
  return out;
}

}  // namespace qyao
