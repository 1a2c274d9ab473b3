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

#include <cmath>
#include <numbers>

#include "qyao/amplification.hpp"
#include "qyao/boolean_function.hpp"
#include "qyao/errors.hpp"
#include "qyao/query_sim.hpp"
#include "qyao/search_cache.hpp"

using namespace qyao;
using namespace qyao::sim;

namespace {

QueryLayout two_bit_layout() { return {{0, 1}, 2, {0, 1, 2, 3}}; }

std::uint64_t basis(std::uint64_t index, std::uint64_t answer) { return index | answer << 2; }

}  // namespace

TEST(ApplyQuery, FlipsAnswerOnMarkedIndex) {
  QuantumState s(3);
  s.amplitudes().assign(8, 0.0);
  s.amplitudes()[basis(1, 0)] = 1.0;
  apply_query(s, two_bit_layout(), BitString::parse("0100"));
  EXPECT_NEAR(std::abs(s.amplitudes()[basis(1, 1)]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitudes()[basis(1, 0)]), 0.0, 1e-15);
}

TEST(ApplyQuery, AllZeroInputIsIdentity) {
  QuantumState s(3);
  for (std::size_t i = 0; i < 8; ++i) s.amplitudes()[i] = Amplitude(0.1 * i, -0.05 * i);
  const auto before = s.amplitudes();
  apply_query(s, two_bit_layout(), BitString::parse("0000"));
  EXPECT_EQ(s.amplitudes(), before);
}

TEST(ApplyQuery, UniformSuperpositionEntanglesAnswer) {
  const auto x = BitString::parse("0101");
  QuantumState s(3);
  s.hadamard(0);
  s.hadamard(1);
  apply_query(s, two_bit_layout(), x);
  const auto joint = s.outcome_probabilities({0, 1, 2});
  for (std::uint64_t i = 0; i < 4; ++i) {
    const std::uint64_t bit = x.test(static_cast<int>(i)) ? 1 : 0;
    EXPECT_NEAR(joint[basis(i, bit)], 0.25, 1e-15);
    EXPECT_NEAR(joint[basis(i, 1 - bit)], 0.0, 1e-15);
  }
}

TEST(ApplyQuery, RejectsAmplitudeOnUnaddressedIndex) {
  QuantumState s(3);
  s.hadamard(0);
  s.hadamard(1);
  QueryLayout layout{{0, 1}, 2, {0, 1, 2}};
  EXPECT_THROW(apply_query(s, layout, BitString::parse("000")), InvalidSpec);
}

TEST(QuantumState, GatesMatchHandAmplitudes) {
  QuantumState s(1);
  s.rotation_y(0, std::numbers::pi / 3);
  EXPECT_NEAR(s.amplitudes()[0].real(), std::cos(std::numbers::pi / 6), 1e-15);
  EXPECT_NEAR(s.amplitudes()[1].real(), std::sin(std::numbers::pi / 6), 1e-15);
  s.phase(0, std::numbers::pi);
  EXPECT_NEAR(s.amplitudes()[1].real(), -std::sin(std::numbers::pi / 6), 1e-15);
  s.pauli_x(0);
  EXPECT_NEAR(s.amplitudes()[0].real(), -std::sin(std::numbers::pi / 6), 1e-15);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);

  QuantumState r(2);
  r.reflect({0, 1}, {0.5, 0.5, 0.5, 0.5});
  // 2|u><u| - I applied to |00> gives (-1/2, 1/2, 1/2, 1/2).
  EXPECT_NEAR(r.amplitudes()[0].real(), -0.5, 1e-15);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(r.amplitudes()[i].real(), 0.5, 1e-15);
}

TEST(Run, NoMeasurementGivesSingleLeaf) {
  Program p(2);
  p.hadamard(0).hadamard(1);
  const auto tree = run(p, BitString::parse("00"));
  ASSERT_EQ(tree.leaves.size(), 1u);
  EXPECT_NEAR(tree.leaves[0].probability, 1.0, 1e-15);
  EXPECT_FALSE(tree.leaves[0].output.has_value());
}

TEST(Run, FairCoinBranches) {
  Program p(1);
  p.hadamard(0).measure({0}, "coin").output([](const std::vector<std::uint64_t>& o) {
    return static_cast<std::int64_t>(o.back());
  });
  const auto tree = run(p, BitString::parse("0"));
  ASSERT_EQ(tree.leaves.size(), 2u);
  for (const auto& leaf : tree.leaves) EXPECT_NEAR(leaf.probability, 0.5, 1e-15);
  EXPECT_NEAR(acceptance_probability(p, BitString::parse("1")), 0.5, 1e-15);
}

TEST(Run, BranchFollowsOutcome) {
  auto zero = std::make_shared<Program>(1);
  zero->output_constant(10);
  auto one = std::make_shared<Program>(1);
  one->pauli_x(0).measure({0}).output_constant(20);
  Program p(1);
  p.rotation_y(0, 2 * std::asin(std::sqrt(0.25))).measure({0}).branch([zero, one](std::uint64_t o) {
    return o ? ProgramPtr(one) : ProgramPtr(zero);
  });
  const auto tree = run(p, BitString::parse("0"));
  double p10 = 0;
  double p20 = 0;
  for (const auto& leaf : tree.leaves) (*leaf.output == 10 ? p10 : p20) += leaf.probability;
  EXPECT_NEAR(p10, 0.75, 1e-12);
  EXPECT_NEAR(p20, 0.25, 1e-12);
}

TEST(Run, QubitBudget) {
  Program p(30);
  p.hadamard(0);
  EXPECT_THROW(run(p, BitString::parse("0")), ResourceLimit);
}

TEST(Run, CountsQueriesPerLeaf) {
  Program p(3);
  p.hadamard(0).hadamard(1);
  p.query(two_bit_layout()).query(two_bit_layout(), QueryKind::verification);
  p.measure({0, 1}).output_constant(1);
  EXPECT_EQ(p.query_count(), 2);
  const auto tree = run(p, BitString::parse("1000"));
  for (const auto& leaf : tree.leaves) {
    EXPECT_EQ(leaf.search_queries, 1);
    EXPECT_EQ(leaf.verification_queries, 1);
  }
  EXPECT_NEAR(tree.leaf_mass(), 1.0, 1e-12);
}

TEST(AcceptanceProbability, ConstantProgram) {
  Program p(1);
  p.output_constant(1);
  for (const auto& x : all_inputs(3)) EXPECT_EQ(acceptance_probability(p, x), 1.0);
}

TEST(CertaintyProfile, ExactAndCoinPrograms) {
  const auto f = BooleanFunction::total(2, [](const BitString&) { return 1; }, "one");
  Program exact(1);
  exact.output_constant(1);
  const auto good = certainty_profile(exact, f, InputDistribution::uniform(2));
  EXPECT_EQ(good.weak_fraction, Rational(1));
  EXPECT_TRUE(good.strong);
  EXPECT_EQ(good.certain_set.size(), 4u);

  Program coin(1);
  coin.hadamard(0).measure({0}).output([](const std::vector<std::uint64_t>& o) {
    return static_cast<std::int64_t>(o.back());
  });
  const auto bad = certainty_profile(coin, f, InputDistribution::uniform(2));
  EXPECT_EQ(bad.weak_fraction, Rational(0));
  EXPECT_FALSE(bad.strong);
}

// Iteration counts from the closed form, computed independently of the library.
int closed_form_iterations(int n, int t) {
  const double theta = std::asin(std::sqrt(static_cast<double>(t) / n));
  return std::max(0, static_cast<int>(std::ceil(std::numbers::pi / (4 * theta) - 0.5 - 1e-9)));
}

TEST(IterationCount, Examples) {
  const auto a = grover::iteration_count(4, 1);
  EXPECT_EQ(a.iterations, 1);
  EXPECT_TRUE(a.exact);
  const auto b = grover::iteration_count(4, 4);
  EXPECT_EQ(b.iterations, 0);
  EXPECT_TRUE(b.exact);
  const auto c = grover::iteration_count(16, 1);
  EXPECT_EQ(c.iterations, 3);
  EXPECT_FALSE(c.exact);
  EXPECT_THROW(grover::iteration_count(4, 0), InvalidSpec);
  EXPECT_THROW(grover::iteration_count(4, 5), InvalidSpec);
  for (int n = 1; n <= 64; ++n) {
    for (int t = 1; t <= n; ++t) EXPECT_EQ(grover::iteration_count(n, t).iterations, closed_form_iterations(n, t));
  }
}

double found_mass(const grover::SearchSpec& spec, const BitString& x) {
  const auto tree = run(grover::search_program(spec), x);
  double p = 0;
  for (const auto& leaf : tree.leaves) {
    if (leaf.output && *leaf.output != grover::kNoSolution) {
      EXPECT_TRUE(x.test(static_cast<int>(*leaf.output)));
      p += leaf.probability;
    }
  }
  return p;
}

TEST(GroverProgram, StandardMatchesSineFormula) {
  for (int n = 1; n <= 8; ++n) {
    for (int t = 1; t <= n; ++t) {
      grover::SearchSpec spec{.input_length = n, .assumed_solutions = t, .mode = grover::Mode::standard};
      const double theta = std::asin(std::sqrt(static_cast<double>(t) / n));
      const int m = closed_form_iterations(n, t);
      const double expected = std::pow(std::sin((2 * m + 1) * theta), 2);
      for (const auto& x : inputs_of_weight(n, t)) EXPECT_NEAR(found_mass(spec, x), expected, 1e-12) << n << " " << t;
    }
  }
}

TEST(GroverProgram, EightTwoSolutionsIsCertain) {
  grover::SearchSpec spec{.input_length = 8, .assumed_solutions = 2, .mode = grover::Mode::standard};
  EXPECT_NEAR(found_mass(spec, BitString::parse("01000100")), 1.0, 1e-12);
}

TEST(GroverProgram, NoSolutionPath) {
  grover::SearchSpec spec{.input_length = 4, .assumed_solutions = 0, .mode = grover::Mode::standard};
  const auto tree = run(grover::search_program(spec), BitString::parse("0000"));
  double miss = 0;
  for (const auto& leaf : tree.leaves) {
    if (*leaf.output == grover::kNoSolution) miss += leaf.probability;
  }
  EXPECT_NEAR(miss, 1.0, 1e-12);
}

TEST(ExactGrover, FourSingleOnes) {
  grover::SearchSpec spec{.input_length = 4, .assumed_solutions = 1};
  for (int p = 0; p < 4; ++p) {
    const auto x = BitString::from_positions(4, {p});
    const auto tree = run(grover::search_program(spec), x);
    double hit = 0;
    for (const auto& leaf : tree.leaves) {
      if (leaf.output == p) hit += leaf.probability;
      EXPECT_EQ(leaf.search_queries, 1);
    }
    EXPECT_NEAR(hit, 1.0, 1e-12);
  }
}

TEST(ExactGrover, SixteenWithPhaseCorrection) {
  grover::SearchSpec spec{.input_length = 16, .assumed_solutions = 1};
  EXPECT_EQ(grover::search_program(spec).query_count(), 3 + 1);
  EXPECT_GE(found_mass(spec, BitString::from_positions(16, {6})), 1 - 1e-9);
}

TEST(ExactGrover, AllMarkedNeedsNoSearchQueries) {
  grover::SearchSpec spec{.input_length = 4, .assumed_solutions = 4, .verify = false};
  const auto program = grover::search_program(spec);
  EXPECT_EQ(program.query_count(), 0);
  EXPECT_NEAR(found_mass(spec, BitString::parse("1111")), 1.0, 1e-12);
}

TEST(ExactGrover, RejectsUnknownCount) {
  grover::SearchSpec spec{.input_length = 4, .assumed_solutions = 0};
  EXPECT_THROW(grover::search_program(spec), InvalidSpec);
}

TEST(ExactGrover, CertainForEveryCountUpToSixteen) {
  for (int n = 1; n <= 16; ++n) {
    for (int t = 1; t <= n; ++t) {
      grover::SearchSpec spec{.input_length = n, .assumed_solutions = t};
      // A few inputs per (n, t); the acceptance suite covers all of them.
      const auto inputs = inputs_of_weight(n, t);
      for (std::size_t i = 0; i < inputs.size(); i += 1 + inputs.size() / 5) {
        EXPECT_GE(found_mass(spec, inputs[i]), 1 - 1e-9) << n << " " << t;
      }
    }
  }
}

TEST(ExactGrover, MaskAndExclusionRestrictFoundPositions) {
  const auto mask = BitString::parse("11110110");
  const auto excluded = BitString::parse("01000000");
  const auto x = BitString::parse("11000101");
  grover::SearchSpec spec{.input_length = 8, .mask = mask, .excluded = excluded, .assumed_solutions = 2};
  const auto tree = run(grover::search_program(spec), x);
  double hit = 0;
  for (const auto& leaf : tree.leaves) {
    ASSERT_TRUE(leaf.output);
    if (*leaf.output == grover::kNoSolution) continue;
    EXPECT_TRUE(mask.test(static_cast<int>(*leaf.output)));
    EXPECT_FALSE(excluded.test(static_cast<int>(*leaf.output)));
    EXPECT_TRUE(x.test(static_cast<int>(*leaf.output)));
    hit += leaf.probability;
  }
  EXPECT_NEAR(hit, 1.0, 1e-9);
}

// The memoized outcome is mapped from a canonical run; it must agree with a
// direct simulation on arbitrary masks and inputs.
TEST(SearchCache, RelabelledOutcomeMatchesDirectRun) {
  std::uint64_t state = 12345;
  auto next = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(next() % 8);
    auto mask = BitString(n, next() & low_mask(n));
    if (mask.weight() == 0) mask = BitString::ones(n);
    const auto excluded = BitString(n, next() & next() & low_mask(n));
    if ((mask & excluded.complement()).weight() == 0) continue;
    const auto x = BitString(n, next() & low_mask(n));
    const int t = 1 + static_cast<int>(next() % static_cast<std::uint64_t>(mask.weight()));
    const bool exact = trial % 3 != 0;
    grover::SearchSpec spec{.input_length = n,
                            .mask = mask,
                            .excluded = excluded,
                            .assumed_solutions = t,
                            .mode = exact ? grover::Mode::exact : grover::Mode::standard,
                            .verify = trial % 4 != 0};
    const auto cached = search_outcome(spec, x);
    const auto tree = run(grover::search_program(spec), x);
    std::map<int, double> direct;
    double miss = 0;
    for (const auto& leaf : tree.leaves) {
      if (*leaf.output == grover::kNoSolution) {
        miss += leaf.probability;
      } else {
        direct[static_cast<int>(*leaf.output)] += leaf.probability;
      }
    }
    EXPECT_NEAR(cached.miss, miss, 1e-12);
    std::map<int, double> got(cached.found.begin(), cached.found.end());
    for (const auto& [p, prob] : direct) EXPECT_NEAR(got[p], prob, 1e-12) << trial;
    for (const auto& [p, prob] : got) EXPECT_NEAR(direct[p], prob, 1e-12) << trial;
  }
}
