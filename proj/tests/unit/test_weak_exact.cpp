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

#include "qyao/amplification.hpp"
#include "qyao/errors.hpp"
#include "qyao/weak_exact.hpp"

using namespace qyao;

namespace {

// Independently recomputed weak fraction: mass of inputs whose acceptance is
// within 1e-9 of the correct bit.
Rational recomputed_weak_fraction(const AlgorithmReport& r) {
  Rational total = 0;
  for (const auto& rec : r.records) {
    if (std::abs(rec.acceptance - rec.expected) <= 1e-9 && rec.pruned <= 1e-9) total += rec.weight;
  }
  return total;
}

// An output that is certain must be correct.
void expect_certain_means_correct(const AlgorithmReport& r) {
  for (const auto& rec : r.records) {
    if (rec.acceptance <= 1e-9) {
      EXPECT_EQ(rec.expected, 0) << r.function << " " << rec.input.to_string();
    }
    if (rec.acceptance >= 1 - 1e-9) {
      EXPECT_EQ(rec.expected, 1) << r.function << " " << rec.input.to_string();
    }
  }
}

}  // namespace

TEST(Outcomes, ThenMultipliesAndMerges) {
  Outcomes<int> coin;
  coin.add(0, 0.5, {1, 0});
  coin.add(1, 0.5, {1, 0});
  const auto two = coin.then([&](int a) { return coin.map([a](int b) { return a + b; }); });
  ASSERT_EQ(two.branches().size(), 3u);
  EXPECT_NEAR(two.probability_where([](int v) { return v == 1; }), 0.5, 1e-15);
  EXPECT_EQ(two.max_grover(), 2);
  EXPECT_EQ(two.max_total(), 2);
}

TEST(Outcomes, PrunesTinyBranches) {
  Outcomes<int> o;
  o.add(0, 1.0 - 1e-13, {});
  o.add(1, 1e-13, {});
  o.normalize();
  EXPECT_EQ(o.branches().size(), 1u);
  EXPECT_NEAR(o.pruned(), 1e-13, 1e-20);
}

TEST(FindAllOnes, Examples) {
  const auto none = find_all_ones(BitString::parse("0000"), 0);
  ASSERT_EQ(none.branches().size(), 1u);
  EXPECT_EQ(none.branches()[0].value, BitString::parse("0000"));
  EXPECT_EQ(none.max_total(), 0);

  const auto one = find_all_ones_report(BitString::parse("0010"), 1);
  EXPECT_TRUE(one.exact);
  EXPECT_EQ(one.outcomes.max_grover(), 1);
  EXPECT_EQ(one.outcomes.branches()[0].value.positions(), std::vector<int>{2});

  const auto many = find_all_ones_report(BitString::parse("1011"), 4);
  EXPECT_TRUE(many.exact);
  int budget = 0;
  for (int i = 1; i <= 4; ++i) budget += grover::iteration_count(4, i).iterations;
  EXPECT_LE(many.outcomes.max_grover(), budget);
  EXPECT_EQ(many.grover_bound, budget);
}

TEST(FindAllOnes, EveryBranchExactForAllInputsAtSix) {
  for (const auto& x : all_inputs(6)) {
    for (int k = x.weight(); k <= 6; ++k) {
      const auto r = find_all_ones_report(x, k);
      EXPECT_TRUE(r.exact) << x.to_string() << " " << k;
      EXPECT_LE(r.outcomes.max_grover(), grover_budget(6, k));
      EXPECT_LE(r.outcomes.max_verification(), k);
    }
  }
}

TEST(FindAllOnes, MaskedSearchStaysInMask) {
  const auto x = BitString::parse("11011010");
  const auto mask = BitString::parse("01111100");
  const auto out = find_all_ones(x, 3, mask);
  for (const auto& b : out.branches()) EXPECT_EQ(b.value, x & mask);
}

TEST(CountOnes, StopsAtBound) {
  for (const auto& x : all_inputs(7)) {
    const auto mask = BitString::parse("1101110");
    const int inside = (x & mask).weight();
    const auto out = count_ones(x, mask, 5, 3);
    for (const auto& b : out.branches()) {
      EXPECT_LE(b.value, std::min(inside, 3));
      if (inside <= 5) {
        EXPECT_EQ(b.value, std::min(inside, 3)) << x.to_string();
      }
    }
  }
}

TEST(Threshold, PointMassOnZerosIsCertain) {
  const auto mu = InputDistribution::point_mass(BitString::zeros(8));
  const auto r = threshold_weakly_exact(1, mu, ConstantsProfile::desk());
  EXPECT_EQ(r.weak_fraction, Rational(1));
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].acceptance, 0.0);
}

TEST(Threshold, SingleStageWhenBoundCoversInput) {
  const auto mu = InputDistribution::uniform(4);
  const auto algo = ThresholdAlgorithm::build(mu, 2, ConstantsProfile::desk());
  ASSERT_FALSE(algo.stages().empty());
  EXPECT_EQ(algo.stages()[0].bound, 4);
  const auto r = threshold_weakly_exact(2, mu, ConstantsProfile::desk());
  EXPECT_EQ(r.weak_fraction, Rational(1));
}

TEST(Threshold, OutputOneIsAlwaysCorrect) {
  for (int t = 1; t <= 4; ++t) {
    const auto mu = seeded_skew(8, static_cast<std::uint64_t>(t));
    const auto algo = ThresholdAlgorithm::build(mu, t, ConstantsProfile::desk());
    for (const auto& x : all_inputs(8)) {
      const auto out = algo.run(x);
      if (x.weight() < t) {
        EXPECT_EQ(out.probability_where([](int v) { return v == 1; }), 0.0) << x.to_string();
      }
    }
  }
}

TEST(Threshold, ReportBookkeeping) {
  const auto r = threshold_weakly_exact(2, seeded_skew(8, 4), ConstantsProfile::desk());
  EXPECT_EQ(r.weak_fraction, recomputed_weak_fraction(r));
  expect_certain_means_correct(r);
  EXPECT_GE(r.weak_fraction, Rational(2, 3));
  EXPECT_EQ(r.target, Rational(2, 3));
  Rational mass = 0;
  for (const auto& rec : r.records) mass += rec.weight;
  EXPECT_EQ(mass, Rational(1));
  int worst = 0;
  for (const auto& rec : r.records) worst = std::max(worst, rec.worst.total());
  EXPECT_EQ(worst, r.worst_total);
}

TEST(Threshold, AmplifyNeverAddsUncertainty) {
  const auto mu = seeded_skew(8, 2);
  auto algo = ThresholdAlgorithm::build(mu, 2, ConstantsProfile::desk());
  const auto before = mu.mass([&, u = algo.uncertain_inputs(mu)](const BitString& x) {
    return std::find(u.begin(), u.end(), x) != u.end();
  });
  const auto after = algo.amplify(mu, Rational(0), 2);
  EXPECT_LE(after, before);
}

TEST(Threshold, LiftedReadsSubpart) {
  const auto mu = InputDistribution::uniform(4);
  const auto algo = ThresholdAlgorithm::build(mu, 2, ConstantsProfile::desk());
  const auto sub = BitString::parse("01101010");
  const auto lifted = algo.lifted(sub);
  for (const auto& x : all_inputs(8)) {
    const auto a = lifted.run(x).probability_where([](int v) { return v == 1; });
    const auto b = algo.run(x.compress(sub)).probability_where([](int v) { return v == 1; });
    EXPECT_NEAR(a, b, 1e-12);
  }
}

TEST(Threshold, RejectsBadThreshold) {
  EXPECT_THROW(threshold_weakly_exact(0, InputDistribution::uniform(4), ConstantsProfile::desk()), InvalidSpec);
  EXPECT_THROW(threshold_weakly_exact(5, InputDistribution::uniform(4), ConstantsProfile::desk()), InvalidSpec);
}

TEST(Symmetric, ConstantNeedsNoQueries) {
  const auto r = symmetric_weakly_exact(SymmetricFunction::from_profile("11111"), InputDistribution::uniform(4),
                                        ConstantsProfile::desk());
  EXPECT_EQ(r.weak_fraction, Rational(1));
  EXPECT_EQ(r.worst_total, 0);
}

TEST(Symmetric, ParityAtFour) {
  const auto r = symmetric_weakly_exact(parity(4), InputDistribution::uniform(4), ConstantsProfile::desk());
  EXPECT_GE(r.weak_fraction, Rational(2, 3));
  // Gamma = 1 for parity at even N, so the envelope is sqrt(4 * 3).
  EXPECT_NEAR(r.envelope.value, std::sqrt(12.0), 1e-12);
  expect_certain_means_correct(r);
}

TEST(Symmetric, MajorityPointMass) {
  const auto r = symmetric_weakly_exact(majority(5), InputDistribution::point_mass(BitString::ones(5)),
                                        ConstantsProfile::desk());
  EXPECT_EQ(r.weak_fraction, Rational(1));
}

TEST(Symmetric, EveryProfileAtFiveIsSoundAndMeetsTarget) {
  for (int p = 0; p < 64; ++p) {
    std::string bits;
    for (int k = 0; k <= 5; ++k) bits.push_back((p >> k) & 1 ? '1' : '0');
    const auto r = symmetric_weakly_exact(SymmetricFunction::from_profile(bits), seeded_skew(5, 3),
                                          ConstantsProfile::desk());
    expect_certain_means_correct(r);
    EXPECT_EQ(r.weak_fraction, recomputed_weak_fraction(r));
    EXPECT_GE(r.weak_fraction, Rational(2, 3)) << bits;
  }
}

TEST(WeakSearch, AllZeroInputIsCertainNo) {
  for (const auto& eps : {Rational(1, 2), Rational(1, 8)}) {
    const auto r = weak_search(seeded_skew(8, 1), eps, ConstantsProfile::desk());
    bool seen = false;
    for (const auto& rec : r.records) {
      if (rec.input.weight() != 0) continue;
      seen = true;
      EXPECT_EQ(rec.acceptance, 0.0);
      EXPECT_TRUE(rec.certain);
    }
    EXPECT_TRUE(seen);
  }
}

TEST(WeakSearch, LowWeightSupportIsCoveredByFirstStage) {
  std::vector<WeightedInput> entries;
  entries.push_back({BitString::zeros(8), Rational(1)});
  for (const auto& x : inputs_of_weight(8, 1)) entries.push_back({x, Rational(1)});
  const auto r = weak_search(InputDistribution::normalized(8, entries), Rational(1, 2), ConstantsProfile::desk());
  EXPECT_EQ(r.weak_fraction, Rational(1));
}

TEST(WeakSearch, MeetsTargetAtEight) {
  for (const auto& eps : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
    const auto r = weak_search(InputDistribution::uniform(8), eps, ConstantsProfile::desk());
    EXPECT_EQ(r.target, 1 - eps);
    EXPECT_GE(r.weak_fraction, 1 - eps);
    expect_certain_means_correct(r);
  }
}

TEST(WeakSearch, InverseLogCeil) {
  EXPECT_EQ(log2_inverse_ceil(Rational(1, 2)), 1);
  EXPECT_EQ(log2_inverse_ceil(Rational(1, 3)), 2);
  EXPECT_EQ(log2_inverse_ceil(Rational(1, 4)), 2);
  EXPECT_EQ(log2_inverse_ceil(Rational(1)), 0);
  EXPECT_THROW(log2_inverse_ceil(Rational(0)), InvalidSpec);
}

TEST(AndOr, AllOnesAndZeroBlock) {
  std::vector<WeightedInput> entries{{BitString::ones(16), Rational(1)},
                                     {BitString::parse("1011000001101110"), Rational(1)}};
  const auto r = and_or_weakly_exact(InputDistribution::normalized(16, entries), ConstantsProfile::desk());
  for (const auto& rec : r.records) {
    if (rec.input == BitString::ones(16)) {
      EXPECT_EQ(rec.expected, 1);
      EXPECT_TRUE(rec.certain);
    } else {
      EXPECT_EQ(rec.expected, 0);
    }
  }
  expect_certain_means_correct(r);
}

TEST(AndOr, ShapeErrors) {
  EXPECT_THROW(and_or_weakly_exact(InputDistribution::uniform(5), ConstantsProfile::desk()), InvalidSpec);
}

TEST(AndOr, NineBitsUniform) {
  const auto r = and_or_weakly_exact(InputDistribution::uniform(9), ConstantsProfile::desk());
  EXPECT_GE(r.weak_fraction, Rational(2, 3));
  EXPECT_EQ(r.weak_fraction, recomputed_weak_fraction(r));
  expect_certain_means_correct(r);
}
