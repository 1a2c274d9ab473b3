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
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qyao/bitstring.hpp"
#include "qyao/boolean_function.hpp"
#include "qyao/rational.hpp"

namespace qyao {

struct WeightedInput {
  BitString input;
  Rational weight;
};

/// Finitely supported probability measure over N-bit inputs with exact weights.
///
/// Entries are kept sorted by input, distinct, and with strictly positive weight.
class InputDistribution {
 public:
  using Predicate = std::function<bool(const BitString&)>;
  using Mapping = std::function<BitString(const BitString&)>;

  InputDistribution() = default;

  // Weights must be nonnegative and sum to exactly 1; duplicates are merged.
  static InputDistribution from_weights(int length, std::vector<WeightedInput> entries);
  // Nonnegative weights with a positive total, normalized exactly.
  static InputDistribution normalized(int length, std::vector<WeightedInput> entries);
  static InputDistribution uniform(int length);
  static InputDistribution uniform_over(int length, const std::vector<BitString>& support);
  static InputDistribution point_mass(const BitString& x);

  int length() const noexcept { return length_; }
  const std::vector<WeightedInput>& entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  std::vector<BitString> support() const;
  Rational weight(const BitString& x) const;

  Rational mass(const Predicate& predicate) const;
  // Throws EmptyConditioning when the predicate has zero mass.
  InputDistribution condition(const Predicate& predicate) const;
  // Pushforward under `mapping`, whose images all have `image_length` bits.
  InputDistribution induced(const Mapping& mapping, int image_length) const;
  // Distribution of the bitwise complement of x.
  InputDistribution complemented() const;

 private:
  int length_ = 0;
  std::vector<WeightedInput> entries_;
};

// Integer weights u_x in [1, 64] from a seeded generator, boosted ninefold
// within Hamming distance 1 of a seeded centre weight; defined on all of {0,1}^N.
InputDistribution seeded_skew(int length, std::uint64_t seed);

/// Inputs of length n*2^n encoding phi: {0,1}^n -> {0,1}^n; bit a*n + j of the
/// encoding is bit j of phi(a). Half the mass is spread uniformly over
/// permutations, the other half uniformly over s != 0 and then uniformly over
/// the 2-to-1 functions with phi(a) = phi(b) iff a xor b = s.
InputDistribution simon_distribution(int n);

// The hidden s of an encoding satisfying the promise, or nullopt otherwise.
std::optional<std::uint64_t> simon_period(int n, const BitString& x);
// Promise function on the support of simon_distribution(n): f(x) = [s != 0].
BooleanFunction simon_function(int n);

}  // namespace qyao
