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
#include <string>

#include "qyao/bitstring.hpp"
#include "qyao/distribution.hpp"
#include "qyao/rational.hpp"

namespace qyao {

/// Constants of the threshold algorithm and its subset search.
///
/// The asymptotic profile carries the constants for which the analysis goes
/// through (i >= 10, factor 10, cap 100, coverage 0.7, initial bound 2^10 t);
/// it degenerates to a single counting stage unless N >= 2^11 t. The desk
/// profile shrinks them so every stage is exercised at N <= 16.
struct ConstantsProfile {
  std::string name;
  int i_min = 1;
  // Mask size s*N/2^i for window stage i.
  int size_factor = 2;
  // Stage i counts up to cap*t ones inside its mask.
  int cap = 6;
  Rational coverage{7, 10};
  // Stage 1 counts up to initial_bound_factor*t ones of the whole input.
  int initial_bound_factor = 2;
  std::uint64_t seed = 0;
  std::uint64_t enumerate_limit = 100000;
  int sample_count = 20000;
  int verify_candidates = 32;

  static ConstantsProfile desk();
  static ConstantsProfile asymptotic();
  // "desk" or "asymptotic"; throws InvalidSpec otherwise.
  static ConstantsProfile named(const std::string& name);
};

enum class CoverageProperty { weight_window, hit };

struct SubsetCertificate {
  BitString mask;
  CoverageProperty property = CoverageProperty::weight_window;
  int t = 0;
  // Window index i for weight-window certificates, -1 for hitting ones.
  int window = -1;
  double c = 0.0;
  int size_factor = 0;
  int cap = 0;
  Rational target;
  // Exact conditional probability of the property under the conditioned measure.
  Rational coverage;
  bool fallback = false;
  bool meets_target = false;
  std::string search;
  std::uint64_t candidates = 0;
};

// Mask y of size min(ceil(s N / 2^i), N) maximizing
// Pr[t <= |x & y| <= cap t | t 2^i <= |x| <= t 2^(i+1)] among the candidates,
// returned once that probability reaches the profile coverage; otherwise the
// full mask with its honest coverage and the fallback flag.
SubsetCertificate find_weight_window_subset(const InputDistribution& mu, int t, int i,
                                            const ConstantsProfile& profile);

// Mask y of size min(ceil(c N / t), N) with Pr[|x & y| >= 1 | |x| > t] >= target,
// with the same fallback rule.
SubsetCertificate find_hitting_subset(const InputDistribution& mu, int t, double c, const Rational& target,
                                      const ConstantsProfile& profile);

// C(K,k) C(N-K,n-k) / C(N,n).
Rational hypergeometric_pmf(int N, int K, int n, int k);

// exp(-delta^2 expectation / 2).
double chernoff_lower_tail(double expectation, double delta);

struct MissBound {
  // C(N - wx, wy) / C(N, wy): a uniform wy-subset misses a fixed wx-subset.
  Rational exact;
  // (1 - wx/N)^wy.
  Rational bound;
};
MissBound miss_bound(int N, int wx, int wy);

}  // namespace qyao
