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

#include "qyao/certificates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "qyao/errors.hpp"
#include "qyao/parallel.hpp"

namespace qyao {

ConstantsProfile ConstantsProfile::desk() {
  ConstantsProfile p;
  p.name = "desk";
  return p;
}

ConstantsProfile ConstantsProfile::asymptotic() {
  ConstantsProfile p;
  p.name = "asymptotic";
  p.i_min = 10;
  p.size_factor = 10;
  p.cap = 100;
  p.initial_bound_factor = 1 << 10;
  return p;
}

ConstantsProfile ConstantsProfile::named(const std::string& name) {
  if (name == "desk") return desk();
  if (name == "asymptotic") return asymptotic();
  throw InvalidSpec("unknown constants profile '" + name + "' (expected desk or asymptotic)");
}

namespace {

// popcount(x & y) -> does the property hold.
using IntersectionTest = std::vector<char>;

std::vector<std::uint64_t> all_masks_of_weight(int length, int weight) {
  std::vector<std::uint64_t> out;
  for (const auto& y : inputs_of_weight(length, weight)) out.push_back(y.word());
  return out;
}

std::vector<std::uint64_t> sampled_masks(int length, int weight, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> slots(static_cast<std::size_t>(length));
  for (int s = 0; s < count; ++s) {
    std::iota(slots.begin(), slots.end(), 0);
    std::uint64_t mask = 0;
    for (int j = 0; j < weight; ++j) {
      const auto pick = static_cast<std::size_t>(j) + rng() % static_cast<std::uint64_t>(length - j);
      std::swap(slots[static_cast<std::size_t>(j)], slots[pick]);
      mask |= std::uint64_t{1} << slots[static_cast<std::size_t>(j)];
    }
    out.push_back(mask);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational exact_coverage(const InputDistribution& conditioned, std::uint64_t mask, const IntersectionTest& test) {
  Rational total = 0;
  for (const auto& e : conditioned.entries()) {
    if (test[static_cast<std::size_t>(std::popcount(e.input.word() & mask))]) total += e.weight;
  }
  return total;
}

void search_mask(const InputDistribution& conditioned, int size, const IntersectionTest& test,
                 const ConstantsProfile& profile, SubsetCertificate& cert) {
  const int n = conditioned.length();
  if (size >= n) {
    cert.mask = BitString::ones(n);
    cert.coverage = exact_coverage(conditioned, cert.mask.word(), test);
    cert.meets_target = cert.coverage >= cert.target;
    cert.search = "full";
    cert.candidates = 1;
    return;
  }

  std::vector<std::uint64_t> candidates;
  if (binomial(n, size) <= BigInt(static_cast<unsigned long>(profile.enumerate_limit))) {
    candidates = all_masks_of_weight(n, size);
    cert.search = "exhaustive";
  } else {
    candidates = sampled_masks(n, size, profile.sample_count, profile.seed);
    cert.search = "sampled";
  }
  cert.candidates = candidates.size();

  std::vector<std::uint64_t> words;
  std::vector<double> weights;
  for (const auto& e : conditioned.entries()) {
    words.push_back(e.input.word());
    weights.push_back(e.weight.get_d());
  }
  std::vector<double> scores(candidates.size(), 0.0);
  parallel_for(candidates.size(), [&](std::size_t c) {
    const std::uint64_t y = candidates[c];
    double s = 0.0;
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (test[static_cast<std::size_t>(std::popcount(words[k] & y))]) s += weights[k];
    }
    scores[c] = s;
  });

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  const double floor = cert.target.get_d() - 1e-9;
  std::optional<std::uint64_t> best;
  Rational best_coverage = -1;
  for (std::size_t r = 0; r < order.size() && r < static_cast<std::size_t>(profile.verify_candidates); ++r) {
    const std::size_t c = order[r];
    if (scores[c] < floor) break;
    const Rational cov = exact_coverage(conditioned, candidates[c], test);
    if (cov >= cert.target && cov > best_coverage) {
      best = candidates[c];
      best_coverage = cov;
    }
  }
  if (best) {
    cert.mask = BitString(n, *best);
    cert.coverage = best_coverage;
    cert.meets_target = true;
    return;
  }
  cert.mask = BitString::ones(n);
  cert.coverage = exact_coverage(conditioned, cert.mask.word(), test);
  cert.fallback = true;
  cert.meets_target = cert.coverage >= cert.target;
}

int ceil_ratio(long long num, long long den) { return static_cast<int>((num + den - 1) / den); }

}  // namespace

SubsetCertificate find_weight_window_subset(const InputDistribution& mu, int t, int i, const ConstantsProfile& profile) {
  const int n = mu.length();
  if (t < 1 || i < 0 || i > 62) throw InvalidSpec("window certificate needs t >= 1 and 0 <= i <= 62");
  const long long low = static_cast<long long>(t) << i;
  const long long high = low * 2;
  const auto conditioned = mu.condition([&](const BitString& x) { return x.weight() >= low && x.weight() <= high; });

  SubsetCertificate cert;
  cert.property = CoverageProperty::weight_window;
  cert.t = t;
  cert.window = i;
  cert.size_factor = profile.size_factor;
  cert.cap = profile.cap;
  cert.target = profile.coverage;
  const long long size = std::min<long long>(ceil_ratio(static_cast<long long>(profile.size_factor) * n, 1LL << i), n);

  IntersectionTest test(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) test[static_cast<std::size_t>(k)] = k >= t && k <= static_cast<long long>(profile.cap) * t;
  search_mask(conditioned, static_cast<int>(size), test, profile, cert);
  return cert;
}

SubsetCertificate find_hitting_subset(const InputDistribution& mu, int t, double c, const Rational& target,
                                      const ConstantsProfile& profile) {
  const int n = mu.length();
  if (t < 1 || !(c > 0)) throw InvalidSpec("hitting certificate needs t >= 1 and c > 0");
  const auto conditioned = mu.condition([&](const BitString& x) { return x.weight() > t; });

  SubsetCertificate cert;
  cert.property = CoverageProperty::hit;
  cert.t = t;
  cert.c = c;
  cert.target = target;
  const double raw = std::ceil(c * n / t - 1e-12);
  const int size = raw >= n ? n : static_cast<int>(raw);

  IntersectionTest test(static_cast<std::size_t>(n) + 1, 1);
  test[0] = 0;
  search_mask(conditioned, size, test, profile, cert);
  return cert;
}

Rational hypergeometric_pmf(int N, int K, int n, int k) {
  if (N < 0 || K < 0 || n < 0 || K > N || n > N || k < 0 || k > std::min(K, n)) {
    throw InvalidSpec("hypergeometric arguments out of range");
  }
  Rational p(binomial(K, k) * binomial(N - K, n - k), binomial(N, n));
  p.canonicalize();
  return p;
}

double chernoff_lower_tail(double expectation, double delta) {
  if (!(expectation > 0) || delta < 0 || delta >= 1) {
    throw InvalidSpec("Chernoff bound needs expectation > 0 and 0 <= delta < 1");
  }
  return std::exp(-delta * delta * expectation / 2.0);
}

MissBound miss_bound(int N, int wx, int wy) {
  if (N < 1 || wx < 0 || wy < 0 || wx > N || wy > N) throw InvalidSpec("miss bound arguments out of range");
  MissBound out;
  out.exact = Rational(binomial(N - wx, wy), binomial(N, wy));
  out.exact.canonicalize();
  BigInt num;
  BigInt den;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(N - wx), static_cast<unsigned long>(wy));
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(wy));
  out.bound = Rational(num, den);
  out.bound.canonicalize();
  return out;
}

}  // namespace qyao
