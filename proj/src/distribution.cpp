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

#include "qyao/distribution.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

#include "qyao/errors.hpp"

namespace qyao {

namespace {

std::vector<WeightedInput> merge_entries(int length, std::vector<WeightedInput> entries) {
  for (const auto& e : entries) {
    if (e.input.size() != length) throw InvalidSpec("distribution input has the wrong length");
    if (e.weight < 0) throw InvalidSpec("negative weight for input " + e.input.to_string());
  }
  std::sort(entries.begin(), entries.end(),
            [](const WeightedInput& a, const WeightedInput& b) { return a.input < b.input; });
  std::vector<WeightedInput> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().input == e.input) {
      out.back().weight += e.weight;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const WeightedInput& e) { return e.weight == 0; });
  return out;
}

}  // namespace

InputDistribution InputDistribution::from_weights(int length, std::vector<WeightedInput> entries) {
  InputDistribution mu;
  mu.length_ = length;
  mu.entries_ = merge_entries(length, std::move(entries));
  Rational total = 0;
  for (const auto& e : mu.entries_) total += e.weight;
  if (total != 1) throw InvalidSpec("distribution weights sum to " + to_string(total) + ", not 1");
  return mu;
}

InputDistribution InputDistribution::normalized(int length, std::vector<WeightedInput> entries) {
  InputDistribution mu;
  mu.length_ = length;
  mu.entries_ = merge_entries(length, std::move(entries));
  Rational total = 0;
  for (const auto& e : mu.entries_) total += e.weight;
  if (total == 0) throw EmptyConditioning("distribution has zero total weight");
  for (auto& e : mu.entries_) e.weight /= total;
  return mu;
}

InputDistribution InputDistribution::uniform(int length) { return uniform_over(length, all_inputs(length)); }

InputDistribution InputDistribution::uniform_over(int length, const std::vector<BitString>& support) {
  std::vector<WeightedInput> entries;
  entries.reserve(support.size());
  for (const auto& x : support) entries.push_back({x, Rational(1)});
  return normalized(length, std::move(entries));
}

InputDistribution InputDistribution::point_mass(const BitString& x) {
  return from_weights(x.size(), {{x, Rational(1)}});
}

std::vector<BitString> InputDistribution::support() const {
  std::vector<BitString> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.input);
  return out;
}

Rational InputDistribution::weight(const BitString& x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const WeightedInput& e, const BitString& v) { return e.input < v; });
  if (it == entries_.end() || it->input != x) return 0;
  return it->weight;
}

Rational InputDistribution::mass(const Predicate& predicate) const {
  Rational total = 0;
  for (const auto& e : entries_) {
    if (predicate(e.input)) total += e.weight;
  }
  return total;
}

InputDistribution InputDistribution::condition(const Predicate& predicate) const {
  std::vector<WeightedInput> kept;
  for (const auto& e : entries_) {
    if (predicate(e.input)) kept.push_back(e);
  }
  if (kept.empty()) throw EmptyConditioning("conditioning event has zero mass");
  return normalized(length_, std::move(kept));
}

InputDistribution InputDistribution::induced(const Mapping& mapping, int image_length) const {
  std::map<BitString, Rational> pushed;
  for (const auto& e : entries_) {
    BitString y = mapping(e.input);
    if (y.size() != image_length) throw InvalidSpec("mapping produced an image of the wrong length");
    pushed[y] += e.weight;
  }
  InputDistribution mu;
  mu.length_ = image_length;
  mu.entries_.reserve(pushed.size());
  for (auto& [y, w] : pushed) mu.entries_.push_back({y, std::move(w)});
  return mu;
}

InputDistribution InputDistribution::complemented() const {
  return induced([](const BitString& x) { return x.complement(); }, length_);
}

InputDistribution seeded_skew(int length, std::uint64_t seed) {
  // Raw engine output keeps the weights identical across standard libraries.
  std::mt19937_64 rng(seed);
  const int centre = static_cast<int>(rng() % static_cast<std::uint64_t>(length + 1));
  std::vector<WeightedInput> entries;
  for (const auto& x : all_inputs(length)) {
    const std::uint64_t u = 1 + rng() % 64;
    const std::uint64_t boost = std::abs(x.weight() - centre) <= 1 ? 9 : 1;
    entries.push_back({x, Rational(static_cast<unsigned long>(u * boost))});
  }
  return InputDistribution::normalized(length, std::move(entries));
}

namespace {

BitString encode_simon(int n, const std::vector<std::uint64_t>& phi) {
  std::uint64_t word = 0;
  for (std::size_t a = 0; a < phi.size(); ++a) word |= phi[a] << (a * static_cast<std::size_t>(n));
  return BitString(n << n, word);
}

}  // namespace

InputDistribution simon_distribution(int n) {
  if (n < 1) throw InvalidSpec("Simon distribution needs n >= 1");
  if (n > 3) throw ResourceLimit("Simon distribution support is factorial in 2^n; n <= 3 supported");
  const int size = 1 << n;
  const int half = size / 2;
  std::vector<WeightedInput> entries;

  const Rational perm_weight(BigInt(1), 2 * factorial(size));
  std::vector<std::uint64_t> phi(static_cast<std::size_t>(size));
  std::iota(phi.begin(), phi.end(), 0);
  do {
    entries.push_back({encode_simon(n, phi), perm_weight});
  } while (std::next_permutation(phi.begin(), phi.end()));

  const Rational periodic_weight(BigInt(1), 2 * BigInt(size - 1) * binomial(size, half) * factorial(half));
  for (std::uint64_t s = 1; s < static_cast<std::uint64_t>(size); ++s) {
    std::vector<std::uint64_t> reps;
    for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(size); ++a) {
      if (a < (a ^ s)) reps.push_back(a);
    }
    // Injective assignments of values to the pairs {a, a^s}: choose a sorted
    // subset of values, then walk its permutations.
    std::vector<int> pick(static_cast<std::size_t>(size), 0);
    std::fill(pick.begin(), pick.begin() + half, 1);
    do {
      std::vector<std::uint64_t> values;
      for (int v = 0; v < size; ++v) {
        if (pick[static_cast<std::size_t>(v)]) values.push_back(static_cast<std::uint64_t>(v));
      }
      do {
        for (std::size_t r = 0; r < reps.size(); ++r) {
          phi[reps[r]] = values[r];
          phi[reps[r] ^ s] = values[r];
        }
        entries.push_back({encode_simon(n, phi), periodic_weight});
      } while (std::next_permutation(values.begin(), values.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return InputDistribution::from_weights(n << n, std::move(entries));
}

std::optional<std::uint64_t> simon_period(int n, const BitString& x) {
  const int size = 1 << n;
  if (x.size() != n * size) return std::nullopt;
  std::vector<std::uint64_t> phi(static_cast<std::size_t>(size));
  for (int a = 0; a < size; ++a) phi[static_cast<std::size_t>(a)] = (x.word() >> (a * n)) & low_mask(n);
  std::optional<std::uint64_t> s;
  for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(size); ++a) {
    for (std::uint64_t b = a + 1; b < static_cast<std::uint64_t>(size); ++b) {
      if (phi[a] != phi[b]) continue;
      if (s && *s != (a ^ b)) return std::nullopt;
      s = a ^ b;
    }
  }
  if (!s) return 0;
  // With a candidate s != 0 every a must collide with a ^ s.
  for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(size); ++a) {
    if (phi[a] != phi[a ^ *s]) return std::nullopt;
  }
  return s;
}

BooleanFunction simon_function(int n) {
  auto mu = simon_distribution(n);
  return BooleanFunction::promise(
      mu.length(), mu.support(),
      [n](const BitString& x) {
        auto s = simon_period(n, x);
        if (!s) throw DomainViolation("input violates the Simon promise");
        return *s != 0 ? 1 : 0;
      },
      "simon " + std::to_string(n));
}

}  // namespace qyao
