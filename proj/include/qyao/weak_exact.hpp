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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qyao/bitstring.hpp"
#include "qyao/boolean_function.hpp"
#include "qyao/certificates.hpp"
#include "qyao/distribution.hpp"
#include "qyao/rational.hpp"
#include "qyao/query_sim.hpp"

namespace qyao {

/// Queries spent on one path, split by purpose.
struct QueryLedger {
  int grover = 0;
  int verification = 0;

  int total() const noexcept { return grover + verification; }
  QueryLedger operator+(const QueryLedger& o) const { return {grover + o.grover, verification + o.verification}; }
  friend auto operator<=>(const QueryLedger&, const QueryLedger&) = default;
};

template <typename T>
struct Weighted {
  T value;
  double probability = 0.0;
  QueryLedger queries;
};

/// Probability distribution over (classical value, queries spent) produced by
/// a hybrid algorithm: the classical control flow between quantum subroutine
/// calls, expanded over every measurement outcome.
template <typename T>
class Outcomes {
 public:
  Outcomes() = default;

  static Outcomes certain(T value, QueryLedger queries = {}) {
    Outcomes o;
    o.branches_.push_back({std::move(value), 1.0, queries});
    return o;
  }

  void add(T value, double probability, QueryLedger queries) {
    branches_.push_back({std::move(value), probability, queries});
  }
  void add_pruned(double mass) { pruned_ += mass; }

  const std::vector<Weighted<T>>& branches() const noexcept { return branches_; }
  double pruned() const noexcept { return pruned_; }

  // Sequential composition: continue every branch with next(value).
  template <typename F>
  auto then(F&& next) const {
    using Next = std::decay_t<decltype(next(std::declval<const T&>()))>;
    Next out;
    out.add_pruned(pruned_);
    for (const auto& b : branches_) {
      const auto sub = next(b.value);
      out.add_pruned(b.probability * sub.pruned());
      for (const auto& s : sub.branches()) out.add(s.value, b.probability * s.probability, b.queries + s.queries);
    }
    out.normalize();
    return out;
  }

  template <typename F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    Outcomes<U> out;
    out.add_pruned(pruned_);
    for (const auto& b : branches_) out.add(f(b.value), b.probability, b.queries);
    out.normalize();
    return out;
  }

  // Merges equal (value, ledger) branches and moves mass <= 1e-12 to pruned().
  void normalize() {
    std::sort(branches_.begin(), branches_.end(), [](const Weighted<T>& a, const Weighted<T>& b) {
      return std::tie(a.value, a.queries) < std::tie(b.value, b.queries);
    });
    std::vector<Weighted<T>> merged;
    for (auto& b : branches_) {
      if (!merged.empty() && merged.back().value == b.value && merged.back().queries == b.queries) {
        merged.back().probability += b.probability;
      } else {
        merged.push_back(std::move(b));
      }
    }
    branches_.clear();
    for (auto& b : merged) {
      if (b.probability > sim::kPruneThreshold) {
        branches_.push_back(std::move(b));
      } else {
        pruned_ += b.probability;
      }
    }
  }

  template <typename P>
  double probability_where(P&& predicate) const {
    double p = 0.0;
    for (const auto& b : branches_) {
      if (predicate(b.value)) p += b.probability;
    }
    return p;
  }

  int max_grover() const { return max_of([](const QueryLedger& q) { return q.grover; }); }
  int max_verification() const { return max_of([](const QueryLedger& q) { return q.verification; }); }
  int max_total() const { return max_of([](const QueryLedger& q) { return q.total(); }); }

 private:
  template <typename F>
  int max_of(F f) const {
    int best = 0;
    for (const auto& b : branches_) best = std::max(best, f(b.queries));
    return best;
  }

  std::vector<Weighted<T>> branches_;
  double pruned_ = 0.0;
};

/// Repeated exact search that marks every found position as a zero and
/// lowers the assumed count from k to 1. Every branch finds all ones of x
/// inside `mask` when k >= |x & mask|. With `stop_at`, the loop ends as soon
/// as that many ones are found.
Outcomes<BitString> find_all_ones(const BitString& x, int k, const std::optional<BitString>& mask = std::nullopt,
                                  std::optional<int> stop_at = std::nullopt);

// min(|found|, stop_at) for find_all_ones on x & mask; memoized.
Outcomes<int> count_ones(const BitString& x, const BitString& mask, int k, int stop_at);

// Sum over i = 1..k of the exact-search iteration count m(N', i).
int grover_budget(int space_size, int k);

struct FindAllReport {
  BitString input;
  int k = 0;
  Outcomes<BitString> outcomes;
  bool exact = false;
  int grover_bound = 0;
};
FindAllReport find_all_ones_report(const BitString& x, int k);

/// One counting pass: count up to `bound` ones of x inside `mask`.
struct CountingStage {
  BitString mask;
  int bound = 0;
  std::optional<SubsetCertificate> certificate;
  int round = 0;
};

/// Decides |x| >= t: counts the ones of the whole input up to B t, then of each
/// certified subpart; outputs 1 once t ones were found, 0 otherwise. Output 1
/// is always correct because every found one is verified.
class ThresholdAlgorithm {
 public:
  static ThresholdAlgorithm build(const InputDistribution& mu, int t, const ConstantsProfile& profile);

  // Appends certificate stages built against mu conditioned on the inputs this
  // algorithm is not certain on, until their mu-mass is at most `residual` or
  // `max_rounds` rounds were added. Returns the remaining uncertain mass.
  Rational amplify(const InputDistribution& mu, const Rational& residual, int max_rounds);

  // The same algorithm reading the positions of `subpart` in a longer input.
  ThresholdAlgorithm lifted(const BitString& subpart) const;

  // Output 1 or 0.
  Outcomes<int> run(const BitString& x) const;
  // Inputs of the support on which the output is not certainly [|x| >= t].
  std::vector<BitString> uncertain_inputs(const InputDistribution& mu) const;

  int length() const noexcept { return length_; }
  int threshold() const noexcept { return t_; }
  const std::vector<CountingStage>& stages() const noexcept { return stages_; }
  int rounds() const noexcept { return rounds_; }

 private:
  void add_window_stages(const InputDistribution& mu, int round);

  int length_ = 0;
  int t_ = 1;
  ConstantsProfile profile_;
  std::vector<CountingStage> stages_;
  int rounds_ = 0;
};

/// Exact search that is certain on a 1 - eps fraction of mu: exact search for
/// every assumed count up to t0 = ceil(log2(1/eps)), then rounds of the t = 1
/// threshold algorithm on hitting subsets built against the inputs still missed.
class WeakSearchAlgorithm {
 public:
  static WeakSearchAlgorithm build(const InputDistribution& mu, const Rational& epsilon,
                                   const ConstantsProfile& profile);

  // 1 if a verified one was found, 0 for 'no solutions'.
  Outcomes<int> run(const BitString& x) const;

  int length() const noexcept { return length_; }
  int t0() const noexcept { return t0_; }
  const std::vector<SubsetCertificate>& certificates() const noexcept { return certificates_; }
  const std::vector<ThresholdAlgorithm>& rounds() const noexcept { return rounds_; }

 private:
  int length_ = 0;
  int t0_ = 0;
  std::vector<SubsetCertificate> certificates_;
  std::vector<ThresholdAlgorithm> rounds_;
};

// Smallest integer t with 2^t eps >= 1.
int log2_inverse_ceil(const Rational& epsilon);

struct InputRecord {
  BitString input;
  Rational weight;
  int expected = 0;
  double acceptance = 0.0;
  bool certain = false;
  QueryLedger worst;
  double pruned = 0.0;
};

struct Envelope {
  std::string formula;
  double value = 0.0;
};

struct AlgorithmReport {
  std::string algorithm;
  std::string function;
  std::string distribution;
  ConstantsProfile profile;
  std::map<std::string, std::string> parameters;
  std::vector<InputRecord> records;
  Rational weak_fraction;
  Rational target;
  int worst_grover = 0;
  int worst_verification = 0;
  int worst_total = 0;
  Envelope envelope;
  std::vector<SubsetCertificate> certificates;
  bool fallback = false;
  double pruned_mass = 0.0;

  double envelope_ratio() const { return envelope.value > 0 ? worst_total / envelope.value : 0.0; }
  bool meets_target() const { return weak_fraction >= target; }
};

struct ReportOptions {
  // Extra inputs to record (with weight 0 when outside the support).
  std::vector<BitString> extra_inputs;
  std::string distribution_name = "custom";
};

AlgorithmReport threshold_weakly_exact(int t, const InputDistribution& mu, const ConstantsProfile& profile,
                                       const ReportOptions& options = {});

AlgorithmReport symmetric_weakly_exact(const SymmetricFunction& f, const InputDistribution& mu,
                                       const ConstantsProfile& profile, const ReportOptions& options = {});

AlgorithmReport weak_search(const InputDistribution& mu, const Rational& epsilon, const ConstantsProfile& profile,
                            const ReportOptions& options = {});

AlgorithmReport and_or_weakly_exact(const InputDistribution& mu, const ConstantsProfile& profile,
                                    const ReportOptions& options = {});

}  // namespace qyao
