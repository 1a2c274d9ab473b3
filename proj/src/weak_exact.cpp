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

#include "qyao/weak_exact.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <unordered_set>

#include "qyao/amplification.hpp"
#include "qyao/errors.hpp"
#include "qyao/parallel.hpp"
#include "qyao/search_cache.hpp"

namespace qyao {

namespace {

Outcomes<int> exact_search_found(const BitString& x, const BitString& mask, const BitString& excluded, int solutions) {
  grover::SearchSpec spec;
  spec.input_length = x.size();
  spec.mask = mask;
  spec.excluded = excluded;
  spec.assumed_solutions = solutions;
  spec.mode = grover::Mode::exact;
  spec.verify = true;
  const auto so = search_outcome(spec, x);
  const QueryLedger cost{so.search_queries, so.verification_queries};
  Outcomes<int> out;
  double found = 0.0;
  for (const auto& [position, p] : so.found) found += p;
  out.add(1, found, cost);
  out.add(0, so.miss, cost);
  out.add_pruned(so.pruned);
  out.normalize();
  return out;
}

// The count depends on x and the mask only through the mask size and the
// number of ones inside it, since the searches commute with relabelling.
struct CountKey {
  int space;
  int ones;
  int k;
  int stop_at;
  friend bool operator==(const CountKey&, const CountKey&) = default;
};

struct CountKeyHash {
  std::size_t operator()(const CountKey& key) const noexcept {
    const std::uint64_t h = static_cast<std::uint64_t>(key.space) | static_cast<std::uint64_t>(key.ones) << 8 |
                            static_cast<std::uint64_t>(key.k) << 16 | static_cast<std::uint64_t>(key.stop_at) << 24;
    return std::hash<std::uint64_t>{}(h);
  }
};

MemoCache<CountKey, Outcomes<int>, CountKeyHash>& count_cache() {
  static MemoCache<CountKey, Outcomes<int>, CountKeyHash> instance;
  return instance;
}

bool is_certain(double acceptance, int expected) {
  return std::abs(acceptance - expected) <= sim::kCertainTolerance;
}

}  // namespace

Outcomes<BitString> find_all_ones(const BitString& x, int k, const std::optional<BitString>& mask,
                                  std::optional<int> stop_at) {
  const int n = x.size();
  const BitString space = mask.value_or(BitString::ones(n));
  if (space.size() != n) throw InvalidSpec("mask length differs from the input length");
  if (k < 0) throw InvalidSpec("find_all_ones needs k >= 0");
  k = std::min(k, space.weight());
  auto found = Outcomes<BitString>::certain(BitString::zeros(n));
  for (int i = k; i >= 1; --i) {
    found = found.then([&](const BitString& f) {
      if (stop_at && f.weight() >= *stop_at) return Outcomes<BitString>::certain(f);
      grover::SearchSpec spec;
      spec.input_length = n;
      spec.mask = space;
      spec.excluded = f;
      spec.assumed_solutions = i;
      spec.mode = grover::Mode::exact;
      spec.verify = true;
      const auto so = search_outcome(spec, x);
      const QueryLedger cost{so.search_queries, so.verification_queries};
      Outcomes<BitString> step;
      for (const auto& [position, p] : so.found) step.add(f.with(position, true), p, cost);
      step.add(f, so.miss, cost);
      step.add_pruned(so.pruned);
      step.normalize();
      return step;
    });
  }
  return found;
}

Outcomes<int> count_ones(const BitString& x, const BitString& mask, int k, int stop_at) {
  if (x.size() != mask.size()) throw InvalidSpec("mask length differs from the input length");
  const CountKey key{mask.weight(), (x & mask).weight(), std::min(k, mask.weight()), stop_at};
  return count_cache().get_or_compute(key, [&] {
    const BitString packed(key.space, low_mask(key.ones));
    return find_all_ones(packed, key.k, std::nullopt, stop_at).map([stop_at](const BitString& f) {
      return std::min(f.weight(), stop_at);
    });
  });
}

int grover_budget(int space_size, int k) {
  int total = 0;
  for (int i = 1; i <= std::min(k, space_size); ++i) total += grover::iteration_count(space_size, i).iterations;
  return total;
}

FindAllReport find_all_ones_report(const BitString& x, int k) {
  FindAllReport report{x, k, find_all_ones(x, k), true, grover_budget(x.size(), k)};
  for (const auto& b : report.outcomes.branches()) {
    if (b.value != x) report.exact = false;
  }
  if (report.outcomes.pruned() > sim::kCertainTolerance) report.exact = false;
  return report;
}

// ---------------------------------------------------------------------------
// Threshold

ThresholdAlgorithm ThresholdAlgorithm::build(const InputDistribution& mu, int t, const ConstantsProfile& profile) {
  const int n = mu.length();
  if (t < 1 || t > n) throw InvalidSpec("threshold must satisfy 0 < t <= N");
  ThresholdAlgorithm algo;
  algo.length_ = n;
  algo.t_ = t;
  algo.profile_ = profile;
  const long long initial = std::min<long long>(static_cast<long long>(profile.initial_bound_factor) * t, n);
  algo.stages_.push_back({BitString::ones(n), static_cast<int>(initial), std::nullopt, 0});
  algo.add_window_stages(mu, 0);
  return algo;
}

void ThresholdAlgorithm::add_window_stages(const InputDistribution& mu, int round) {
  for (int i = profile_.i_min; i < 62 && (static_cast<long long>(t_) << (i + 1)) <= length_; ++i) {
    const long long low = static_cast<long long>(t_) << i;
    const long long high = low * 2;
    const auto in_window = [&](const BitString& x) { return x.weight() >= low && x.weight() <= high; };
    if (mu.mass(in_window) == 0) continue;
    auto cert = find_weight_window_subset(mu, t_, i, profile_);
    const int bound = std::min(profile_.cap * t_, cert.mask.weight());
    const bool duplicate = std::any_of(stages_.begin(), stages_.end(), [&](const CountingStage& s) {
      return s.mask == cert.mask && s.bound >= bound;
    });
    if (duplicate) continue;
    stages_.push_back({cert.mask, bound, std::move(cert), round});
  }
}

Rational ThresholdAlgorithm::amplify(const InputDistribution& mu, const Rational& residual, int max_rounds) {
  auto uncertain_mass = [&](const std::vector<BitString>& u) {
    Rational m = 0;
    for (const auto& x : u) m += mu.weight(x);
    return m;
  };
  auto uncertain = uncertain_inputs(mu);
  Rational mass = uncertain_mass(uncertain);
  for (int r = 1; r <= max_rounds && mass > residual; ++r) {
    std::unordered_set<BitString> pending(uncertain.begin(), uncertain.end());
    const auto conditioned = mu.condition([&](const BitString& x) { return pending.contains(x); });
    const auto before = stages_.size();
    add_window_stages(conditioned, r);
    if (stages_.size() == before) break;
    rounds_ = r;
    uncertain = uncertain_inputs(mu);
    mass = uncertain_mass(uncertain);
  }
  return mass;
}

ThresholdAlgorithm ThresholdAlgorithm::lifted(const BitString& subpart) const {
  if (subpart.weight() != length_) throw InvalidSpec("subpart weight must equal the algorithm length");
  ThresholdAlgorithm out = *this;
  out.length_ = subpart.size();
  for (auto& stage : out.stages_) stage.mask = BitString::expand(stage.mask, subpart);
  return out;
}

Outcomes<int> ThresholdAlgorithm::run(const BitString& x) const {
  if (x.size() != length_) throw InvalidSpec("threshold input has the wrong length");
  auto out = Outcomes<int>::certain(0);
  for (const auto& stage : stages_) {
    out = out.then([&](int decided) {
      if (decided == 1) return Outcomes<int>::certain(1);
      return count_ones(x, stage.mask, stage.bound, t_).map([this](int c) { return c >= t_ ? 1 : 0; });
    });
  }
  return out;
}

std::vector<BitString> ThresholdAlgorithm::uncertain_inputs(const InputDistribution& mu) const {
  std::vector<BitString> out;
  for (const auto& e : mu.entries()) {
    const int expected = e.input.weight() >= t_ ? 1 : 0;
    const double accept = run(e.input).probability_where([](int v) { return v == 1; });
    if (!is_certain(accept, expected)) out.push_back(e.input);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weak search

int log2_inverse_ceil(const Rational& epsilon) {
  if (epsilon <= 0) throw InvalidSpec("epsilon must be positive");
  int t = 0;
  Rational scaled = epsilon;
  while (scaled < 1) {
    scaled *= 2;
    ++t;
  }
  return t;
}

WeakSearchAlgorithm WeakSearchAlgorithm::build(const InputDistribution& mu, const Rational& epsilon,
                                               const ConstantsProfile& profile) {
  if (epsilon <= 0 || epsilon >= 1) throw InvalidSpec("weak search needs 0 < eps < 1");
  WeakSearchAlgorithm algo;
  algo.length_ = mu.length();
  algo.t0_ = log2_inverse_ceil(epsilon);
  const Rational hit_target(5, 6);
  for (int r = 1; r <= algo.t0_; ++r) {
    std::unordered_set<BitString> missed;
    for (const auto& e : mu.entries()) {
      if (e.input.weight() == 0) continue;
      if (!is_certain(algo.run(e.input).probability_where([](int v) { return v == 1; }), 1)) missed.insert(e.input);
    }
    if (missed.empty()) break;
    const auto residual = mu.condition([&](const BitString& x) { return missed.contains(x); });
    SubsetCertificate cert;
    try {
      cert = find_hitting_subset(residual, algo.t0_, std::log(6.0), hit_target, profile);
    } catch (const EmptyConditioning&) {
      break;
    }
    const BitString y = cert.mask;
    const auto sub = residual.induced([&](const BitString& x) { return x.compress(y); }, y.weight());
    algo.rounds_.push_back(ThresholdAlgorithm::build(sub, 1, profile).lifted(y));
    algo.certificates_.push_back(std::move(cert));
  }
  return algo;
}

Outcomes<int> WeakSearchAlgorithm::run(const BitString& x) const {
  if (x.size() != length_) throw InvalidSpec("search input has the wrong length");
  const BitString all = BitString::ones(length_);
  const BitString none = BitString::zeros(length_);
  auto out = Outcomes<int>::certain(0);
  for (int count = 1; count <= std::min(t0_, length_); ++count) {
    out = out.then([&](int found) {
      if (found == 1) return Outcomes<int>::certain(1);
      return exact_search_found(x, all, none, count);
    });
  }
  for (const auto& round : rounds_) {
    out = out.then([&](int found) {
      if (found == 1) return Outcomes<int>::certain(1);
      return round.run(x);
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

using Runner = std::function<Outcomes<int>(const BitString&)>;
using Expected = std::function<int(const BitString&)>;

void fill_records(AlgorithmReport& report, const InputDistribution& mu, const Runner& runner,
                  const Expected& expected, const ReportOptions& options) {
  std::vector<BitString> inputs = mu.support();
  const std::size_t support_size = inputs.size();
  std::unordered_set<BitString> seen(inputs.begin(), inputs.end());
  for (const auto& x : options.extra_inputs) {
    if (seen.insert(x).second) inputs.push_back(x);
  }
  report.records.assign(inputs.size(), {});
  parallel_for(inputs.size(), [&](std::size_t k) {
    const auto& x = inputs[k];
    const auto outcome = runner(x);
    InputRecord r;
    r.input = x;
    r.weight = k < support_size ? mu.entries()[k].weight : Rational(0);
    r.expected = expected(x);
    r.acceptance = outcome.probability_where([](int v) { return v == 1; });
    r.certain = is_certain(r.acceptance, r.expected) && outcome.pruned() <= sim::kCertainTolerance;
    r.worst = {outcome.max_grover(), outcome.max_verification()};
    r.pruned = outcome.pruned();
    // The largest-total branch decides the split reported for this input.
    for (const auto& b : outcome.branches()) {
      if (b.queries.total() == outcome.max_total()) {
        r.worst = b.queries;
        break;
      }
    }
    report.records[k] = std::move(r);
  });
  report.weak_fraction = 0;
  for (std::size_t k = 0; k < report.records.size(); ++k) {
    const auto& r = report.records[k];
    if (r.certain) report.weak_fraction += r.weight;
    report.pruned_mass = std::max(report.pruned_mass, r.pruned);
    if (k >= support_size) continue;
    report.worst_grover = std::max(report.worst_grover, r.worst.grover);
    report.worst_verification = std::max(report.worst_verification, r.worst.verification);
    report.worst_total = std::max(report.worst_total, r.worst.total());
  }
}

void note_certificates(AlgorithmReport& report, const ThresholdAlgorithm& algo) {
  for (const auto& stage : algo.stages()) {
    if (!stage.certificate) continue;
    report.certificates.push_back(*stage.certificate);
    if (stage.certificate->fallback) report.fallback = true;
  }
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", v);
  return buffer;
}

}  // namespace

AlgorithmReport threshold_weakly_exact(int t, const InputDistribution& mu, const ConstantsProfile& profile,
                                       const ReportOptions& options) {
  const int n = mu.length();
  const auto algo = ThresholdAlgorithm::build(mu, t, profile);
  AlgorithmReport report;
  report.algorithm = "threshold";
  report.function = "threshold " + std::to_string(n) + " t=" + std::to_string(t);
  report.distribution = options.distribution_name;
  report.profile = profile;
  report.parameters = {{"N", std::to_string(n)},
                       {"t", std::to_string(t)},
                       {"stages", std::to_string(algo.stages().size())}};
  report.target = Rational(2, 3);
  report.envelope = {"sqrt(t*N)", std::sqrt(static_cast<double>(t) * n)};
  note_certificates(report, algo);
  fill_records(
      report, mu, [&](const BitString& x) { return algo.run(x); },
      [t](const BitString& x) { return x.weight() >= t ? 1 : 0; }, options);
  return report;
}

namespace {

/// Counting near the jumps of f: decide |x| < T1 or #zeros < T3 with amplified
/// threshold tests, count exactly there, and output the constant value between.
class SymmetricAlgorithm {
 public:
  SymmetricAlgorithm(const SymmetricFunction& f, const InputDistribution& mu, const ConstantsProfile& profile)
      : f_(f), n_(f.arity()), gamma_(gamma(f)) {
    t1_ = (n_ - gamma_ + 1) / 2;
    const int l3 = static_cast<int>(std::floor((n_ + gamma_ - 2) / 2.0)) + 1;
    t3_ = n_ - l3 + 1;
    if (f.is_constant()) return;
    const Rational residual(1, 6);
    if (t1_ >= 1) {
      test1_ = ThresholdAlgorithm::build(mu, t1_, profile);
      test1_->amplify(mu, residual, 3);
    }
    if (t3_ >= 1 && t3_ <= n_) {
      const auto flipped = mu.complemented();
      test3_ = ThresholdAlgorithm::build(flipped, t3_, profile);
      test3_->amplify(flipped, residual, 3);
    }
  }

  Outcomes<int> run(const BitString& x) const {
    if (f_.is_constant()) return Outcomes<int>::certain(f_.at_weight(0));
    const BitString all = BitString::ones(n_);
    const int exhaustive = n_ + 1;
    auto first = test1_ ? test1_->run(x) : Outcomes<int>::certain(1);
    return first.then([&](int at_least_t1) {
      if (at_least_t1 == 0) {
        return count_ones(x, all, t1_ - 1, exhaustive).map([this](int ones) { return f_.at_weight(ones); });
      }
      const BitString flipped = x.complement();
      auto third = test3_ ? test3_->run(flipped) : Outcomes<int>::certain(t3_ > n_ ? 0 : 1);
      return third.then([&, flipped](int at_least_t3) {
        if (at_least_t3 == 0) {
          return count_ones(flipped, all, std::min(t3_ - 1, n_), exhaustive).map([this](int zeros) {
            return f_.at_weight(n_ - zeros);
          });
        }
        return Outcomes<int>::certain(f_.at_weight(std::min(t1_, n_)));
      });
    });
  }

  int gamma_value() const { return gamma_; }
  int t1() const { return t1_; }
  int t3() const { return t3_; }
  const std::optional<ThresholdAlgorithm>& test1() const { return test1_; }
  const std::optional<ThresholdAlgorithm>& test3() const { return test3_; }

 private:
  SymmetricFunction f_;
  int n_;
  int gamma_;
  int t1_ = 0;
  int t3_ = 0;
  std::optional<ThresholdAlgorithm> test1_;
  std::optional<ThresholdAlgorithm> test3_;
};

}  // namespace

AlgorithmReport symmetric_weakly_exact(const SymmetricFunction& f, const InputDistribution& mu,
                                       const ConstantsProfile& profile, const ReportOptions& options) {
  if (f.arity() != mu.length()) throw InvalidSpec("function arity differs from the distribution length");
  const int n = f.arity();
  const SymmetricAlgorithm algo(f, mu, profile);
  AlgorithmReport report;
  report.algorithm = "symmetric";
  report.function = "symmetric " + std::to_string(n) + " profile=" + f.profile_string();
  report.distribution = options.distribution_name;
  report.profile = profile;
  report.parameters = {{"N", std::to_string(n)},
                       {"gamma", std::to_string(algo.gamma_value())},
                       {"ones_threshold", std::to_string(algo.t1())},
                       {"zeros_threshold", std::to_string(algo.t3())},
                       {"amplification_rounds",
                        std::to_string(std::max(algo.test1() ? algo.test1()->rounds() : 0,
                                                algo.test3() ? algo.test3()->rounds() : 0))}};
  report.target = Rational(2, 3);
  report.envelope = {"sqrt(N*(N-Gamma))", std::sqrt(static_cast<double>(n) * (n - algo.gamma_value()))};
  if (algo.test1()) note_certificates(report, *algo.test1());
  if (algo.test3()) note_certificates(report, *algo.test3());
  fill_records(
      report, mu, [&](const BitString& x) { return algo.run(x); },
      [&](const BitString& x) { return f.evaluate(x); }, options);
  return report;
}

AlgorithmReport weak_search(const InputDistribution& mu, const Rational& epsilon, const ConstantsProfile& profile,
                            const ReportOptions& options) {
  const int n = mu.length();
  const auto algo = WeakSearchAlgorithm::build(mu, epsilon, profile);
  AlgorithmReport report;
  report.algorithm = "search";
  report.function = "or " + std::to_string(n);
  report.distribution = options.distribution_name;
  report.profile = profile;
  report.parameters = {{"N", std::to_string(n)},
                       {"epsilon", to_string(epsilon)},
                       {"t0", std::to_string(algo.t0())},
                       {"rounds", std::to_string(algo.rounds().size())}};
  report.target = 1 - epsilon;
  const double log_term = std::log2(1.0 / epsilon.get_d());
  report.envelope = {"sqrt(N*log2(1/eps))", std::sqrt(n * log_term)};
  for (const auto& cert : algo.certificates()) {
    report.certificates.push_back(cert);
    if (cert.fallback) report.fallback = true;
  }
  for (const auto& round : algo.rounds()) note_certificates(report, round);
  fill_records(
      report, mu, [&](const BitString& x) { return algo.run(x); },
      [](const BitString& x) { return x.weight() > 0 ? 1 : 0; }, options);
  return report;
}

AlgorithmReport and_or_weakly_exact(const InputDistribution& mu, const ConstantsProfile& profile,
                                    const ReportOptions& options) {
  const int n = mu.length();
  const auto f = and_or_tree(n);
  const int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (m > 6) throw ResourceLimit("AND-OR evaluation enumerates 2^sqrt(N) answer vectors; sqrt(N) <= 6 supported");

  std::vector<BitString> blocks;
  for (int b = 0; b < m; ++b) blocks.push_back(BitString(n, low_mask(m) << (b * m)));

  struct BlockTable {
    std::vector<double> acceptance;
    std::vector<char> certain;
    QueryLedger worst;
  };
  std::vector<BlockTable> tables;
  AlgorithmReport report;
  const Rational block_eps(1, 6 * m);
  for (int b = 0; b < m; ++b) {
    const auto block_mu = mu.induced([&](const BitString& x) { return x.compress(blocks[b]); }, m);
    const auto algo = WeakSearchAlgorithm::build(block_mu, block_eps, profile);
    for (const auto& cert : algo.certificates()) {
      report.certificates.push_back(cert);
      if (cert.fallback) report.fallback = true;
    }
    BlockTable table;
    for (const auto& y : all_inputs(m)) {
      const auto outcome = algo.run(y);
      const double accept = outcome.probability_where([](int v) { return v == 1; });
      table.acceptance.push_back(accept);
      table.certain.push_back(is_certain(accept, y.weight() > 0 ? 1 : 0) &&
                              outcome.pruned() <= sim::kCertainTolerance);
      for (const auto& br : outcome.branches()) {
        if (br.queries.total() > table.worst.total()) table.worst = br.queries;
      }
    }
    tables.push_back(std::move(table));
  }
  QueryLedger block_worst;
  for (const auto& table : tables) {
    if (table.worst.total() > block_worst.total()) block_worst = table.worst;
  }

  const auto answers = [&](const BitString& x) {
    BitString a(m);
    for (int b = 0; b < m; ++b) a = a.with(b, (x & blocks[b]).weight() > 0);
    return a;
  };
  const auto top_mu = mu.induced([&](const BitString& x) { return answers(x).complement(); }, m);
  auto top = ThresholdAlgorithm::build(top_mu, 1, profile);
  top.amplify(top_mu, Rational(1, 6), 3);
  for (const auto& stage : top.stages()) {
    if (stage.certificate) {
      report.certificates.push_back(*stage.certificate);
      if (stage.certificate->fallback) report.fallback = true;
    }
  }
  std::vector<Outcomes<int>> top_runs;
  for (const auto& a : all_inputs(m)) top_runs.push_back(top.run(a.complement()));

  // Block answers substitute for block queries; a coherent call costs a
  // computation and its reversal.
  const auto runner = [&](const BitString& x) {
    std::vector<std::uint64_t> block_words(static_cast<std::size_t>(m));
    for (int b = 0; b < m; ++b) block_words[static_cast<std::size_t>(b)] = x.compress(blocks[b]).word();
    Outcomes<int> out;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
      double p = 1.0;
      for (int b = 0; b < m && p > 0; ++b) {
        const double accept = tables[static_cast<std::size_t>(b)].acceptance[block_words[static_cast<std::size_t>(b)]];
        p *= ((a >> b) & 1U) ? accept : 1.0 - accept;
      }
      if (p <= 0) continue;
      for (const auto& br : top_runs[a].branches()) {
        const int calls = br.queries.total();
        const QueryLedger cost{2 * calls * block_worst.grover, 2 * calls * block_worst.verification};
        // The top algorithm reports 1 when it finds a block whose OR is 0.
        out.add(br.value == 1 ? 0 : 1, p * br.probability, cost);
      }
    }
    out.normalize();
    return out;
  };
  const auto expected = [&](const BitString& x) { return f.evaluate(x); };
  const auto blocks_certain = [&](const BitString& x) {
    for (int b = 0; b < m; ++b) {
      if (!tables[static_cast<std::size_t>(b)].certain[x.compress(blocks[b]).word()]) return false;
    }
    return true;
  };

  report.algorithm = "andor";
  report.function = "andor " + std::to_string(n);
  report.distribution = options.distribution_name;
  report.profile = profile;
  report.parameters = {{"N", std::to_string(n)},
                       {"blocks", std::to_string(m)},
                       {"block_epsilon", to_string(block_eps)},
                       {"block_worst_queries", std::to_string(block_worst.total())},
                       {"top_stages", std::to_string(top.stages().size())}};
  report.target = Rational(2, 3);
  report.envelope = {"sqrt(N*log2(N))", std::sqrt(n * std::log2(static_cast<double>(n)))};
  fill_records(report, mu, runner, expected, options);
  // Certified-exact composition scores an input only when every block is certain.
  report.weak_fraction = 0;
  for (auto& r : report.records) {
    r.certain = r.certain && blocks_certain(r.input);
    if (r.certain) report.weak_fraction += r.weight;
  }
  report.parameters["top_worst_calls"] = format_double(static_cast<double>(report.worst_total) /
                                                       std::max(1, 2 * block_worst.total()));
  return report;
}

}  // namespace qyao
