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

#include "qyao/boolean_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "qyao/errors.hpp"

namespace qyao {

BooleanFunction::BooleanFunction(int arity, FunctionKind kind, Evaluator evaluator, std::string name)
    : arity_(arity), kind_(kind), evaluator_(std::move(evaluator)), name_(std::move(name)) {
  if (arity < 0 || arity > BitString::kMaxLength) throw InvalidSpec("arity out of range");
  if (!evaluator_) throw InvalidSpec("function needs an evaluator");
}

BooleanFunction BooleanFunction::total(int arity, Evaluator evaluator, std::string name) {
  return BooleanFunction(arity, FunctionKind::total, std::move(evaluator), std::move(name));
}

BooleanFunction BooleanFunction::from_truth_table(int arity, std::vector<int> table, std::string name) {
  if (arity > 24) throw ResourceLimit("truth tables are limited to 24 inputs");
  if (table.size() != (std::size_t{1} << arity)) {
    throw InvalidSpec("truth table must have 2^N entries");
  }
  for (int& v : table) {
    if (v != 0 && v != 1) throw InvalidSpec("truth table entries must be 0 or 1");
  }
  auto shared = std::make_shared<const std::vector<int>>(std::move(table));
  return total(
      arity, [shared](const BitString& x) { return (*shared)[x.word()]; }, std::move(name));
}

BooleanFunction BooleanFunction::promise(int arity, std::vector<BitString> domain, Evaluator evaluator,
                                         std::string name) {
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  std::unordered_set<std::uint64_t> set;
  set.reserve(domain.size());
  for (const auto& x : domain) {
    if (x.size() != arity) throw InvalidSpec("promise domain element has the wrong length");
    set.insert(x.word());
  }
  BooleanFunction f(arity, FunctionKind::promise, std::move(evaluator), std::move(name));
  f.domain_list_ = std::make_shared<const std::vector<BitString>>(std::move(domain));
  f.domain_set_ = std::make_shared<const std::unordered_set<std::uint64_t>>(std::move(set));
  return f;
}

bool BooleanFunction::in_domain(const BitString& x) const {
  if (x.size() != arity_) return false;
  if (kind_ == FunctionKind::total) return true;
  return domain_set_->contains(x.word());
}

std::vector<BitString> BooleanFunction::domain() const {
  if (kind_ == FunctionKind::promise) return *domain_list_;
  return all_inputs(arity_);
}

int BooleanFunction::evaluate(const BitString& x) const {
  if (x.size() != arity_) {
    throw DomainViolation(name_ + ": input length " + std::to_string(x.size()) + " != arity " +
                          std::to_string(arity_));
  }
  if (!in_domain(x)) throw DomainViolation(name_ + ": input " + x.to_string() + " violates the promise");
  return evaluator_(x);
}

SymmetricFunction::SymmetricFunction(int arity, std::vector<int> profile)
    : arity_(arity), profile_(std::move(profile)) {
  if (arity < 0 || arity > BitString::kMaxLength) throw InvalidSpec("arity out of range");
  if (profile_.size() != static_cast<std::size_t>(arity) + 1) {
    throw InvalidSpec("symmetric profile needs N+1 entries");
  }
  for (int v : profile_) {
    if (v != 0 && v != 1) throw InvalidSpec("profile entries must be 0 or 1");
  }
}

SymmetricFunction SymmetricFunction::from_profile(std::string_view profile) {
  if (profile.empty()) throw InvalidSpec("empty profile");
  std::vector<int> p;
  for (char c : profile) {
    if (c != '0' && c != '1') throw InvalidSpec("profile may only contain 0 and 1");
    p.push_back(c - '0');
  }
  return SymmetricFunction(static_cast<int>(profile.size()) - 1, std::move(p));
}

SymmetricFunction SymmetricFunction::threshold(int arity, int t) {
  if (t <= 0 || t > arity) throw InvalidSpec("threshold must satisfy 0 < t <= N");
  std::vector<int> p(static_cast<std::size_t>(arity) + 1);
  for (int k = 0; k <= arity; ++k) p[static_cast<std::size_t>(k)] = k >= t ? 1 : 0;
  return SymmetricFunction(arity, std::move(p));
}

int SymmetricFunction::at_weight(int k) const {
  if (k < 0 || k > arity_) throw InvalidSpec("Hamming weight out of range");
  return profile_[static_cast<std::size_t>(k)];
}

bool SymmetricFunction::is_constant() const {
  return std::all_of(profile_.begin(), profile_.end(), [&](int v) { return v == profile_.front(); });
}

std::optional<int> SymmetricFunction::threshold_value() const {
  for (int t = 1; t <= arity_; ++t) {
    bool match = true;
    for (int k = 0; k <= arity_ && match; ++k) match = at_weight(k) == (k >= t ? 1 : 0);
    if (match) return t;
  }
  return std::nullopt;
}

std::string SymmetricFunction::profile_string() const {
  std::string s;
  for (int v : profile_) s.push_back(static_cast<char>('0' + v));
  return s;
}

BooleanFunction SymmetricFunction::as_function() const {
  auto profile = profile_;
  return BooleanFunction::total(
      arity_, [profile](const BitString& x) { return profile[static_cast<std::size_t>(x.weight())]; },
      "symmetric " + std::to_string(arity_) + " profile=" + profile_string());
}

int gamma(const SymmetricFunction& f) {
  const int n = f.arity();
  int best = n;
  for (int k = 0; k < n; ++k) {
    if (f.at_weight(k) != f.at_weight(k + 1)) best = std::min(best, std::abs(2 * k - n + 1));
  }
  return best;
}

SymmetricFunction or_function(int arity) { return SymmetricFunction::threshold(arity, 1); }

SymmetricFunction and_function(int arity) { return SymmetricFunction::threshold(arity, arity); }

SymmetricFunction majority(int arity) {
  std::vector<int> p(static_cast<std::size_t>(arity) + 1);
  for (int k = 0; k <= arity; ++k) p[static_cast<std::size_t>(k)] = 2 * k > arity ? 1 : 0;
  return SymmetricFunction(arity, std::move(p));
}

SymmetricFunction parity(int arity) {
  std::vector<int> p(static_cast<std::size_t>(arity) + 1);
  for (int k = 0; k <= arity; ++k) p[static_cast<std::size_t>(k)] = k % 2;
  return SymmetricFunction(arity, std::move(p));
}

BooleanFunction and_or_tree(int arity) {
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(arity))));
  if (side * side != arity || arity == 0) {
    throw InvalidSpec("AND-OR tree needs a perfect-square number of inputs, got " + std::to_string(arity));
  }
  return BooleanFunction::total(
      arity,
      [side](const BitString& x) {
        const std::uint64_t block = low_mask(side);
        for (int b = 0; b < side; ++b) {
          if (((x.word() >> (b * side)) & block) == 0) return 0;
        }
        return 1;
      },
      "andor " + std::to_string(arity));
}

}  // namespace qyao
