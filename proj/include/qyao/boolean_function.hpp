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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "qyao/bitstring.hpp"

namespace qyao {

enum class FunctionKind { total, promise };

/// A total function {0,1}^N -> {0,1} or a promise function D -> {0,1}.
///
/// Promise domains are stored as explicit input lists. Evaluating outside the
/// domain throws DomainViolation.
class BooleanFunction {
 public:
  using Evaluator = std::function<int(const BitString&)>;

  static BooleanFunction total(int arity, Evaluator evaluator, std::string name);
  // table[w] is f at the input whose packed word is w.
  static BooleanFunction from_truth_table(int arity, std::vector<int> table, std::string name);
  static BooleanFunction promise(int arity, std::vector<BitString> domain, Evaluator evaluator,
                                 std::string name);

  int arity() const noexcept { return arity_; }
  FunctionKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

  bool in_domain(const BitString& x) const;
  // Domain inputs in increasing order; for total functions this enumerates the cube.
  std::vector<BitString> domain() const;

  int evaluate(const BitString& x) const;
  int operator()(const BitString& x) const { return evaluate(x); }

 private:
  BooleanFunction(int arity, FunctionKind kind, Evaluator evaluator, std::string name);

  int arity_ = 0;
  FunctionKind kind_ = FunctionKind::total;
  Evaluator evaluator_;
  std::string name_;
  std::shared_ptr<const std::vector<BitString>> domain_list_;
  std::shared_ptr<const std::unordered_set<std::uint64_t>> domain_set_;
};

inline int evaluate(const BooleanFunction& f, const BitString& x) { return f.evaluate(x); }

/// f(x) = f_{|x|} for a profile f_0..f_N.
class SymmetricFunction {
 public:
  SymmetricFunction(int arity, std::vector<int> profile);
  // Profile string of N+1 characters, e.g. "0111" for OR_3.
  static SymmetricFunction from_profile(std::string_view profile);
  // f_k = [k >= t], 0 < t <= N.
  static SymmetricFunction threshold(int arity, int t);

  int arity() const noexcept { return arity_; }
  const std::vector<int>& profile() const noexcept { return profile_; }
  int at_weight(int k) const;
  bool is_constant() const;
  // The t of a threshold profile, if this is one.
  std::optional<int> threshold_value() const;

  int evaluate(const BitString& x) const { return at_weight(x.weight()); }
  std::string profile_string() const;
  BooleanFunction as_function() const;

 private:
  int arity_;
  std::vector<int> profile_;
};

/// min{|2k - N + 1| : f_k != f_{k+1}}; N for constant profiles.
int gamma(const SymmetricFunction& f);

SymmetricFunction or_function(int arity);
SymmetricFunction and_function(int arity);
// f(x) = 1 iff |x| > N/2.
SymmetricFunction majority(int arity);
SymmetricFunction parity(int arity);

// AND of sqrt(N) ORs over consecutive blocks of sqrt(N) bits.
BooleanFunction and_or_tree(int arity);

}  // namespace qyao
