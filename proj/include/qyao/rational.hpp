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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qyao {

// Exact probabilities and thresholds.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "3", "1/3", "0.25" and "-2/4"; decimals are converted exactly.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }
std::string to_string(const Rational& q);

BigInt binomial(int n, int k);
BigInt factorial(int n);

}  // namespace qyao
