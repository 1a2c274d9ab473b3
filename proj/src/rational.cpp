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

#include "qyao/rational.hpp"

#include <cctype>

#include "qyao/errors.hpp"

namespace qyao {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  // "0.333..." repeats the last written digit.
  bool repeating = false;
  if (s.size() > 3 && s.substr(s.size() - 3) == "...") {
    repeating = true;
    s.remove_suffix(3);
  }
  if (repeating && (s.find('.') == std::string_view::npos || s.back() == '.')) {
    throw InvalidSpec("repeating decimal needs a fractional digit: '" + std::string(text) + "'");
  }
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InvalidSpec("not a rational: '" + std::string(text) + "'");
    }
    const BigInt d{std::string(den)};
    if (d == 0) throw InvalidSpec("zero denominator in '" + std::string(text) + "'");
    out = Rational(BigInt(std::string(num)), d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw InvalidSpec("not a decimal: '" + std::string(text) + "'");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    const BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
    out = Rational(w * scale + f, scale);
    if (repeating) {
      const int d = frac.back() - '0';
      out += Rational(BigInt(d), BigInt(9) * scale);
    }
  } else {
    if (!all_digits(s)) throw InvalidSpec("not a number: '" + std::string(text) + "'");
    out = Rational(BigInt(std::string(s)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(int n) {
  if (n < 0) throw InvalidSpec("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace qyao
