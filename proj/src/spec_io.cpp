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

#include "qyao/spec_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "qyao/errors.hpp"

namespace qyao {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) break;
    std::size_t end = 0;
    while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
    out.push_back(s.substr(0, end));
    s.remove_prefix(end);
  }
  return out;
}

long long parse_int(std::string_view s, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidSpec(std::string("expected an integer for ") + what + ", got '" + std::string(s) + "'");
  }
  return value;
}

// Value of `key=<value>`; throws if the word has another key.
std::string_view keyed(std::string_view word, std::string_view key) {
  if (word.size() <= key.size() || word.substr(0, key.size()) != key || word[key.size()] != '=') {
    throw InvalidSpec("expected " + std::string(key) + "=<value>, got '" + std::string(word) + "'");
  }
  return word.substr(key.size() + 1);
}

int parse_arity(std::string_view s) {
  const auto n = parse_int(s, "N");
  if (n < 1 || n > BitString::kMaxLength) throw InvalidSpec("N must be in [1, 64]");
  return static_cast<int>(n);
}

std::vector<int> hex_truth_table(std::string_view hex, int arity) {
  if (arity > 24) throw ResourceLimit("truth tables are limited to 24 inputs");
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  const std::size_t entries = std::size_t{1} << arity;
  std::vector<int> table(entries, 0);
  const std::size_t digits = hex.size();
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[digits - 1 - d])));
    int v = 0;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else {
      throw InvalidSpec("bad hex digit in truth table");
    }
    for (int b = 0; b < 4; ++b) {
      if (!((v >> b) & 1)) continue;
      const std::size_t j = 4 * d + static_cast<std::size_t>(b);
      if (j >= entries) throw InvalidSpec("truth table has bits beyond 2^N entries");
      table[j] = 1;
    }
  }
  return table;
}

}  // namespace

FunctionSpec parse_function_spec(std::string_view text) {
  const auto words = split_words(text);
  if (words.size() != 3) {
    throw InvalidSpec("function spec needs three fields: <kind> N key=value, got '" + std::string(text) + "'");
  }
  const int arity = parse_arity(words[1]);
  const std::string canonical(trim(text));
  if (words[0] == "symmetric") {
    auto profile = SymmetricFunction::from_profile(keyed(words[2], "profile"));
    if (profile.arity() != arity) throw InvalidSpec("profile length must be N+1");
    return {profile.as_function(), profile, canonical};
  }
  if (words[0] == "threshold") {
    const auto t = parse_int(keyed(words[2], "t"), "t");
    if (t < 1 || t > arity) throw InvalidSpec("threshold must satisfy 0 < t <= N");
    auto sym = SymmetricFunction::threshold(arity, static_cast<int>(t));
    return {sym.as_function(), sym, canonical};
  }
  if (words[0] == "table") {
    auto table = hex_truth_table(keyed(words[2], "hex"), arity);
    return {BooleanFunction::from_truth_table(arity, std::move(table), canonical), std::nullopt, canonical};
  }
  throw InvalidSpec("unknown function kind '" + std::string(words[0]) + "'");
}

FunctionSpec named_function(std::string_view name, int arity) {
  const auto spec_of = [&](const SymmetricFunction& f) {
    return FunctionSpec{f.as_function(), f,
                        "symmetric " + std::to_string(arity) + " profile=" + f.profile_string()};
  };
  if (arity < 1) throw InvalidSpec("N must be positive");
  if (name == "or") return spec_of(or_function(arity));
  if (name == "and") return spec_of(and_function(arity));
  if (name == "majority") return spec_of(majority(arity));
  if (name == "parity") return spec_of(parity(arity));
  if (name == "andor") return {and_or_tree(arity), std::nullopt, "andor " + std::to_string(arity)};
  auto spec = parse_function_spec(name);
  if (spec.function.arity() != arity) throw InvalidSpec("function spec arity does not match --N");
  return spec;
}

InputDistribution parse_distribution_spec(std::string_view text, int length) {
  const auto body = trim(text);
  const auto words = split_words(body);
  if (words.size() == 1 && words[0] == "uniform") return InputDistribution::uniform(length);
  if (!words.empty() && words[0] == "simon") {
    if (words.size() != 2) throw InvalidSpec("expected 'simon n=<int>'");
    const auto n = parse_int(keyed(words[1], "n"), "n");
    if (n < 1) throw InvalidSpec("simon n must be positive");
    if (n > 3) throw ResourceLimit("Simon distribution support is factorial in 2^n; n <= 3 supported");
    auto mu = simon_distribution(static_cast<int>(n));
    if (mu.length() != length) {
      throw InvalidSpec("simon n=" + std::to_string(n) + " has N=" + std::to_string(mu.length()));
    }
    return mu;
  }
  if (!words.empty() && words[0] == "skew") {
    if (words.size() != 2) throw InvalidSpec("expected 'skew seed=<int>'");
    const auto seed = parse_int(keyed(words[1], "seed"), "seed");
    return seeded_skew(length, static_cast<std::uint64_t>(seed));
  }

  std::vector<WeightedInput> entries;
  std::istringstream lines{std::string(body)};
  std::string line;
  while (std::getline(lines, line)) {
    const auto row = trim(line);
    if (row.empty() || row.front() == '#') continue;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos) throw InvalidSpec("CSV row needs '<input>,<weight>': " + line);
    const auto bits = trim(row.substr(0, comma));
    if (bits == "input") continue;  // header row
    auto x = BitString::parse(bits);
    if (x.size() != length) throw InvalidSpec("CSV input '" + std::string(bits) + "' has the wrong length");
    entries.push_back({x, parse_rational(row.substr(comma + 1))});
  }
  if (entries.empty()) throw InvalidSpec("empty distribution spec");
  return InputDistribution::normalized(length, std::move(entries));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace qyao
