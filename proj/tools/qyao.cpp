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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qyao/errors.hpp"
#include "qyao/parallel.hpp"
#include "qyao/report_io.hpp"
#include "qyao/spec_io.hpp"
#include "qyao/weak_exact.hpp"
#include "qyao/yao.hpp"

namespace {

using namespace qyao;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Config {
  std::string command;
  std::string algorithm;
  std::optional<int> n;
  std::optional<int> t;
  std::optional<int> k;
  std::optional<std::string> x;
  std::string mu = "uniform";
  std::string profile = "desk";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> eps;
  std::optional<std::string> f;
  std::optional<std::string> function_file;
  std::optional<std::string> out;
  bool no_timestamp = false;
  bool per_input = false;
  std::optional<std::string> sweep;
  std::optional<double> max_ratio;
  std::optional<double> offset;
  int random_checks = 100;
};

// Default PASS envelopes: worst queries <= ratio * envelope + offset.
struct EnvelopeLimit {
  double ratio;
  double offset;
};

EnvelopeLimit default_limit(const std::string& algorithm) {
  if (algorithm == "threshold") return {12.0, 0.0};
  if (algorithm == "symmetric") return {17.0, 4.0};
  if (algorithm == "search") return {13.0, 0.0};
  return {22.0, 0.0};
}

struct Result {
  Json body;
  bool pass = false;
  std::string summary;
};

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw InvalidSpec(std::string("missing ") + flag);
  return *v;
}

// "desk" or "desk cap=8 i_min=2 ..."
ConstantsProfile parse_profile(const std::string& text) {
  std::istringstream in(text);
  std::string name;
  in >> name;
  auto profile = ConstantsProfile::named(name);
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidSpec("profile override must be key=value: '" + item + "'");
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    try {
      if (key == "i_min") {
        profile.i_min = std::stoi(value);
      } else if (key == "size_factor") {
        profile.size_factor = std::stoi(value);
      } else if (key == "cap") {
        profile.cap = std::stoi(value);
      } else if (key == "coverage") {
        profile.coverage = parse_rational(value);
      } else if (key == "initial_bound_factor") {
        profile.initial_bound_factor = std::stoi(value);
      } else if (key == "sample_count") {
        profile.sample_count = std::stoi(value);
      } else if (key == "verify_candidates") {
        profile.verify_candidates = std::stoi(value);
      } else if (key == "enumerate_limit") {
        profile.enumerate_limit = std::stoull(value);
      } else {
        throw InvalidSpec("unknown profile key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw InvalidSpec("bad profile value '" + item + "'");
    }
  }
  return profile;
}

ConstantsProfile profile_for(const Config& c, int n) {
  auto profile = parse_profile(c.profile);
  // Sampled mask search happens once some C(N, size) exceeds the enumeration limit.
  if (!c.seed && binomial(n, n / 2) > BigInt(static_cast<unsigned long>(profile.enumerate_limit))) {
    throw InvalidSpec("--seed is required when the mask search may sample (N=" + std::to_string(n) + ")");
  }
  profile.seed = c.seed.value_or(0);
  return profile;
}

InputDistribution distribution_for(const Config& c, int n) {
  if (std::filesystem::is_regular_file(c.mu)) return parse_distribution_spec(read_text_file(c.mu), n);
  return parse_distribution_spec(c.mu, n);
}

FunctionSpec function_for(const Config& c, int n) {
  if (c.function_file) return parse_function_spec(read_text_file(*c.function_file));
  if (!c.f) throw InvalidSpec("missing --f or --function-file");
  return named_function(*c.f, n);
}

std::string positions_string(const BitString& x) {
  std::string out = "{";
  bool first = true;
  for (int p : x.positions()) {
    if (!first) out += ",";
    out += std::to_string(p + 1);
    first = false;
  }
  return out + "}";
}

Result run_findall(const Config& c) {
  if (!c.x) throw InvalidSpec("missing --x");
  const auto x = BitString::parse(*c.x);
  if (c.n && *c.n != x.size()) throw InvalidSpec("--x length differs from --N");
  const int k = c.k.value_or(x.weight());
  if (k < 1 || k > x.size()) throw InvalidSpec("--k must satisfy 1 <= k <= N");
  const auto report = find_all_ones_report(x, k);
  const int bound = static_cast<int>(std::ceil(std::numbers::pi / 2 * std::sqrt(static_cast<double>(k) * x.size())));
  Result r;
  r.body = to_json(report);
  // The found set when every branch agrees on it.
  const auto& branches = report.outcomes.branches();
  const bool agree = !branches.empty() && std::all_of(branches.begin(), branches.end(), [&](const auto& b) {
    return b.value == branches.front().value;
  });
  if (agree) {
    std::vector<int> positions;
    for (int p : branches.front().value.positions()) positions.push_back(p + 1);
    r.body["positions"] = positions;
  } else {
    r.body["positions"] = nullptr;
  }
  r.body["query_bound"] = {{"grover", bound}, {"total", bound + k}};
  r.pass = report.exact && report.outcomes.max_grover() <= bound && report.outcomes.max_total() <= bound + k;
  r.summary = "findall x=" + x.to_string() + " k=" + std::to_string(k) + " positions " +
              (agree ? positions_string(branches.front().value) : std::string("vary by branch")) +
              " queries=" + std::to_string(report.outcomes.max_total());
  return r;
}

Result run_report(const Config& c) {
  const int n = c.algorithm == "andor" ? c.n.value_or(16) : require(c.n, "--N");
  const auto profile = profile_for(c, n);
  const auto mu = distribution_for(c, n);
  ReportOptions options;
  options.distribution_name = c.mu;
  AlgorithmReport report;
  if (c.algorithm == "threshold") {
    report = threshold_weakly_exact(require(c.t, "--t"), mu, profile, options);
  } else if (c.algorithm == "symmetric") {
    const auto spec = function_for(c, n);
    if (!spec.symmetric) throw InvalidSpec("run symmetric needs a symmetric function");
    if (spec.symmetric->arity() != n) throw InvalidSpec("function arity differs from --N");
    report = symmetric_weakly_exact(*spec.symmetric, mu, profile, options);
  } else if (c.algorithm == "search") {
    if (!c.eps) throw InvalidSpec("missing --eps");
    report = weak_search(mu, parse_rational(*c.eps), profile, options);
  } else {
    report = and_or_weakly_exact(mu, profile, options);
  }
  const auto limit = default_limit(c.algorithm);
  const double ratio = c.max_ratio.value_or(limit.ratio);
  const double offset = c.offset.value_or(limit.offset);
  const double allowed = ratio * report.envelope.value + offset;
  Result r;
  r.body = to_json(report, c.per_input);
  r.body["query_limit"] = {{"ratio", ratio}, {"offset", offset}, {"allowed", allowed}};
  r.pass = report.meets_target() && report.worst_total <= allowed + 1e-9;
  r.summary = c.algorithm + " " + report.function + " mu=" + c.mu + " weak_fraction=" + to_string(report.weak_fraction) +
              " target=" + to_string(report.target) + " queries=" + std::to_string(report.worst_total) +
              " allowed=" + std::to_string(allowed);
  return r;
}

Result run_game(const Config& c) {
  const int n = require(c.n, "--N");
  const auto spec = function_for(c, n);
  const Rational eps = parse_rational(c.eps.value_or("0"));
  const auto report = verify_yao(spec.function, eps, c.random_checks, c.seed.value_or(1));
  Result r;
  r.body = to_json(report);
  r.pass = report.equal && !report.counterexample && report.max_gap <= 1e-6;
  r.summary = "game " + spec.function.name() + " eps=" + to_string(eps) +
              " randomized=" + std::to_string(report.randomized) +
              " distributional=" + std::to_string(report.max_distributional);
  return r;
}

Result run_once(const Config& c) {
  if (c.command == "game") return run_game(c);
  if (c.algorithm == "findall") return run_findall(c);
  return run_report(c);
}

void write_output(const Config& c, const std::string& text) {
  if (!c.out) {
    std::cout << text;
    return;
  }
  std::ofstream file(*c.out, std::ios::binary);
  if (!file) throw InvalidSpec("cannot write " + *c.out);
  file << text;
}

// "t=1..4" -> ("t", [1, 2, 3, 4])
std::pair<std::string, std::vector<int>> parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..");
  if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
    throw InvalidSpec("sweep must look like t=1..4");
  }
  const auto key = text.substr(0, eq);
  if (key != "t" && key != "N" && key != "k") throw InvalidSpec("sweep parameter must be t, N or k");
  int lo = 0;
  int hi = 0;
  try {
    lo = std::stoi(text.substr(eq + 1, dots - eq - 1));
    hi = std::stoi(text.substr(dots + 2));
  } catch (const std::logic_error&) {
    throw InvalidSpec("bad sweep range '" + text + "'");
  }
  if (hi < lo || hi - lo > 1000) throw InvalidSpec("bad sweep range '" + text + "'");
  std::vector<int> values;
  for (int v = lo; v <= hi; ++v) values.push_back(v);
  return {key, values};
}

std::string csv_field(const Json& j, const char* a, const char* b = nullptr) {
  if (!j.contains(a)) return "";
  const Json& v = b ? j.at(a).value(b, Json()) : j.at(a);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

int run_sweep(const Config& base) {
  if (base.command != "run" || base.algorithm == "findall") throw InvalidSpec("--sweep applies to run reports");
  const auto [key, values] = parse_sweep(*base.sweep);
  std::vector<std::optional<Result>> results(values.size());
  parallel_for(values.size(), [&](std::size_t i) {
    Config c = base;
    (key == "t" ? c.t : key == "N" ? c.n : c.k) = values[i];
    results[i] = run_once(c);
  });
  std::string csv = key + ",weak_fraction,weak_fraction_float,target,worst_queries,envelope,allowed,verdict\n";
  bool all = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& r = *results[i];
    all = all && r.pass;
    csv += std::to_string(values[i]) + "," + csv_field(r.body, "weak_fraction", "exact") + "," +
           csv_field(r.body, "weak_fraction", "float") + "," + csv_field(r.body, "target", "exact") + "," +
           csv_field(r.body, "worst_queries", "total") + "," + csv_field(r.body, "envelope", "value") + "," +
           csv_field(r.body, "query_limit", "allowed") + "," + (r.pass ? "PASS" : "FAIL") + "\n";
  }
  write_output(base, csv);
  std::cerr << (all ? "PASS" : "FAIL") << " sweep " << *base.sweep << "\n";
  return all ? kExitPass : kExitFail;
}

int execute(const Config& c) {
  if (c.sweep) return run_sweep(c);
  auto r = run_once(c);
  const std::string name = c.command == "game" ? "game" : "run " + c.algorithm;
  r.body["verdict"] = r.pass ? "PASS" : "FAIL";
  write_output(c, dump(envelope(std::move(r.body), name, !c.no_timestamp)));
  std::cerr << (r.pass ? "PASS " : "FAIL ") << r.summary << "\n";
  return r.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Weakly exact quantum query algorithms and Yao minimax checks"};
  app.set_config("--config", "", "key=value file with the same fields as the flags");
  app.require_subcommand(1);
  app.add_option("--N", c.n, "Input length");
  app.add_option("--t", c.t, "Threshold");
  app.add_option("--k", c.k, "Assumed number of ones (findall)");
  app.add_option("--x", c.x, "Input bits, position 1 first (findall)");
  app.add_option("--mu", c.mu, "uniform | 'simon n=<n>' | 'skew seed=<s>' | CSV file of bits,weight")
      ->capture_default_str();
  app.add_option("--profile", c.profile, "desk | asymptotic, optionally followed by key=value overrides")
      ->capture_default_str();
  app.add_option("--seed", c.seed, "Seed for sampled mask searches and random distributions");
  app.add_option("--eps", c.eps, "Error as a rational, e.g. 1/3 or 0.25");
  app.add_option("--f", c.f, "or | and | majority | parity | andor | function spec");
  app.add_option("--function-file", c.function_file, "File holding a function spec");
  app.add_option("--out", c.out, "Output path (default stdout)");
  app.add_flag("--no-timestamp", c.no_timestamp, "Omit the timestamp from JSON reports");
  app.add_flag("--per-input", c.per_input, "Include per-input records");
  app.add_option("--sweep", c.sweep, "Grid over one parameter, e.g. t=1..4; writes CSV");
  app.add_option("--max-ratio", c.max_ratio, "PASS needs worst queries <= ratio * envelope + offset");
  app.add_option("--offset", c.offset, "Additive slack of the query limit");
  app.add_option("--random-checks", c.random_checks, "Random distributions tried by game")->capture_default_str();

  auto* run = app.add_subcommand("run", "Run an algorithm and report exactness and queries");
  run->fallthrough();
  run->add_option("algorithm", c.algorithm, "threshold | symmetric | search | andor | findall")
      ->required()
      ->check(CLI::IsMember({"threshold", "symmetric", "search", "andor", "findall"}));
  auto* game = app.add_subcommand("game", "Compare randomized and distributional complexity");
  game->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  c.command = run->parsed() ? "run" : "game";

  try {
    return execute(c);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
