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

#include "qyao/amplification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "qyao/errors.hpp"

namespace qyao::grover {

BitString SearchSpec::effective_mask() const {
  if (mask) {
    if (mask->size() != input_length) throw InvalidSpec("search mask length differs from the input length");
    return *mask;
  }
  return BitString::ones(input_length);
}

BitString SearchSpec::effective_excluded() const {
  if (excluded) {
    if (excluded->size() != input_length) throw InvalidSpec("excluded set length differs from the input length");
    return *excluded;
  }
  return BitString::zeros(input_length);
}

IterationCount iteration_count(int space_size, int solutions) {
  if (space_size < 1) throw InvalidSpec("search space must be nonempty");
  if (solutions < 1) throw InvalidSpec("Grover angle is undefined for t = 0");
  if (solutions > space_size) throw InvalidSpec("more assumed solutions than search positions");
  const double theta = std::asin(std::sqrt(static_cast<double>(solutions) / space_size));
  const double raw = std::numbers::pi / (4.0 * theta) - 0.5;
  const int m = std::max(0, static_cast<int>(std::ceil(raw - 1e-9)));
  const bool exact = std::abs((2 * m + 1) * theta - std::numbers::pi / 2.0) <= 1e-12;
  return {m, exact, theta};
}

SearchLayout search_layout(int space_size) {
  if (space_size < 1) throw InvalidSpec("search space must be nonempty");
  const int n = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(space_size - 1))));
  return {n, n, n + 1, n + 2};
}

namespace {

sim::Program build(const SearchSpec& spec, bool dilate) {
  const BitString mask = spec.effective_mask();
  const BitString excluded = spec.effective_excluded();
  const int space = mask.weight();
  if (spec.assumed_solutions < 0) throw InvalidSpec("negative assumed solution count");
  const auto count = iteration_count(space, std::max(1, spec.assumed_solutions));
  const SearchLayout layout = search_layout(space);
  const int n = layout.index_bits;
  const std::size_t index_dim = std::size_t{1} << n;

  sim::QueryLayout query;
  for (int q = 0; q < n; ++q) query.index_qubits.push_back(q);
  query.answer_qubit = layout.answer_qubit;
  query.positions = mask.positions();

  auto active = std::make_shared<std::vector<char>>(index_dim, 0);
  for (int j = 0; j < space; ++j) (*active)[static_cast<std::size_t>(j)] = !excluded.test(query.positions[static_cast<std::size_t>(j)]);

  // sin(eta) scales the marked amplitude so that (2m + 1) theta' = pi / 2.
  double sin_eta = 1.0;
  if (dilate && !count.exact) {
    sin_eta = std::min(1.0, std::sin(std::numbers::pi / (2.0 * (2 * count.iterations + 1))) / std::sin(count.angle));
  }
  const double cos_eta = std::sqrt(std::max(0.0, 1.0 - sin_eta * sin_eta));

  std::vector<int> reflect_qubits = query.index_qubits;
  reflect_qubits.push_back(layout.workspace_qubit);
  std::vector<sim::Amplitude> start(index_dim * 2, 0.0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(space));
  for (int j = 0; j < space; ++j) {
    start[static_cast<std::size_t>(j)] = scale * cos_eta;
    start[index_dim + static_cast<std::size_t>(j)] = scale * sin_eta;
  }
  // Reflecting about (|0> + s)/|.| maps |0> to s.
  std::vector<sim::Amplitude> prep = start;
  prep[0] += 1.0;
  double norm = 0.0;
  for (const auto& a : prep) norm += std::norm(a);
  for (auto& a : prep) a /= std::sqrt(norm);

  const std::uint64_t index_mask = low_mask(n);
  const int answer = layout.answer_qubit;
  const int workspace = layout.workspace_qubit;
  auto marked_phase = [active, index_mask, answer, workspace](std::uint64_t basis) -> sim::Amplitude {
    const bool flip = ((basis >> answer) & 1U) && ((basis >> workspace) & 1U) && (*active)[basis & index_mask];
    return flip ? -1.0 : 1.0;
  };

  sim::Program program(layout.num_qubits);
  program.add(sim::step::Reflection{reflect_qubits, prep, "prepare"});
  for (int it = 0; it < count.iterations; ++it) {
    program.hadamard(answer);
    program.add(sim::step::Diagonal{marked_phase, "select"});
    program.query(query, sim::QueryKind::search);
    program.add(sim::step::Diagonal{marked_phase, "unselect"});
    program.hadamard(answer);
    program.add(sim::step::Reflection{reflect_qubits, start, "diffuse"});
  }
  program.measure(query.index_qubits, "index");

  auto positions = std::make_shared<std::vector<int>>(query.positions);
  if (spec.verify) {
    program.query(query, sim::QueryKind::verification);
    program.measure({answer}, "verify");
    program.output([positions, active](const std::vector<std::uint64_t>& outcomes) -> std::int64_t {
      const auto j = outcomes[outcomes.size() - 2];
      if (outcomes.back() == 1 && j < positions->size() && (*active)[j]) return (*positions)[j];
      return kNoSolution;
    });
  } else {
    program.output([positions](const std::vector<std::uint64_t>& outcomes) -> std::int64_t {
      const auto j = outcomes.back();
      return j < positions->size() ? (*positions)[j] : kNoSolution;
    });
  }
  return program;
}

}  // namespace

sim::Program grover_program(const SearchSpec& spec) {
  if (spec.mode != Mode::standard) throw InvalidSpec("grover_program expects standard mode");
  return build(spec, false);
}

sim::Program exact_grover_program(const SearchSpec& spec) {
  if (spec.mode != Mode::exact) throw InvalidSpec("exact_grover_program expects exact mode");
  if (spec.assumed_solutions < 1) throw InvalidSpec("exact search needs a known solution count t >= 1");
  return build(spec, true);
}

sim::Program search_program(const SearchSpec& spec) {
  return spec.mode == Mode::exact ? exact_grover_program(spec) : grover_program(spec);
}

}  // namespace qyao::grover
