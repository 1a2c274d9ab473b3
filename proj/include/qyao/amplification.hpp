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

#include <cstdint>
#include <optional>

#include "qyao/bitstring.hpp"
#include "qyao/query_sim.hpp"

namespace qyao::grover {

enum class Mode { standard, exact };

/// Search over the positions selected by `mask` (all N by default). Positions
/// in `excluded` are treated as zeros: they stay in the search space but are
/// never marked and never reported as found.
struct SearchSpec {
  int input_length = 0;
  std::optional<BitString> mask;
  std::optional<BitString> excluded;
  int assumed_solutions = 1;
  Mode mode = Mode::exact;
  // Follow the measurement with one counted verification query.
  bool verify = true;

  BitString effective_mask() const;
  BitString effective_excluded() const;
  int space_size() const { return effective_mask().weight(); }
};

struct IterationCount {
  int iterations = 0;
  bool exact = false;
  double angle = 0.0;
};

// m = ceil(pi / (4 theta) - 1/2) with theta = asin(sqrt(t / N')); exact when
// (2m + 1) theta = pi / 2 within 1e-12.
IterationCount iteration_count(int space_size, int solutions);

/// Qubit layout shared by the search programs: index bits 0..n-1, the query
/// answer qubit at n and one workspace qubit at n + 1.
struct SearchLayout {
  int index_bits = 0;
  int answer_qubit = 0;
  int workspace_qubit = 0;
  int num_qubits = 0;
};
SearchLayout search_layout(int space_size);

// Value reported by the search programs when nothing verified was found.
inline constexpr std::int64_t kNoSolution = -1;

// Plain Grover: m iterations for the assumed count (m(N', 1) when it is 0).
// The output is the input position of the measured index, and with
// verification kNoSolution unless that position holds an unexcluded 1.
sim::Program grover_program(const SearchSpec& spec);

// Amplitude amplification that measures a marked index with probability 1
// whenever exactly `assumed_solutions` positions are marked. The search space
// is dilated by the workspace qubit so the rotation angle becomes
// pi / (2(2m + 1)); the query count stays at m.
sim::Program exact_grover_program(const SearchSpec& spec);

sim::Program search_program(const SearchSpec& spec);

}  // namespace qyao::grover
