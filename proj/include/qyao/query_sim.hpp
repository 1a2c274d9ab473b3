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

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qyao/bitstring.hpp"
#include "qyao/boolean_function.hpp"
#include "qyao/distribution.hpp"
#include "qyao/rational.hpp"

namespace qyao::sim {

using Amplitude = std::complex<double>;

inline constexpr double kPruneThreshold = 1e-12;
inline constexpr double kCertainTolerance = 1e-9;

class QuantumState {
 public:
  explicit QuantumState(int num_qubits);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::vector<Amplitude>& amplitudes() noexcept { return amplitudes_; }
  const std::vector<Amplitude>& amplitudes() const noexcept { return amplitudes_; }
  double norm_squared() const;

  void hadamard(int qubit);
  void pauli_x(int qubit);
  void phase(int qubit, double angle);
  void rotation_y(int qubit, double angle);
  // `matrix` is row-major of dimension 2^k for k = qubits.size(); qubits[0] is
  // the least significant bit of the local index.
  void apply_matrix(const std::vector<int>& qubits, const std::vector<Amplitude>& matrix);
  void apply_diagonal(const std::function<Amplitude(std::uint64_t)>& phase_of_basis);
  // 2|v><v| - I on the register spanned by `qubits`, identity elsewhere; v unit norm.
  void reflect(const std::vector<int>& qubits, const std::vector<Amplitude>& v);

  // Probability of each value of the register `qubits`.
  std::vector<double> outcome_probabilities(const std::vector<int>& qubits) const;
  // Projects onto register value `outcome` and renormalizes.
  void collapse(const std::vector<int>& qubits, std::uint64_t outcome, double probability);

 private:
  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Where the oracle reads and writes: index register value j addresses input
/// position positions[j] (-1 or j >= positions.size() means no input bit).
struct QueryLayout {
  std::vector<int> index_qubits;
  int answer_qubit = 0;
  std::vector<int> positions;
};

// O|i,b,z> = |i, b xor x_i, z>.
void apply_query(QuantumState& state, const QueryLayout& layout, const BitString& x);

enum class QueryKind { search, verification };

class Program;
using ProgramPtr = std::shared_ptr<const Program>;

namespace step {
struct Hadamard {
  int qubit;
};
struct PauliX {
  int qubit;
};
struct Phase {
  int qubit;
  double angle;
};
struct RotationY {
  int qubit;
  double angle;
};
struct Unitary {
  std::vector<int> qubits;
  std::vector<Amplitude> matrix;
};
struct Diagonal {
  std::function<Amplitude(std::uint64_t)> phase_of_basis;
  std::string label;
};
struct Reflection {
  std::vector<int> qubits;
  std::vector<Amplitude> about;
  std::string label;
};
struct Query {
  QueryLayout layout;
  QueryKind kind = QueryKind::search;
};
struct Measure {
  std::vector<int> qubits;
  std::string label;
};
// Continues with the program chosen from the most recent measurement outcome.
struct Branch {
  std::function<ProgramPtr(std::uint64_t)> choose;
};
// Ends the run; the output is computed from all outcomes on the path.
struct Output {
  std::function<std::int64_t(const std::vector<std::uint64_t>&)> value;
};
}  // namespace step

using Step = std::variant<step::Hadamard, step::PauliX, step::Phase, step::RotationY, step::Unitary,
                          step::Diagonal, step::Reflection, step::Query, step::Measure, step::Branch,
                          step::Output>;

/// A straight-line list of steps over a fixed number of qubits.
class Program {
 public:
  explicit Program(int num_qubits) : num_qubits_(num_qubits) {}

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  Program& add(Step s);
  Program& hadamard(int qubit) { return add(step::Hadamard{qubit}); }
  Program& pauli_x(int qubit) { return add(step::PauliX{qubit}); }
  Program& phase(int qubit, double angle) { return add(step::Phase{qubit, angle}); }
  Program& rotation_y(int qubit, double angle) { return add(step::RotationY{qubit, angle}); }
  Program& query(QueryLayout layout, QueryKind kind = QueryKind::search) {
    return add(step::Query{std::move(layout), kind});
  }
  Program& measure(std::vector<int> qubits, std::string label = {}) {
    return add(step::Measure{std::move(qubits), std::move(label)});
  }
  Program& branch(std::function<ProgramPtr(std::uint64_t)> choose) { return add(step::Branch{std::move(choose)}); }
  Program& output(std::function<std::int64_t(const std::vector<std::uint64_t>&)> value) {
    return add(step::Output{std::move(value)});
  }
  Program& output_constant(std::int64_t value) {
    return output([value](const std::vector<std::uint64_t>&) { return value; });
  }

  // Number of query steps on the straight-line part (branches not followed).
  int query_count() const;

 private:
  int num_qubits_;
  std::vector<Step> steps_;
};

struct BranchLeaf {
  double probability = 0.0;
  std::optional<std::int64_t> output;
  std::vector<std::uint64_t> outcomes;
  int search_queries = 0;
  int verification_queries = 0;
  int queries() const noexcept { return search_queries + verification_queries; }
};

// One measurement event; `parent` is -1 at the root.
struct BranchNode {
  int parent = -1;
  std::string label;
  std::uint64_t outcome = 0;
  double probability = 1.0;
  int queries = 0;
};

struct BranchTree {
  std::vector<BranchNode> nodes;
  std::vector<BranchLeaf> leaves;
  double pruned_mass = 0.0;

  double leaf_mass() const;
  int max_queries() const;
};

struct RunOptions {
  int max_qubits = 22;
  double prune = kPruneThreshold;
};

BranchTree run(const Program& program, const BitString& x, const RunOptions& options = {});

// Sum of leaf probabilities with output 1.
double acceptance_probability(const Program& program, const BitString& x, const RunOptions& options = {});

struct CertaintyProfile {
  std::vector<BitString> certain_set;
  Rational weak_fraction;
  bool strong = false;
};

// Certain means |P_A(x) - f(x)| <= 1e-9; the strong flag sweeps all of {0,1}^N.
CertaintyProfile certainty_profile(const Program& program, const BooleanFunction& f,
                                   const InputDistribution& mu, const RunOptions& options = {});

}  // namespace qyao::sim
