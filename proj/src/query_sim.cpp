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

#include "qyao/query_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qyao/errors.hpp"

namespace qyao::sim {

namespace {

void check_qubit(int qubit, int num_qubits) {
  if (qubit < 0 || qubit >= num_qubits) {
    throw InvalidSpec("qubit " + std::to_string(qubit) + " outside a " + std::to_string(num_qubits) +
                      "-qubit register");
  }
}

// Scatters the bits of `local` onto the positions named by `qubits`.
std::uint64_t deposit(std::uint64_t local, const std::vector<int>& qubits) {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if ((local >> k) & 1U) out |= std::uint64_t{1} << qubits[k];
  }
  return out;
}

std::uint64_t extract(std::uint64_t basis, const std::vector<int>& qubits) {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if ((basis >> qubits[k]) & 1U) out |= std::uint64_t{1} << k;
  }
  return out;
}

std::uint64_t register_mask(const std::vector<int>& qubits) {
  std::uint64_t mask = 0;
  for (int q : qubits) mask |= std::uint64_t{1} << q;
  return mask;
}

}  // namespace

QuantumState::QuantumState(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) throw ResourceLimit("state needs 1..30 qubits");
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

double QuantumState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

void QuantumState::hadamard(int qubit) {
  check_qubit(qubit, num_qubits_);
  const std::size_t bit = std::size_t{1} << qubit;
  const double r = std::numbers::sqrt2 / 2.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a = amplitudes_[i];
    const Amplitude b = amplitudes_[i | bit];
    amplitudes_[i] = r * (a + b);
    amplitudes_[i | bit] = r * (a - b);
  }
}

void QuantumState::pauli_x(int qubit) {
  check_qubit(qubit, num_qubits_);
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (!(i & bit)) std::swap(amplitudes_[i], amplitudes_[i | bit]);
  }
}

void QuantumState::phase(int qubit, double angle) {
  check_qubit(qubit, num_qubits_);
  const std::size_t bit = std::size_t{1} << qubit;
  const Amplitude w = std::polar(1.0, angle);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & bit) amplitudes_[i] *= w;
  }
}

void QuantumState::rotation_y(int qubit, double angle) {
  check_qubit(qubit, num_qubits_);
  const std::size_t bit = std::size_t{1} << qubit;
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a = amplitudes_[i];
    const Amplitude b = amplitudes_[i | bit];
    amplitudes_[i] = c * a - s * b;
    amplitudes_[i | bit] = s * a + c * b;
  }
}

void QuantumState::apply_matrix(const std::vector<int>& qubits, const std::vector<Amplitude>& matrix) {
  for (int q : qubits) check_qubit(q, num_qubits_);
  const std::size_t local_dim = std::size_t{1} << qubits.size();
  if (matrix.size() != local_dim * local_dim) throw InvalidSpec("unitary has the wrong dimension");
  const std::uint64_t mask = register_mask(qubits);
  if (static_cast<std::size_t>(std::popcount(mask)) != qubits.size()) {
    throw InvalidSpec("unitary names a qubit twice");
  }
  std::vector<std::uint64_t> offsets(local_dim);
  for (std::size_t j = 0; j < local_dim; ++j) offsets[j] = deposit(j, qubits);
  std::vector<Amplitude> in(local_dim);
  for (std::size_t base = 0; base < amplitudes_.size(); ++base) {
    if (base & mask) continue;
    for (std::size_t j = 0; j < local_dim; ++j) in[j] = amplitudes_[base | offsets[j]];
    for (std::size_t r = 0; r < local_dim; ++r) {
      Amplitude acc{0.0, 0.0};
      for (std::size_t c = 0; c < local_dim; ++c) acc += matrix[r * local_dim + c] * in[c];
      amplitudes_[base | offsets[r]] = acc;
    }
  }
}

void QuantumState::apply_diagonal(const std::function<Amplitude(std::uint64_t)>& phase_of_basis) {
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (amplitudes_[i] != Amplitude{0.0, 0.0}) amplitudes_[i] *= phase_of_basis(i);
  }
}

void QuantumState::reflect(const std::vector<int>& qubits, const std::vector<Amplitude>& v) {
  for (int q : qubits) check_qubit(q, num_qubits_);
  const std::size_t local_dim = std::size_t{1} << qubits.size();
  if (v.size() != local_dim) throw InvalidSpec("reflection vector has the wrong dimension");
  const std::uint64_t mask = register_mask(qubits);
  std::vector<std::uint64_t> offsets(local_dim);
  for (std::size_t j = 0; j < local_dim; ++j) offsets[j] = deposit(j, qubits);
  for (std::size_t base = 0; base < amplitudes_.size(); ++base) {
    if (base & mask) continue;
    Amplitude overlap{0.0, 0.0};
    for (std::size_t j = 0; j < local_dim; ++j) overlap += std::conj(v[j]) * amplitudes_[base | offsets[j]];
    for (std::size_t j = 0; j < local_dim; ++j) {
      auto& a = amplitudes_[base | offsets[j]];
      a = 2.0 * v[j] * overlap - a;
    }
  }
}

std::vector<double> QuantumState::outcome_probabilities(const std::vector<int>& qubits) const {
  for (int q : qubits) check_qubit(q, num_qubits_);
  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) probs[extract(i, qubits)] += std::norm(amplitudes_[i]);
  return probs;
}

void QuantumState::collapse(const std::vector<int>& qubits, std::uint64_t outcome, double probability) {
  const double scale = 1.0 / std::sqrt(probability);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (extract(i, qubits) == outcome) {
      amplitudes_[i] *= scale;
    } else {
      amplitudes_[i] = 0.0;
    }
  }
}

void apply_query(QuantumState& state, const QueryLayout& layout, const BitString& x) {
  const int n = state.num_qubits();
  for (int q : layout.index_qubits) check_qubit(q, n);
  check_qubit(layout.answer_qubit, n);
  const std::uint64_t answer = std::uint64_t{1} << layout.answer_qubit;
  if (register_mask(layout.index_qubits) & answer) throw InvalidSpec("answer qubit overlaps the index register");
  auto& amps = state.amplitudes();
  double stray = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & answer) continue;
    const std::uint64_t j = extract(i, layout.index_qubits);
    const int position = j < layout.positions.size() ? layout.positions[j] : -1;
    if (position < 0) {
      stray += std::norm(amps[i]) + std::norm(amps[i | answer]);
      continue;
    }
    if (x.test(position)) std::swap(amps[i], amps[i | answer]);
  }
  if (stray >= kPruneThreshold) {
    throw InvalidSpec("query on an index register with amplitude on out-of-range indices");
  }
}

Program& Program::add(Step s) {
  const auto check = [&](int q) { check_qubit(q, num_qubits_); };
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (requires { st.qubit; }) {
          check(st.qubit);
        } else if constexpr (std::is_same_v<T, step::Query>) {
          for (int q : st.layout.index_qubits) check(q);
          check(st.layout.answer_qubit);
        } else if constexpr (requires { st.qubits; }) {
          for (int q : st.qubits) check(q);
        } else if constexpr (std::is_same_v<T, step::Branch>) {
          const bool measured = std::any_of(steps_.begin(), steps_.end(), [](const Step& prior) {
            return std::holds_alternative<step::Measure>(prior);
          });
          if (!measured) throw InvalidSpec("a classical branch must follow a measurement");
        }
      },
      s);
  steps_.push_back(std::move(s));
  return *this;
}

int Program::query_count() const {
  return static_cast<int>(std::count_if(steps_.begin(), steps_.end(),
                                        [](const Step& s) { return std::holds_alternative<step::Query>(s); }));
}

double BranchTree::leaf_mass() const {
  double total = 0.0;
  for (const auto& leaf : leaves) total += leaf.probability;
  return total;
}

int BranchTree::max_queries() const {
  int best = 0;
  for (const auto& leaf : leaves) best = std::max(best, leaf.queries());
  return best;
}

namespace {

struct Frame {
  ProgramPtr program;
  std::size_t pc = 0;
};

struct PathState {
  std::vector<Frame> stack;
  std::vector<std::uint64_t> outcomes;
  double probability = 1.0;
  int search_queries = 0;
  int verification_queries = 0;
  int node = -1;
};

class Runner {
 public:
  Runner(const BitString& x, const RunOptions& options, int num_qubits)
      : x_(x), options_(options), num_qubits_(num_qubits) {}

  void execute(QuantumState state, PathState path) {
    while (!path.stack.empty()) {
      Frame& frame = path.stack.back();
      if (frame.pc >= frame.program->steps().size()) {
        path.stack.pop_back();
        continue;
      }
      const Step& current = frame.program->steps()[frame.pc++];
      if (const auto* m = std::get_if<step::Measure>(&current)) {
        measure(std::move(state), std::move(path), *m);
        return;
      }
      if (const auto* out = std::get_if<step::Output>(&current)) {
        finish(path, out->value(path.outcomes));
        return;
      }
      if (const auto* br = std::get_if<step::Branch>(&current)) {
        if (path.outcomes.empty()) throw InvalidSpec("branch reached before any measurement");
        ProgramPtr next = br->choose(path.outcomes.back());
        if (!next) continue;
        if (next->num_qubits() != num_qubits_) throw InvalidSpec("branch program has a different register size");
        path.stack.push_back({std::move(next), 0});
        continue;
      }
      apply(state, path, current);
    }
    finish(path, std::nullopt);
  }

  BranchTree take() { return std::move(tree_); }

 private:
  void apply(QuantumState& state, PathState& path, const Step& current) {
    std::visit(
        [&](const auto& st) {
          using T = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<T, step::Hadamard>) {
            state.hadamard(st.qubit);
          } else if constexpr (std::is_same_v<T, step::PauliX>) {
            state.pauli_x(st.qubit);
          } else if constexpr (std::is_same_v<T, step::Phase>) {
            state.phase(st.qubit, st.angle);
          } else if constexpr (std::is_same_v<T, step::RotationY>) {
            state.rotation_y(st.qubit, st.angle);
          } else if constexpr (std::is_same_v<T, step::Unitary>) {
            state.apply_matrix(st.qubits, st.matrix);
          } else if constexpr (std::is_same_v<T, step::Diagonal>) {
            state.apply_diagonal(st.phase_of_basis);
          } else if constexpr (std::is_same_v<T, step::Reflection>) {
            state.reflect(st.qubits, st.about);
          } else if constexpr (std::is_same_v<T, step::Query>) {
            apply_query(state, st.layout, x_);
            if (st.kind == QueryKind::search) {
              ++path.search_queries;
            } else {
              ++path.verification_queries;
            }
          }
        },
        current);
  }

  void measure(QuantumState state, PathState path, const step::Measure& m) {
    const auto probs = state.outcome_probabilities(m.qubits);
    std::vector<std::uint64_t> kept;
    for (std::uint64_t v = 0; v < probs.size(); ++v) {
      const double p = path.probability * probs[v];
      if (p > options_.prune) {
        kept.push_back(v);
      } else {
        tree_.pruned_mass += p;
      }
    }
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const std::uint64_t v = kept[k];
      // The last surviving outcome reuses the state buffer.
      QuantumState next = k + 1 == kept.size() ? std::move(state) : state;
      next.collapse(m.qubits, v, probs[v]);
      PathState child = path;
      child.probability = path.probability * probs[v];
      child.outcomes.push_back(v);
      tree_.nodes.push_back({path.node, m.label, v, child.probability,
                             child.search_queries + child.verification_queries});
      child.node = static_cast<int>(tree_.nodes.size()) - 1;
      execute(std::move(next), std::move(child));
    }
  }

  void finish(const PathState& path, std::optional<std::int64_t> output) {
    tree_.leaves.push_back(
        {path.probability, output, path.outcomes, path.search_queries, path.verification_queries});
  }

  const BitString& x_;
  const RunOptions& options_;
  int num_qubits_;
  BranchTree tree_;
};

}  // namespace

BranchTree run(const Program& program, const BitString& x, const RunOptions& options) {
  if (program.num_qubits() > options.max_qubits) {
    throw ResourceLimit("program needs " + std::to_string(program.num_qubits()) + " qubits, budget is " +
                        std::to_string(options.max_qubits));
  }
  Runner runner(x, options, program.num_qubits());
  PathState root;
  // Non-owning handle; the caller keeps `program` alive for the whole run.
  root.stack.push_back({ProgramPtr(&program, [](const Program*) {}), 0});
  runner.execute(QuantumState(program.num_qubits()), std::move(root));
  return runner.take();
}

double acceptance_probability(const Program& program, const BitString& x, const RunOptions& options) {
  const auto tree = run(program, x, options);
  double accept = 0.0;
  for (const auto& leaf : tree.leaves) {
    if (leaf.output && *leaf.output == 1) accept += leaf.probability;
  }
  return accept;
}

CertaintyProfile certainty_profile(const Program& program, const BooleanFunction& f, const InputDistribution& mu,
                                   const RunOptions& options) {
  CertaintyProfile profile;
  profile.weak_fraction = 0;
  for (const auto& e : mu.entries()) {
    const double p = acceptance_probability(program, e.input, options);
    if (std::abs(p - f.evaluate(e.input)) <= kCertainTolerance) {
      profile.certain_set.push_back(e.input);
      profile.weak_fraction += e.weight;
    }
  }
  profile.strong = true;
  for (const auto& x : all_inputs(f.arity())) {
    const double p = acceptance_probability(program, x, options);
    if (std::min(p, std::abs(1.0 - p)) > kCertainTolerance) {
      profile.strong = false;
      break;
    }
  }
  return profile;
}

}  // namespace qyao::sim
