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

#include "qyao/search_cache.hpp"

#include <algorithm>
#include <map>

#include "qyao/errors.hpp"

namespace qyao {

namespace {

struct SearchKey {
  int space;
  int marked;
  int solutions;
  bool exact;
  bool verify;
  friend bool operator==(const SearchKey&, const SearchKey&) = default;
};

struct SearchKeyHash {
  std::size_t operator()(const SearchKey& k) const noexcept {
    const std::uint64_t h = static_cast<std::uint64_t>(k.space) | static_cast<std::uint64_t>(k.marked) << 8 |
                            static_cast<std::uint64_t>(k.solutions) << 16 | (k.exact ? 1ULL : 0ULL) << 24 |
                            (k.verify ? 1ULL : 0ULL) << 25;
    return std::hash<std::uint64_t>{}(h);
  }
};

MemoCache<SearchKey, SearchOutcome, SearchKeyHash>& cache() {
  static MemoCache<SearchKey, SearchOutcome, SearchKeyHash> instance;
  return instance;
}

// The search program on an N'-element space with m marked indices, run on
// indices 0..m-1. Found values are canonical indices.
SearchOutcome canonical_outcome(const SearchKey& key) {
  grover::SearchSpec spec;
  spec.input_length = key.space;
  spec.assumed_solutions = key.solutions;
  spec.mode = key.exact ? grover::Mode::exact : grover::Mode::standard;
  spec.verify = key.verify;
  const auto program = grover::search_program(spec);
  const auto tree = sim::run(program, BitString(key.space, low_mask(key.marked)));
  SearchOutcome out;
  out.pruned = tree.pruned_mass;
  std::map<int, double> by_index;
  for (const auto& leaf : tree.leaves) {
    const auto value = leaf.output.value_or(grover::kNoSolution);
    if (value == grover::kNoSolution) {
      out.miss += leaf.probability;
    } else {
      by_index[static_cast<int>(value)] += leaf.probability;
    }
    out.search_queries = std::max(out.search_queries, leaf.search_queries);
    out.verification_queries = std::max(out.verification_queries, leaf.verification_queries);
  }
  out.found.assign(by_index.begin(), by_index.end());
  return out;
}

}  // namespace

SearchOutcome search_outcome(const grover::SearchSpec& spec, const BitString& x) {
  if (x.size() != spec.input_length) throw InvalidSpec("input length differs from the search spec");
  // Excluded positions stay in the space as unmarked indices.
  const BitString space = spec.effective_mask();
  const BitString marked = x & space & spec.effective_excluded().complement();
  const SearchKey key{space.weight(), marked.weight(), spec.assumed_solutions, spec.mode == grover::Mode::exact,
                      spec.verify};
  if (key.space == 0) throw InvalidSpec("search space is empty");
  SearchOutcome out = cache().get_or_compute(key, [&] { return canonical_outcome(key); });
  // Every gate of the search program commutes with relabelling the mask
  // positions, so canonical index i stands for the i-th marked position
  // (i < m) or the (i - m)-th unmarked one.
  std::vector<int> relabel = marked.positions();
  for (int p : (space & marked.complement()).positions()) relabel.push_back(p);
  for (auto& [index, probability] : out.found) index = relabel[static_cast<std::size_t>(index)];
  std::sort(out.found.begin(), out.found.end());
  return out;
}

void clear_search_cache() { cache().clear(); }

}  // namespace qyao
