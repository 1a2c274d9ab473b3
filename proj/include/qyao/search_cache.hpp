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

#include <array>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qyao/amplification.hpp"

namespace qyao {

/// Thread-safe memo table; a shard is dropped wholesale once it grows past its limit.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class MemoCache {
 public:
  explicit MemoCache(std::size_t max_entries_per_shard = 1 << 18) : limit_(max_entries_per_shard) {}

  template <typename Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    Shard& shard = shards_[Hash{}(key) % kShards];
    {
      std::lock_guard lock(shard.mutex);
      if (auto it = shard.map.find(key); it != shard.map.end()) return it->second;
    }
    Value value = compute();
    std::lock_guard lock(shard.mutex);
    if (shard.map.size() >= limit_) shard.map.clear();
    shard.map.emplace(key, value);
    return value;
  }

  void clear() {
    for (auto& shard : shards_) {
      std::lock_guard lock(shard.mutex);
      shard.map.clear();
    }
  }

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    std::mutex mutex;
    std::unordered_map<Key, Value, Hash> map;
  };
  std::size_t limit_;
  std::array<Shard, kShards> shards_;
};

/// Outcome distribution of one search program run: each verified position
/// with its probability, plus the probability of reporting no solution.
struct SearchOutcome {
  std::vector<std::pair<int, double>> found;
  double miss = 0.0;
  double pruned = 0.0;
  int search_queries = 0;
  int verification_queries = 0;
};

// Simulates search_program(spec) on x. The program is invariant under
// relabelling the mask positions, so runs are memoized on (mask size,
// marked count, assumed count, mode) and mapped back.
SearchOutcome search_outcome(const grover::SearchSpec& spec, const BitString& x);

void clear_search_cache();

}  // namespace qyao
