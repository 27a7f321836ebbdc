// Copyright 2026 The Permuniv Authors.
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

#include "permuniv/min_search.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"

namespace permuniv {
namespace {

// Coverage summary of a prefix P, independent of its length. For every
// subset S and d in S, bit d of last[S] is set iff every ordering of S that
// ends in d is a subsequence of P. S is fully covered iff last[S] == S.
class PrefixState {
 public:
  explicit PrefixState(int n) : n_(n), last_(size_t{1} << n, 0) {}

  int alphabet_size() const { return n_; }
  uint32_t full() const { return (uint32_t{1} << n_) - 1; }
  bool Covered(uint32_t mask) const { return last_[mask] == mask; }
  bool Universal() const { return Covered(full()); }

  // Symbols used so far; under canonical labelling these are 1..used.
  int UsedSymbols() const {
    int used = 0;
    for (int c = 0; c < n_; ++c) used += Covered(uint32_t{1} << c) ? 1 : 0;
    return used;
  }

  PrefixState Append(int symbol) const {
    PrefixState next = *this;
    const uint32_t bit = uint32_t{1} << (symbol - 1);
    for (uint32_t mask = 1; mask <= full(); ++mask) {
      if (!(mask & bit) || (last_[mask] & bit)) continue;
      // An ordering of S ending in c gains an embedding iff its prefix, an
      // ordering of S \ {c}, was already fully embedded in P.
      if (Covered(mask & ~bit)) next.last_[mask] |= static_cast<uint8_t>(bit);
    }
    return next;
  }

  // Lower bound on the letters still needed: if some (b)-subset is not
  // covered, some permutation matches at most b-1 symbols greedily and the
  // remaining n-b+1 distinct symbols must all follow.
  int LettersNeeded() const {
    int smallest_gap = n_ + 1;
    for (uint32_t mask = 1; mask <= full(); ++mask) {
      if (!Covered(mask)) {
        smallest_gap = std::min(smallest_gap, std::popcount(mask));
      }
    }
    return n_ - smallest_gap + 1;
  }

  std::string Key() const {
    return std::string(reinterpret_cast<const char*>(last_.data()),
                       last_.size());
  }

 private:
  int n_;
  std::vector<uint8_t> last_;
};

constexpr size_t kMaxMemoEntries = size_t{1} << 23;

class Searcher {
 public:
  explicit Searcher(int n) : n_(n) {}

  // Depth-first in increasing symbol order, so the first word found is the
  // lexicographically smallest canonical completion of `word`.
  bool Extend(const PrefixState& state, int remaining, std::vector<int>& word) {
    ++nodes_;
    if (state.Universal()) {
      word.insert(word.end(), remaining, 1);
      return true;
    }
    if (remaining < state.LettersNeeded()) return false;
    std::string key = state.Key();
    if (auto it = dead_.find(key); it != dead_.end() && it->second >= remaining) {
      return false;
    }
    const int limit = std::min(n_, state.UsedSymbols() + 1);
    for (int c = 1; c <= limit; ++c) {
      word.push_back(c);
      if (Extend(state.Append(c), remaining - 1, word)) return true;
      word.pop_back();
    }
    if (dead_.size() < kMaxMemoEntries) {
      int& recorded = dead_[std::move(key)];
      recorded = std::max(recorded, remaining);
    }
    return false;
  }

  uint64_t nodes() const { return nodes_; }

 private:
  int n_;
  uint64_t nodes_ = 0;
  absl::flat_hash_map<std::string, int> dead_;
};

struct Task {
  std::vector<int> prefix;
  PrefixState state;
};

// Canonical prefixes of length `depth`, in lexicographic order.
void CollectPrefixes(const PrefixState& state, int depth,
                     std::vector<int>& prefix, std::vector<Task>& out) {
  if (depth == 0 || state.Universal()) {
    out.push_back({prefix, state});
    return;
  }
  const int limit = std::min(state.alphabet_size(), state.UsedSymbols() + 1);
  for (int c = 1; c <= limit; ++c) {
    prefix.push_back(c);
    CollectPrefixes(state.Append(c), depth - 1, prefix, out);
    prefix.pop_back();
  }
}

std::optional<std::vector<int>> SearchLength(int n, int length, int jobs,
                                             uint64_t& nodes) {
  const PrefixState root(n);
  if (jobs <= 1) {
    Searcher searcher(n);
    std::vector<int> word;
    const bool found = searcher.Extend(root, length, word);
    nodes += searcher.nodes();
    if (found) return word;
    return std::nullopt;
  }

  std::vector<Task> tasks;
  std::vector<int> prefix;
  CollectPrefixes(root, std::min(length, 4), prefix, tasks);

  std::vector<std::optional<std::vector<int>>> results(tasks.size());
  std::vector<uint64_t> task_nodes(tasks.size(), 0);
  std::atomic<size_t> next_task{0};
  // Tasks after an already successful one cannot change the answer.
  std::atomic<size_t> first_success{tasks.size()};
  auto worker = [&] {
    while (true) {
      const size_t i = next_task.fetch_add(1);
      if (i >= tasks.size() || i > first_success.load()) return;
      Searcher searcher(n);
      std::vector<int> word = tasks[i].prefix;
      const int remaining = length - static_cast<int>(word.size());
      if (searcher.Extend(tasks[i].state, remaining, word)) {
        results[i] = std::move(word);
        size_t seen = first_success.load();
        while (i < seen && !first_success.compare_exchange_weak(seen, i)) {
        }
      }
      task_nodes[i] = searcher.nodes();
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (uint64_t k : task_nodes) nodes += k;
  for (auto& r : results) {
    if (r.has_value()) return r;
  }
  return std::nullopt;
}

}  // namespace

absl::StatusOr<MinUniversalResult> MinUniversalLength(
    int n, int length_budget, const MinSearchOptions& options) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("alphabet size must be >= 1, got ", n));
  }
  if (n > options.max_alphabet || n > 8) {
    return absl::ResourceExhaustedError(
        absl::StrCat("min_universal_length: alphabet size ", n,
                     " exceeds the cap of ", std::min(options.max_alphabet, 8)));
  }
  if (length_budget < n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "length budget ", length_budget, " is below the alphabet size ", n));
  }
  MinUniversalResult result;
  for (int length = n; length <= length_budget; ++length) {
    auto word = SearchLength(n, length, options.jobs, result.nodes_explored);
    if (word.has_value()) {
      result.length = length;
      result.example = Word{n, *std::move(word)};
      return result;
    }
  }
  return absl::NotFoundError(absl::StrCat(
      "budget exhausted: no universal word over {1..", n, "} of length <= ",
      length_budget));
}

}  // namespace permuniv
