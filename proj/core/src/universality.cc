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

#include "permuniv/universality.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "absl/strings/str_cat.h"

namespace permuniv {
namespace {

absl::Status CheckAlphabet(const Word& text, int n, int cap,
                           const char* what) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("alphabet size must be >= 1, got ", n));
  }
  if (n > cap) {
    return absl::ResourceExhaustedError(absl::StrCat(
        what, ": alphabet size ", n, " exceeds the cap of ", cap));
  }
  for (size_t i = 0; i < text.symbols.size(); ++i) {
    if (text.symbols[i] < 1 || text.symbols[i] > n) {
      return absl::InvalidArgumentError(
          absl::StrCat("symbol ", text.symbols[i], " at index ", i + 1,
                       " is outside [1, ", n, "]"));
    }
  }
  return absl::OkStatus();
}

Word WithAlphabet(const Word& text, int n) {
  return Word{std::max(n, text.alphabet_size), text.symbols};
}

}  // namespace

FrontierTable::FrontierTable(const Word& text, int n)
    : n_(n), infinity_(text.length() + 1), successors_(text) {
  reach_.assign(size_t{1} << n_, 0);
  // Increasing mask order: every S \ {c} is filled before S.
  for (uint32_t mask = 1; mask <= full_mask(); ++mask) {
    int best = 0;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int bit = std::countr_zero(rest);
      const int from = reach_[mask & ~(uint32_t{1} << bit)];
      best = std::max(best, successors_.Next(from, bit + 1));
      if (best >= infinity_) break;
    }
    reach_[mask] = best;
  }
}

absl::StatusOr<FrontierTable> FrontierTable::Build(
    const Word& text, const UniversalityLimits& limits) {
  const int n = text.alphabet_size;
  if (auto s = CheckAlphabet(text, n, limits.max_frontier_alphabet,
                             "frontier table");
      !s.ok()) {
    return s;
  }
  return FrontierTable(text, n);
}

std::vector<int> FrontierTable::WorstOrdering(uint32_t mask) const {
  std::vector<int> order;
  while (mask != 0) {
    int chosen = 0;
    int best = -1;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int bit = std::countr_zero(rest);
      const int from = reach_[mask & ~(uint32_t{1} << bit)];
      const int at = successors_.Next(from, bit + 1);
      // >= keeps the largest tied symbol.
      if (at >= best) {
        best = at;
        chosen = bit + 1;
      }
    }
    order.push_back(chosen);
    mask &= ~(uint32_t{1} << (chosen - 1));
  }
  std::reverse(order.begin(), order.end());
  return order;
}

absl::StatusOr<bool> IsUniversal(const Word& text, int n,
                                 const UniversalityLimits& limits) {
  if (auto s = CheckAlphabet(text, n, limits.max_frontier_alphabet,
                             "is_universal");
      !s.ok()) {
    return s;
  }
  auto table = FrontierTable::Build(Word{n, text.symbols}, limits);
  if (!table.ok()) return table.status();
  return table->Covers(table->full_mask());
}

absl::StatusOr<UniversalityVerdict> FindMissingPermutation(
    const Word& text, int n, const UniversalityLimits& limits) {
  if (auto s = CheckAlphabet(text, n, limits.max_frontier_alphabet,
                             "find_missing_permutation");
      !s.ok()) {
    return s;
  }
  auto table = FrontierTable::Build(Word{n, text.symbols}, limits);
  if (!table.ok()) return table.status();
  if (table->Covers(table->full_mask())) return UniversalityVerdict{true, {}};
  auto witness = Permutation::Create(table->WorstOrdering(table->full_mask()));
  if (!witness.ok()) return witness.status();
  return UniversalityVerdict{false, *std::move(witness)};
}

absl::StatusOr<UniversalityVerdict> BruteForceUniversal(
    const Word& text, int n, const UniversalityLimits& limits) {
  if (auto s = CheckAlphabet(text, n, limits.max_oracle_alphabet,
                             "brute_force_universal");
      !s.ok()) {
    return s;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (!IsSubsequence(perm, text.symbols)) {
      auto witness = Permutation::Create(perm);
      if (!witness.ok()) return witness.status();
      return UniversalityVerdict{false, *std::move(witness)};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return UniversalityVerdict{true, {}};
}

int MaxCoveredWordLength(const Word& text, int n) {
  if (n < 1) return 0;
  const SuccessorTable next(WithAlphabet(text, n));
  int position = 0;
  int steps = 0;
  while (true) {
    int furthest = 0;
    for (int c = 1; c <= n; ++c) {
      furthest = std::max(furthest, next.Next(position, c));
    }
    if (furthest > text.length()) return steps;
    position = furthest;
    ++steps;
  }
}

bool AllWordsUniversal(const Word& text, int n, int k) {
  if (k <= 0) return true;
  return MaxCoveredWordLength(text, n) >= k;
}

Word ConstructUniversal(int n) {
  Word w{n, {}};
  w.symbols.reserve(static_cast<size_t>(n) * n);
  for (int block = 0; block < n; ++block) {
    for (int c = 1; c <= n; ++c) w.symbols.push_back(c);
  }
  return w;
}

}  // namespace permuniv
