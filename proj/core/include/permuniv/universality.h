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

#ifndef PERMUNIV_UNIVERSALITY_H_
#define PERMUNIV_UNIVERSALITY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "permuniv/words.h"

namespace permuniv {

// Resource caps. Defaults match the documented limits; callers may raise or
// lower them.
struct UniversalityLimits {
  int max_frontier_alphabet = 24;
  int max_oracle_alphabet = 8;
};

// reach(S) for every subset S of {1..n}: the furthest position at which the
// greedy matcher can end when it reads the symbols of S in the worst possible
// order. Subsets are bit masks (bit c-1 <-> symbol c). A value greater than
// |T| means some ordering of S is not a subsequence of T.
class FrontierTable {
 public:
  static absl::StatusOr<FrontierTable> Build(
      const Word& text, const UniversalityLimits& limits = {});

  int alphabet_size() const { return n_; }
  int infinity() const { return infinity_; }
  uint32_t full_mask() const { return (uint32_t{1} << n_) - 1; }

  int Reach(uint32_t mask) const { return reach_[mask]; }
  bool Covers(uint32_t mask) const { return reach_[mask] < infinity_; }

  // The ordering of `mask` that realises Reach(mask), built back to front by
  // taking an argmax symbol at every step. Among tied symbols the largest is
  // placed last, so smaller symbols drift to the front.
  std::vector<int> WorstOrdering(uint32_t mask) const;

 private:
  FrontierTable(const Word& text, int n);

  int n_;
  int infinity_;
  SuccessorTable successors_;
  std::vector<int32_t> reach_;
};

struct UniversalityVerdict {
  bool universal = false;
  std::optional<Permutation> witness;  // present iff !universal
};

// Does every permutation of {1..n} occur in `text` as a subsequence?
absl::StatusOr<bool> IsUniversal(const Word& text, int n,
                                 const UniversalityLimits& limits = {});

absl::StatusOr<UniversalityVerdict> FindMissingPermutation(
    const Word& text, int n, const UniversalityLimits& limits = {});

// n!-enumeration oracle. Returns the lexicographically smallest missing
// permutation when there is one.
absl::StatusOr<UniversalityVerdict> BruteForceUniversal(
    const Word& text, int n, const UniversalityLimits& limits = {});

// Number of steps the "furthest earliest occurrence" chain survives, i.e. the
// largest k such that every word of length k over {1..n} is a subsequence.
int MaxCoveredWordLength(const Word& text, int n);

// True iff every length-k word over {1..n} (repetitions allowed) occurs.
bool AllWordsUniversal(const Word& text, int n, int k);

// (1 2 ... n) repeated n times.
Word ConstructUniversal(int n);

}  // namespace permuniv

#endif  // PERMUNIV_UNIVERSALITY_H_
