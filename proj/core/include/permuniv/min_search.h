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

#ifndef PERMUNIV_MIN_SEARCH_H_
#define PERMUNIV_MIN_SEARCH_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "permuniv/words.h"

namespace permuniv {

struct MinSearchOptions {
  // Exponential search; larger alphabets are refused with kResourceExhausted.
  int max_alphabet = 5;
  // Worker threads per length level. The result does not depend on it.
  int jobs = 1;
};

struct MinUniversalResult {
  int length = 0;
  // Lexicographically smallest universal word of that length.
  Word example;
  uint64_t nodes_explored = 0;
};

// Shortest universal word over {1..n} with length at most `length_budget`.
// Returns kNotFound when no universal word fits in the budget.
absl::StatusOr<MinUniversalResult> MinUniversalLength(
    int n, int length_budget, const MinSearchOptions& options = {});

}  // namespace permuniv

#endif  // PERMUNIV_MIN_SEARCH_H_
