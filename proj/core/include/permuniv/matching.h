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

#ifndef PERMUNIV_MATCHING_H_
#define PERMUNIV_MATCHING_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "permuniv/lcp.h"

namespace permuniv {

// Ordered bipartite graph U = (a_1..a_n), V = (b_1..b_n) with edge (i, j)
// joining a_i and b_j, plus the restricted vertex set W of U whose matching
// edges must not cross.
struct MatchingInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, unique
  std::vector<int> restricted;             // sorted, unique

  static absl::StatusOr<MatchingInstance> Create(
      int n, std::vector<std::pair<int, int>> edges,
      std::vector<int> restricted);

  // V-neighbours of every a_i, indexed 1..n (entry 0 unused).
  std::vector<std::vector<int>> Adjacency() const;
  std::vector<bool> RestrictedMask() const;

  friend bool operator==(const MatchingInstance&,
                         const MatchingInstance&) = default;
};

// Perfect matching stored as partner[i-1] = j for the pair (a_i, b_j).
struct Matching {
  std::vector<int> partner;

  int size() const { return static_cast<int>(partner.size()); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

// M is a perfect matching inside E, and restricted edges (a_i, b_j),
// (a_k, b_l) with i < k satisfy j < l.
bool Verify(const MatchingInstance& instance, const Matching& m);

struct MatchingSolveOptions {
  bool hall_pruning = true;
};

// Backtracking over a_1..a_n, smallest b_j first.
std::optional<Matching> Solve(const MatchingInstance& instance,
                              const MatchingSolveOptions& options = {});

// n!-enumeration oracle; returns the lexicographically smallest partner
// vector that verifies.
absl::StatusOr<std::optional<Matching>> BruteForceMatchings(
    const MatchingInstance& instance, int max_n = 8);

// Edge (a_i, b_j) iff j in H_i; the restricted set is a_1..a_{k+1}.
MatchingInstance PipToMatching(const PipInstance& pip);

//   match <n>
//   restricted: i1 i2 ...
//   edge <i> <j>
absl::StatusOr<MatchingInstance> ParseMatching(std::string_view text);
std::string SerializeMatching(const MatchingInstance& instance);

// One 'pair <i> <j>' line per U vertex.
absl::StatusOr<Matching> ParseMatchingSolution(std::string_view text, int n);
std::string SerializeMatchingSolution(const Matching& m);

}  // namespace permuniv

#endif  // PERMUNIV_MATCHING_H_
