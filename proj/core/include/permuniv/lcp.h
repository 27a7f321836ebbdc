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

#ifndef PERMUNIV_LCP_H_
#define PERMUNIV_LCP_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "permuniv/words.h"

namespace permuniv {

// A linear order on {1..n}, kept as its smallest-first listing (the order
// word) together with the inverse rank table.
class LinearOrder {
 public:
  LinearOrder() = default;

  // `order_word` must be a permutation of {1..n}; it lists the elements from
  // smallest to largest.
  static absl::StatusOr<LinearOrder> FromOrderWord(std::vector<int> order_word);
  // Total order extending a chain given on some of the elements: `chain`
  // comes first, then every unmentioned element in increasing integer order.
  static absl::StatusOr<LinearOrder> FromChain(int n,
                                               const std::vector<int>& chain);
  // The usual order 1 < 2 < ... < n.
  static LinearOrder Integer(int n);

  int size() const { return static_cast<int>(order_word_.size()); }
  // 0-based rank; x precedes y iff Rank(x) < Rank(y).
  int Rank(int x) const { return rank_[x]; }
  bool Less(int x, int y) const { return rank_[x] < rank_[y]; }
  const std::vector<int>& order_word() const { return order_word_; }
  bool IsInteger() const;

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.order_word_ == b.order_word_;
  }

 private:
  std::vector<int> order_word_;
  std::vector<int> rank_;  // indexed by value, rank_[0] unused
};

// Locally Constrained Permutation: find pi with pi_i in allowed(i) for every
// position and pi_i < pi_{i+1} under the order of gap i. A gap without an
// order ("free") imposes nothing.
struct LcpInstance {
  int n = 0;
  // allowed[i-1] is the sorted value set of position i.
  std::vector<std::vector<int>> allowed;
  // orders[i-1] governs the gap between positions i and i+1.
  std::vector<std::optional<LinearOrder>> orders;

  static absl::StatusOr<LcpInstance> Create(
      int n, std::vector<std::vector<int>> allowed,
      std::vector<std::optional<LinearOrder>> orders);

  const std::vector<int>& Allowed(int position) const {
    return allowed[position - 1];
  }
  const std::optional<LinearOrder>& Order(int gap) const {
    return orders[gap - 1];
  }
  int FreeGapCount() const;

  friend bool operator==(const LcpInstance&, const LcpInstance&) = default;
};

// Prefix Increasing Permutation: allowed sets plus pi_1 < ... < pi_{k+1}.
struct PipInstance {
  int n = 0;
  std::vector<std::vector<int>> allowed;
  int k = 0;

  // Requires 0 <= k <= n-1; k = n would constrain a position past the end.
  static absl::StatusOr<PipInstance> Create(
      int n, std::vector<std::vector<int>> allowed, int k);

  friend bool operator==(const PipInstance&, const PipInstance&) = default;
};

bool CheckSolution(const LcpInstance& instance, const Permutation& pi);
bool CheckPipSolution(const PipInstance& instance, const Permutation& pi);

struct LcpSolveOptions {
  // Prune with a perfect-matching (Hall) test on the unassigned positions.
  bool hall_pruning = true;
};

struct LcpSolveStats {
  long long nodes = 0;
};

// Exact backtracking search, positions left to right, values smallest first.
std::optional<Permutation> Solve(const LcpInstance& instance,
                                 const LcpSolveOptions& options = {},
                                 LcpSolveStats* stats = nullptr);

// n!-enumeration oracle; returns the lexicographically smallest solution.
absl::StatusOr<std::optional<Permutation>> BruteForceSolve(
    const LcpInstance& instance, int max_n = 8);

// Replaces every free gap i by a dummy position holding a fresh value c that
// is the largest element of the order before it and the smallest of the
// order after it. Dummy values are n+1, n+2, ... in gap order.
LcpInstance CompleteFreeOrders(const LcpInstance& instance);

// Inverse of CompleteFreeOrders on solutions: drops the dummy positions,
// which are exactly those holding a value above `original_n`.
absl::StatusOr<Permutation> ProjectCompletedSolution(int original_n,
                                                     const Permutation& pi);

// Gaps 1..k get the integer order, the rest stay free.
LcpInstance PipToLcp(const PipInstance& pip);

// Text formats.
//   lcp <n>
//   allowed <i>: v1 v2 ...        (n lines)
//   order <i>: p1 ... pn | free   (n-1 lines)
// and
//   pip <n> <k>
//   allowed <i>: v1 v2 ...        (n lines)
absl::StatusOr<LcpInstance> ParseLcp(std::string_view text);
std::string SerializeLcp(const LcpInstance& instance);
absl::StatusOr<PipInstance> ParsePip(std::string_view text);
std::string SerializePip(const PipInstance& instance);

}  // namespace permuniv

#endif  // PERMUNIV_LCP_H_
