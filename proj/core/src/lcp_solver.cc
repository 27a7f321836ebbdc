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

#include <algorithm>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "permuniv/lcp.h"

namespace permuniv {
namespace {

class LcpSearch {
 public:
  LcpSearch(const LcpInstance& instance, const LcpSolveOptions& options)
      : inst_(instance),
        n_(instance.n),
        hall_(options.hall_pruning),
        assignment_(n_ + 1, 0),
        used_(n_ + 1, false),
        match_of_position_(n_ + 1, 0),
        match_of_value_(n_ + 1, 0),
        visit_stamp_(n_ + 1, 0) {}

  std::optional<Permutation> Run() {
    for (int i = 1; i <= n_; ++i) {
      if (inst_.Allowed(i).empty()) return std::nullopt;
    }
    if (hall_ && !RepairMatching(1)) return std::nullopt;
    if (!Assign(1)) return std::nullopt;
    std::vector<int> values(assignment_.begin() + 1, assignment_.end());
    return *Permutation::Create(std::move(values));
  }

  long long nodes() const { return nodes_; }

 private:
  // Can `value` go to `position`, given every position before it is fixed?
  bool Admissible(int position, int value) const {
    if (used_[value]) return false;
    if (position > 1) {
      const auto& order = inst_.Order(position - 1);
      const int prev = assignment_[position - 1];
      if (order && prev != 0 && !order->Less(prev, value)) return false;
    }
    return true;
  }

  bool Assign(int position) {
    ++nodes_;
    if (position > n_) return true;
    for (int value : inst_.Allowed(position)) {
      if (!Admissible(position, value)) continue;
      assignment_[position] = value;
      used_[value] = true;
      if (!hall_ || RepairMatching(position + 1)) {
        if (Assign(position + 1)) return true;
      }
      used_[value] = false;
      assignment_[position] = 0;
    }
    return false;
  }

  // Keeps a matching of the free positions `first`..n onto unused values and
  // reports whether it can be made perfect. Edges that the latest assignment
  // invalidated are dropped and re-augmented; the rest is reused.
  bool RepairMatching(int first) {
    for (int v = 1; v <= n_; ++v) {
      const int p = match_of_value_[v];
      if (p != 0 && (p < first || used_[v])) {
        match_of_value_[v] = 0;
        if (match_of_position_[p] == v) match_of_position_[p] = 0;
      }
    }
    for (int p = first; p <= n_; ++p) {
      const int v = match_of_position_[p];
      if (v != 0 && (match_of_value_[v] != p || !Admissible(p, v))) {
        if (match_of_value_[v] == p) match_of_value_[v] = 0;
        match_of_position_[p] = 0;
      }
    }
    for (int p = first; p <= n_; ++p) {
      if (match_of_position_[p] != 0) continue;
      ++stamp_;
      if (!Augment(p, first)) return false;
    }
    return true;
  }

  // Kuhn-style augmenting path from position p. Only position `first` sees
  // the order constraint of the previous gap; later gaps depend on values
  // that are not yet fixed.
  bool Augment(int p, int first) {
    for (int v : inst_.Allowed(p)) {
      if (used_[v] || visit_stamp_[v] == stamp_) continue;
      if (p == first && !Admissible(p, v)) continue;
      visit_stamp_[v] = stamp_;
      const int owner = match_of_value_[v];
      if (owner == 0 || Augment(owner, first)) {
        match_of_value_[v] = p;
        match_of_position_[p] = v;
        return true;
      }
    }
    return false;
  }

  const LcpInstance& inst_;
  const int n_;
  const bool hall_;
  std::vector<int> assignment_;
  std::vector<bool> used_;
  std::vector<int> match_of_position_;
  std::vector<int> match_of_value_;
  std::vector<int> visit_stamp_;
  int stamp_ = 0;
  long long nodes_ = 0;
};

}  // namespace

std::optional<Permutation> Solve(const LcpInstance& instance,
                                 const LcpSolveOptions& options,
                                 LcpSolveStats* stats) {
  LcpSearch search(instance, options);
  auto result = search.Run();
  if (stats != nullptr) stats->nodes = search.nodes();
  return result;
}

absl::StatusOr<std::optional<Permutation>> BruteForceSolve(
    const LcpInstance& instance, int max_n) {
  if (instance.n > max_n) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "brute_force_solve: n=", instance.n, " exceeds the cap of ", max_n));
  }
  std::vector<int> values(instance.n);
  std::iota(values.begin(), values.end(), 1);
  do {
    auto pi = *Permutation::Create(values);
    if (CheckSolution(instance, pi)) return std::optional<Permutation>(pi);
  } while (std::next_permutation(values.begin(), values.end()));
  return std::optional<Permutation>();
}

}  // namespace permuniv
