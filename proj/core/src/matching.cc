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

#include "permuniv/matching.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"
#include "text_lines.h"

namespace permuniv {

using internal::LineError;
using internal::ParseInteger;
using internal::TextLines;
using internal::Tokens;

absl::StatusOr<MatchingInstance> MatchingInstance::Create(
    int n, std::vector<std::pair<int, int>> edges,
    std::vector<int> restricted) {
  if (n < 1) {
    return absl::InvalidArgumentError(absl::StrCat("n must be >= 1, got ", n));
  }
  for (const auto& [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge (", i, ", ", j, ") leaves [1, ", n, "]^2"));
    }
  }
  for (int i : restricted) {
    if (i < 1 || i > n) {
      return absl::InvalidArgumentError(
          absl::StrCat("restricted vertex ", i, " is outside [1, ", n, "]"));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::sort(restricted.begin(), restricted.end());
  restricted.erase(std::unique(restricted.begin(), restricted.end()),
                   restricted.end());
  return MatchingInstance{n, std::move(edges), std::move(restricted)};
}

std::vector<std::vector<int>> MatchingInstance::Adjacency() const {
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [i, j] : edges) adj[i].push_back(j);
  return adj;
}

std::vector<bool> MatchingInstance::RestrictedMask() const {
  std::vector<bool> mask(n + 1, false);
  for (int i : restricted) mask[i] = true;
  return mask;
}

bool Verify(const MatchingInstance& instance, const Matching& m) {
  if (m.size() != instance.n) return false;
  std::vector<bool> taken(instance.n + 1, false);
  for (int i = 1; i <= instance.n; ++i) {
    const int j = m.partner[i - 1];
    if (j < 1 || j > instance.n || taken[j]) return false;
    taken[j] = true;
    if (!std::binary_search(instance.edges.begin(), instance.edges.end(),
                            std::make_pair(i, j))) {
      return false;
    }
  }
  int last = 0;
  for (int i : instance.restricted) {
    if (m.partner[i - 1] <= last) return false;
    last = m.partner[i - 1];
  }
  return true;
}

namespace {

class MatchingSearch {
 public:
  MatchingSearch(const MatchingInstance& instance, bool hall)
      : n_(instance.n),
        hall_(hall),
        adj_(instance.Adjacency()),
        restricted_(instance.RestrictedMask()),
        partner_(n_ + 1, 0),
        used_(n_ + 1, false),
        lo_(n_ + 1, 0),
        hi_(n_ + 1, 0) {
    for (int u = 1; u <= n_; ++u) {
      if (restricted_[u]) restricted_order_.push_back(u);
    }
  }

  std::optional<Matching> Run() {
    if (!Assign(1, 0)) return std::nullopt;
    return Matching{std::vector<int>(partner_.begin() + 1, partner_.end())};
  }

 private:
  // Failed subproblems, keyed by used b's, next a and floor. Only for n <= 64.
  using Key = std::pair<uint64_t, uint32_t>;
  static constexpr size_t kMemoCap = size_t{1} << 22;

  Key MakeKey(int u, int floor) const {
    uint64_t mask = 0;
    for (int v = 1; v <= n_; ++v) {
      if (used_[v]) mask |= uint64_t{1} << (v - 1);
    }
    return {mask, static_cast<uint32_t>(u) << 8 | static_cast<uint32_t>(floor)};
  }

  // `floor` is the largest b-index taken by a restricted vertex so far.
  bool Assign(int u, int floor) {
    if (u > n_) return true;
    const bool memo = n_ <= 64;
    Key key;
    if (memo) {
      key = MakeKey(u, floor);
      if (dead_.contains(key)) return false;
    }
    for (int v : adj_[u]) {
      if (used_[v] || (restricted_[u] && v <= floor)) continue;
      partner_[u] = v;
      used_[v] = true;
      const int next_floor = restricted_[u] ? v : floor;
      if ((!hall_ || Feasible(u + 1, next_floor)) && Assign(u + 1, next_floor)) {
        return true;
      }
      used_[v] = false;
      partner_[u] = 0;
    }
    if (memo && dead_.size() < kMemoCap) dead_.insert(key);
    return false;
  }

  // Necessary conditions for completing a_first..a_n. The remaining
  // restricted vertices must climb through unused b's above `floor`; greedy
  // passes from both ends give each one a window [lo, hi]. Then all remaining
  // vertices, restricted ones inside their windows, need a perfect matching.
  bool Feasible(int first, int floor) {
    auto from = std::lower_bound(restricted_order_.begin(),
                                 restricted_order_.end(), first);
    int cur = floor;
    for (auto it = from; it != restricted_order_.end(); ++it) {
      int best = 0;
      for (int v : adj_[*it]) {
        if (!used_[v] && v > cur) {
          best = v;
          break;
        }
      }
      if (best == 0) return false;
      lo_[*it] = cur = best;
    }
    cur = n_ + 1;
    for (auto it = restricted_order_.end(); it != from;) {
      --it;
      int best = 0;
      for (auto v = adj_[*it].rbegin(); v != adj_[*it].rend(); ++v) {
        if (!used_[*v] && *v < cur) {
          best = *v;
          break;
        }
      }
      if (best == 0 || best < lo_[*it]) return false;
      hi_[*it] = cur = best;
    }
    std::vector<int> owner(n_ + 1, 0);
    for (int u = first; u <= n_; ++u) {
      std::vector<bool> seen(n_ + 1, false);
      if (!Augment(u, owner, seen)) return false;
    }
    return true;
  }

  bool Allowed(int u, int v) const {
    return !used_[v] && (!restricted_[u] || (v >= lo_[u] && v <= hi_[u]));
  }

  bool Augment(int u, std::vector<int>& owner, std::vector<bool>& seen) {
    for (int v : adj_[u]) {
      if (seen[v] || !Allowed(u, v)) continue;
      seen[v] = true;
      if (owner[v] == 0 || Augment(owner[v], owner, seen)) {
        owner[v] = u;
        return true;
      }
    }
    return false;
  }

  const int n_;
  const bool hall_;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> restricted_;
  std::vector<int> restricted_order_;
  std::vector<int> partner_;
  std::vector<bool> used_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  absl::flat_hash_set<Key> dead_;
};

}  // namespace

std::optional<Matching> Solve(const MatchingInstance& instance,
                              const MatchingSolveOptions& options) {
  return MatchingSearch(instance, options.hall_pruning).Run();
}

absl::StatusOr<std::optional<Matching>> BruteForceMatchings(
    const MatchingInstance& instance, int max_n) {
  if (instance.n > max_n) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "brute_force_matchings: n=", instance.n, " exceeds the cap of ",
        max_n));
  }
  Matching m;
  m.partner.resize(instance.n);
  std::iota(m.partner.begin(), m.partner.end(), 1);
  do {
    if (Verify(instance, m)) return std::optional<Matching>(m);
  } while (std::next_permutation(m.partner.begin(), m.partner.end()));
  return std::optional<Matching>();
}

MatchingInstance PipToMatching(const PipInstance& pip) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= pip.n; ++i) {
    for (int j : pip.allowed[i - 1]) edges.emplace_back(i, j);
  }
  std::vector<int> restricted(pip.k + 1);
  std::iota(restricted.begin(), restricted.end(), 1);
  return *MatchingInstance::Create(pip.n, std::move(edges),
                                   std::move(restricted));
}

absl::StatusOr<MatchingInstance> ParseMatching(std::string_view text) {
  TextLines lines(text);
  if (lines.done()) return LineError(1, "missing 'match <n>' header");
  const auto header = lines.Take();
  const auto head = Tokens(header.text);
  if (head.size() != 2 || head[0] != "match") {
    return LineError(header.number, "expected 'match <n>'");
  }
  auto n = ParseInteger(head[1]);
  if (!n.ok()) return LineError(header.number, n.status().message());
  if (*n < 1) return LineError(header.number, "n must be >= 1");

  if (lines.done() || !lines.Peek().text.starts_with("restricted:")) {
    return LineError(lines.done() ? lines.end_line() : lines.Peek().number,
                     "expected 'restricted: ...' line");
  }
  const auto rline = lines.Take();
  std::vector<int> restricted;
  for (std::string_view tok :
       Tokens(rline.text.substr(std::string_view("restricted:").size()))) {
    auto i = ParseInteger(tok);
    if (!i.ok()) return LineError(rline.number, i.status().message());
    if (*i < 1 || *i > *n) {
      return LineError(rline.number, "restricted vertex ", *i,
                       " is outside [1, ", *n, "]");
    }
    restricted.push_back(static_cast<int>(*i));
  }

  std::vector<std::pair<int, int>> edges;
  while (!lines.done()) {
    const auto line = lines.Take();
    const auto tokens = Tokens(line.text);
    if (tokens.size() != 3 || tokens[0] != "edge") {
      return LineError(line.number, "expected 'edge <i> <j>'");
    }
    auto i = ParseInteger(tokens[1]);
    auto j = ParseInteger(tokens[2]);
    if (!i.ok() || !j.ok()) {
      return LineError(line.number, "edge endpoints must be integers");
    }
    if (*i < 1 || *i > *n || *j < 1 || *j > *n) {
      return LineError(line.number, "edge (", *i, ", ", *j,
                       ") has an endpoint outside [1, ", *n, "]");
    }
    edges.emplace_back(static_cast<int>(*i), static_cast<int>(*j));
  }
  return MatchingInstance::Create(static_cast<int>(*n), std::move(edges),
                                  std::move(restricted));
}

std::string SerializeMatching(const MatchingInstance& instance) {
  std::string out = absl::StrCat("match ", instance.n, "\nrestricted:");
  for (int i : instance.restricted) absl::StrAppend(&out, " ", i);
  out += '\n';
  for (const auto& [i, j] : instance.edges) {
    absl::StrAppend(&out, "edge ", i, " ", j, "\n");
  }
  return out;
}

absl::StatusOr<Matching> ParseMatchingSolution(std::string_view text, int n) {
  TextLines lines(text);
  Matching m;
  m.partner.assign(n, 0);
  int pairs = 0;
  while (!lines.done()) {
    const auto line = lines.Take();
    const auto tokens = Tokens(line.text);
    if (tokens.size() != 3 || tokens[0] != "pair") {
      return LineError(line.number, "expected 'pair <i> <j>'");
    }
    auto i = ParseInteger(tokens[1]);
    auto j = ParseInteger(tokens[2]);
    if (!i.ok() || !j.ok() || *i < 1 || *i > n || *j < 1 || *j > n) {
      return LineError(line.number, "pair endpoints must lie in [1, ", n, "]");
    }
    if (m.partner[*i - 1] != 0) {
      return LineError(line.number, "vertex a_", *i, " is paired twice");
    }
    m.partner[*i - 1] = static_cast<int>(*j);
    ++pairs;
  }
  if (pairs != n) {
    return absl::InvalidArgumentError(
        absl::StrCat("solution pairs ", pairs, " vertices, expected ", n));
  }
  return m;
}

std::string SerializeMatchingSolution(const Matching& m) {
  std::string out;
  for (int i = 1; i <= m.size(); ++i) {
    absl::StrAppend(&out, "pair ", i, " ", m.partner[i - 1], "\n");
  }
  return out;
}

}  // namespace permuniv
