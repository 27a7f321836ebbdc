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

#include "permuniv/generators.h"

#include <algorithm>
#include <numeric>

namespace permuniv {

uint64_t Rng::Below(uint64_t bound) {
  // Largest multiple of `bound` representable; draws above it are rejected.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return x % bound;
}

std::vector<int> Rng::Shuffled(int n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(values[i], values[Below(static_cast<uint64_t>(i) + 1)]);
  }
  return values;
}

Word RandomWord(int n, int length, Rng& rng) {
  Word w{n, {}};
  w.symbols.reserve(length);
  for (int i = 0; i < length; ++i) w.symbols.push_back(rng.Uniform(1, n));
  return w;
}

namespace {

std::vector<std::vector<int>> RandomAllowed(int n, Rng& rng) {
  std::vector<std::vector<int>> allowed(n);
  for (auto& set : allowed) {
    for (int v = 1; v <= n; ++v) {
      if (rng.Coin()) set.push_back(v);
    }
  }
  return allowed;
}

}  // namespace

LcpInstance RandomLcp(int n, Rng& rng) {
  auto allowed = RandomAllowed(n, rng);
  std::vector<std::optional<LinearOrder>> orders;
  for (int g = 1; g < n; ++g) {
    switch (rng.Below(3)) {
      case 0:
        orders.emplace_back(std::nullopt);
        break;
      case 1:
        orders.emplace_back(LinearOrder::Integer(n));
        break;
      default:
        orders.emplace_back(*LinearOrder::FromOrderWord(rng.Shuffled(n)));
    }
  }
  return *LcpInstance::Create(n, std::move(allowed), std::move(orders));
}

PipInstance RandomPip(int n, Rng& rng) {
  auto allowed = RandomAllowed(n, rng);
  const int k = rng.Uniform(0, n - 1);
  return *PipInstance::Create(n, std::move(allowed), k);
}

CnfFormula RandomCnf(int m, int d, Rng& rng) {
  std::vector<Clause> clauses(d);
  for (Clause& clause : clauses) {
    for (Literal& lit : clause) {
      lit.variable = rng.Uniform(1, m);
      lit.negated = rng.Coin();
    }
  }
  return *CnfFormula::Create(m, std::move(clauses));
}

MatchingInstance RandomMatching(int n, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (rng.Coin()) edges.emplace_back(i, j);
    }
  }
  const int size = rng.Uniform(0, n);
  std::vector<int> order = rng.Shuffled(n);
  std::vector<int> restricted(order.begin(), order.begin() + size);
  return *MatchingInstance::Create(n, std::move(edges), std::move(restricted));
}

}  // namespace permuniv
