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

#ifndef PERMUNIV_TESTS_ORACLES_H_
#define PERMUNIV_TESTS_ORACLES_H_

// Reference implementations for tests. Each one takes a different route from
// the library code it checks: exhaustive embeddings instead of greedy
// matching, full enumeration instead of dynamic programming or search.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "permuniv/cnf.h"
#include "permuniv/universality.h"
#include "permuniv/words.h"

namespace permuniv::testing {

// Tries every strictly increasing index sequence.
inline bool EmbeddingExists(const std::vector<int>& pattern,
                            const std::vector<int>& text, size_t from = 0,
                            size_t matched = 0) {
  if (matched == pattern.size()) return true;
  for (size_t i = from; i < text.size(); ++i) {
    if (text[i] == pattern[matched] &&
        EmbeddingExists(pattern, text, i + 1, matched + 1)) {
      return true;
    }
  }
  return false;
}

inline void ForEachPermutation(int n,
                               const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Every word of length `length` over {1..n}, in lexicographic order.
inline void ForEachWord(int n, int length,
                        const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> word(length, 1);
  while (true) {
    if (!fn(word)) return;
    int i = length - 1;
    while (i >= 0 && word[i] == n) word[i--] = 1;
    if (i < 0) return;
    ++word[i];
  }
}

inline bool AllWordsEmbedded(const Word& text, int n, int k) {
  bool all = true;
  ForEachWord(n, k, [&](const std::vector<int>& w) {
    all = EmbeddingExists(w, text.symbols);
    return all;
  });
  return all;
}

// Number of universal words of the given length found by scanning all n^L
// words with the frontier decider.
inline long long CountUniversalWords(int n, int length) {
  long long count = 0;
  ForEachWord(n, length, [&](const std::vector<int>& w) {
    if (*IsUniversal(Word{n, w}, n)) ++count;
    return true;
  });
  return count;
}

// The exhaustive 3-CNF grid: m in 1..max_m, d in 1..max_d, clauses as
// non-decreasing literal triples, clause lists non-decreasing.
inline std::vector<CnfFormula> FormulaGrid(int max_m, int max_d) {
  std::vector<CnfFormula> out;
  for (int m = 1; m <= max_m; ++m) {
    std::vector<Literal> literals;
    for (int v = 1; v <= m; ++v) {
      literals.push_back({v, false});
      literals.push_back({v, true});
    }
    std::vector<Clause> clause_pool;
    const int L = static_cast<int>(literals.size());
    for (int a = 0; a < L; ++a) {
      for (int b = a; b < L; ++b) {
        for (int c = b; c < L; ++c) {
          clause_pool.push_back({literals[a], literals[b], literals[c]});
        }
      }
    }
    const int C = static_cast<int>(clause_pool.size());
    for (int d = 1; d <= max_d; ++d) {
      std::vector<int> pick(d, 0);
      while (true) {
        std::vector<Clause> clauses;
        for (int idx : pick) clauses.push_back(clause_pool[idx]);
        out.push_back(*CnfFormula::Create(m, std::move(clauses)));
        int i = d - 1;
        while (i >= 0 && pick[i] == C - 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < d; ++j) pick[j] = pick[i];
      }
    }
  }
  return out;
}

// Every satisfying assignment of a formula.
inline std::vector<Assignment> AllModels(const CnfFormula& formula) {
  std::vector<Assignment> models;
  const int m = formula.num_variables;
  for (unsigned bits = 0; bits < (1u << m); ++bits) {
    Assignment a(m);
    for (int v = 0; v < m; ++v) a[v] = (bits >> v) & 1;
    bool ok = true;
    for (const Clause& c : formula.clauses) {
      bool sat = false;
      for (const Literal& lit : c) sat = sat || (a[lit.variable - 1] != lit.negated);
      ok = ok && sat;
    }
    if (ok) models.push_back(a);
  }
  return models;
}

}  // namespace permuniv::testing

#endif  // PERMUNIV_TESTS_ORACLES_H_
