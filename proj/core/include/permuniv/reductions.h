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

#ifndef PERMUNIV_REDUCTIONS_H_
#define PERMUNIV_REDUCTIONS_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "permuniv/cnf.h"
#include "permuniv/lcp.h"
#include "permuniv/words.h"

namespace permuniv {

// Memory cell of one literal occurrence: positions mem..mem+p, where copy x
// may hold f+x ("literal false") or t+x ("literal true").
struct LiteralCell {
  int clause = 0;      // 1-based
  int slot = 0;        // 1..3 inside the clause
  Literal literal;
  int occurrence = 0;  // 1-based rank among occurrences of the variable
  int mem = 0;
  int f = 0;
  int t = 0;

  friend bool operator==(const LiteralCell&, const LiteralCell&) = default;
};

// Two positions forcing two occurrences of one variable to agree. The first
// cell spends copy `first_copy`, the second spends copy `second_copy`.
struct EqualityGadget {
  int first = 0;   // index into ReductionLayout::cells
  int second = 0;
  int first_copy = 0;
  int second_copy = 0;
  int comp1 = 0;
  int comp2 = 0;

  friend bool operator==(const EqualityGadget&, const EqualityGadget&) = default;
};

struct DummySlot {
  int position = 0;
  int value = 0;

  friend bool operator==(const DummySlot&, const DummySlot&) = default;
};

// Where every gadget of a 3-SAT -> LCP reduction lives. Positions and values
// refer to the instance the layout was produced with.
struct ReductionLayout {
  CnfFormula formula;
  int p = 0;  // copies per literal minus one: max occurrences of a variable
  int n = 0;  // size of the accompanying instance
  std::vector<LiteralCell> cells;         // clause-major, slot-minor
  std::vector<int> clause_positions;      // one per clause
  std::vector<EqualityGadget> equalities;
  std::vector<int> balancing_positions;
  std::vector<DummySlot> dummies;         // empty unless free gaps were closed

  friend bool operator==(const ReductionLayout&,
                         const ReductionLayout&) = default;
};

struct SatLcpReduction {
  LcpInstance instance;
  ReductionLayout layout;
};

struct SatPipReduction {
  PipInstance instance;
  ReductionLayout layout;
};

struct SatWordReduction {
  Word word;
  SatLcpReduction lcp;
};

// 3-SAT -> LCP. The output has no free gaps; it is satisfiable iff the
// formula is.
SatLcpReduction SatToLcp(const CnfFormula& formula);

// Same gadgets laid out so that the only order constraint is integer
// monotonicity on the memory-cell prefix and no dummy positions are needed.
SatPipReduction PrefixIncreasingNormalForm(const CnfFormula& formula);

// Permutation solving `instance` built from a satisfying assignment. Fails
// with kInvalidArgument naming the first falsified clause otherwise.
absl::StatusOr<Permutation> EmbedAssignment(const LcpInstance& instance,
                                            const ReductionLayout& layout,
                                            const Assignment& assignment);

enum class CellReading { kTrue, kFalse, kUndecided };

// All copies hold t-values / all hold f-values / anything else.
CellReading ReadCell(const LiteralCell& cell, int p, const Permutation& pi);

// Satisfying assignment recovered from any solution of `instance`. A variable
// takes the value of its first decided occurrence and defaults to false.
absl::StatusOr<Assignment> ExtractAssignment(const LcpInstance& instance,
                                             const ReductionLayout& layout,
                                             const Permutation& pi);

// Smallest-first listing of an order.
Word Ord(const LinearOrder& order);
// Elements of `set` in increasing order, as a word over {1..n}.
Word Enc(const std::vector<int>& set, int n);

// LCP -> word: Enc(~H_1) Ord(<_1)^R Enc(~H_2) ... Ord(<_{n-1})^R Enc(~H_n).
// pi solves the instance iff pi is not a subsequence of the result. Rejects
// instances with free gaps.
absl::StatusOr<Word> LcpToWord(const LcpInstance& instance);

// 3-SAT -> word: satisfiable iff the word is not universal.
SatWordReduction SatToWord(const CnfFormula& formula);

// Sidecar text describing a layout, one gadget per line.
std::string SerializeLayout(const ReductionLayout& layout);
absl::StatusOr<ReductionLayout> ParseLayout(std::string_view text);

}  // namespace permuniv

#endif  // PERMUNIV_REDUCTIONS_H_
