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

#ifndef PERMUNIV_CNF_H_
#define PERMUNIV_CNF_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace permuniv {

struct Literal {
  int variable = 1;  // 1-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

// Truth values of variables 1..m, stored 0-based.
using Assignment = std::vector<bool>;

// A 3-CNF formula: every clause has exactly three literals. Literals within a
// clause may repeat a variable.
struct CnfFormula {
  int num_variables = 0;
  std::vector<Clause> clauses;

  static absl::StatusOr<CnfFormula> Create(int num_variables,
                                           std::vector<Clause> clauses);

  int num_clauses() const { return static_cast<int>(clauses.size()); }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

inline bool LiteralValue(const Literal& lit, const Assignment& a) {
  return a[lit.variable - 1] != lit.negated;
}

bool ClauseSatisfied(const Clause& clause, const Assignment& a);
// Index (0-based) of the first clause `a` falsifies, if any.
std::optional<int> FirstViolatedClause(const CnfFormula& formula,
                                       const Assignment& a);
bool Satisfies(const CnfFormula& formula, const Assignment& a);

// Tries all 2^m assignments in binary counting order (variable 1 is the low
// bit) and returns the first satisfying one.
std::optional<Assignment> BruteForceSat(const CnfFormula& formula);

// DIMACS: optional 'c' comment lines, a 'p cnf <m> <d>' header, then d
// zero-terminated clauses. Clauses with a literal count other than three are
// rejected.
absl::StatusOr<CnfFormula> ParseDimacs(std::string_view text);
std::string SerializeDimacs(const CnfFormula& formula);

}  // namespace permuniv

#endif  // PERMUNIV_CNF_H_
