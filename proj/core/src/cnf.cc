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

#include "permuniv/cnf.h"

#include <cstdlib>

#include "absl/strings/str_cat.h"
#include "text_lines.h"

namespace permuniv {

using internal::LineError;
using internal::ParseInteger;
using internal::TextLines;
using internal::Tokens;

absl::StatusOr<CnfFormula> CnfFormula::Create(int num_variables,
                                              std::vector<Clause> clauses) {
  if (num_variables < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("variable count must be >= 1, got ", num_variables));
  }
  if (clauses.empty()) {
    return absl::InvalidArgumentError("formula needs at least one clause");
  }
  for (size_t i = 0; i < clauses.size(); ++i) {
    for (const Literal& lit : clauses[i]) {
      if (lit.variable < 1 || lit.variable > num_variables) {
        return absl::InvalidArgumentError(
            absl::StrCat("clause ", i + 1, " mentions variable ", lit.variable,
                         " outside [1, ", num_variables, "]"));
      }
    }
  }
  return CnfFormula{num_variables, std::move(clauses)};
}

bool ClauseSatisfied(const Clause& clause, const Assignment& a) {
  for (const Literal& lit : clause) {
    if (LiteralValue(lit, a)) return true;
  }
  return false;
}

std::optional<int> FirstViolatedClause(const CnfFormula& formula,
                                       const Assignment& a) {
  for (int i = 0; i < formula.num_clauses(); ++i) {
    if (!ClauseSatisfied(formula.clauses[i], a)) return i;
  }
  return std::nullopt;
}

bool Satisfies(const CnfFormula& formula, const Assignment& a) {
  return static_cast<int>(a.size()) == formula.num_variables &&
         !FirstViolatedClause(formula, a).has_value();
}

std::optional<Assignment> BruteForceSat(const CnfFormula& formula) {
  const int m = formula.num_variables;
  Assignment a(m, false);
  for (unsigned long long bits = 0; bits < (1ULL << m); ++bits) {
    for (int v = 0; v < m; ++v) a[v] = (bits >> v) & 1;
    if (Satisfies(formula, a)) return a;
  }
  return std::nullopt;
}

absl::StatusOr<CnfFormula> ParseDimacs(std::string_view text) {
  TextLines lines(text);
  long long m = -1;
  long long d = -1;
  int header_line = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  int pending_line = 0;

  while (!lines.done()) {
    const auto line = lines.Take();
    if (line.text.front() == 'c') continue;
    if (line.text.front() == '%') break;
    const auto tokens = Tokens(line.text);
    if (tokens[0] == "p") {
      if (m >= 0) return LineError(line.number, "duplicate 'p cnf' header");
      if (tokens.size() != 4 || tokens[1] != "cnf") {
        return LineError(line.number, "expected 'p cnf <vars> <clauses>'");
      }
      auto vars = ParseInteger(tokens[2]);
      auto count = ParseInteger(tokens[3]);
      if (!vars.ok() || !count.ok() || *vars < 1 || *count < 1) {
        return LineError(line.number,
                         "header counts must be positive integers");
      }
      m = *vars;
      d = *count;
      header_line = line.number;
      continue;
    }
    if (m < 0) return LineError(line.number, "clause before 'p cnf' header");
    for (std::string_view tok : tokens) {
      auto value = ParseInteger(tok);
      if (!value.ok()) return LineError(line.number, value.status().message());
      if (pending.empty()) pending_line = line.number;
      if (*value == 0) {
        const int index = static_cast<int>(clauses.size()) + 1;
        if (pending.size() != 3) {
          return LineError(pending_line, "clause ", index, " has ",
                           pending.size(), " literals; exactly 3 required");
        }
        clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (std::llabs(*value) > m) {
        return LineError(line.number, "literal ", *value,
                         " names a variable outside [1, ", m, "]");
      }
      pending.push_back(
          {static_cast<int>(std::llabs(*value)), *value < 0});
    }
  }
  if (m < 0) return LineError(lines.end_line(), "missing 'p cnf' header");
  if (!pending.empty()) {
    return LineError(pending_line, "clause ", clauses.size() + 1,
                     " is not terminated by 0");
  }
  if (static_cast<long long>(clauses.size()) != d) {
    return LineError(header_line, "header declares ", d, " clauses, found ",
                     clauses.size());
  }
  return CnfFormula::Create(static_cast<int>(m), std::move(clauses));
}

std::string SerializeDimacs(const CnfFormula& formula) {
  std::string out = absl::StrCat("p cnf ", formula.num_variables, " ",
                                 formula.num_clauses(), "\n");
  for (const Clause& clause : formula.clauses) {
    for (const Literal& lit : clause) {
      absl::StrAppend(&out, lit.negated ? -lit.variable : lit.variable, " ");
    }
    out += "0\n";
  }
  return out;
}

}  // namespace permuniv
