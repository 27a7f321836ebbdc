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

#include "absl/strings/str_cat.h"
#include "permuniv/reductions.h"
#include "text_lines.h"

namespace permuniv {

using internal::LineError;
using internal::ParseInteger;
using internal::TextLines;
using internal::Tokens;

// layout 1
// formula <m> <d>
// p <p>
// n <n>
// cell <clause> <slot> <var> <negated> <occurrence> <mem> <f> <t>
// clause <i> <position>
// equality <cell a> <cell b> <copy a> <copy b> <comp1> <comp2>
// balancing <position>
// dummy <position> <value>
std::string SerializeLayout(const ReductionLayout& layout) {
  std::string out = "layout 1\n";
  absl::StrAppend(&out, "formula ", layout.formula.num_variables, " ",
                  layout.formula.num_clauses(), "\n");
  absl::StrAppend(&out, "p ", layout.p, "\n", "n ", layout.n, "\n");
  for (const LiteralCell& c : layout.cells) {
    absl::StrAppend(&out, "cell ", c.clause, " ", c.slot, " ",
                    c.literal.variable, " ", c.literal.negated ? 1 : 0, " ",
                    c.occurrence, " ", c.mem, " ", c.f, " ", c.t, "\n");
  }
  for (size_t i = 0; i < layout.clause_positions.size(); ++i) {
    absl::StrAppend(&out, "clause ", i + 1, " ", layout.clause_positions[i],
                    "\n");
  }
  for (const EqualityGadget& g : layout.equalities) {
    absl::StrAppend(&out, "equality ", g.first + 1, " ", g.second + 1, " ",
                    g.first_copy, " ", g.second_copy, " ", g.comp1, " ",
                    g.comp2, "\n");
  }
  for (int pos : layout.balancing_positions) {
    absl::StrAppend(&out, "balancing ", pos, "\n");
  }
  for (const DummySlot& d : layout.dummies) {
    absl::StrAppend(&out, "dummy ", d.position, " ", d.value, "\n");
  }
  return out;
}

absl::StatusOr<ReductionLayout> ParseLayout(std::string_view text) {
  TextLines lines(text);
  if (lines.done() || Tokens(lines.Peek().text) !=
                          std::vector<std::string_view>{"layout", "1"}) {
    return LineError(lines.done() ? 1 : lines.Peek().number,
                     "expected 'layout 1' header");
  }
  lines.Take();

  ReductionLayout layout;
  int m = 0;
  int d = 0;
  while (!lines.done()) {
    const auto line = lines.Take();
    const auto tokens = Tokens(line.text);
    std::vector<int> v;
    for (size_t i = 1; i < tokens.size(); ++i) {
      auto x = ParseInteger(tokens[i]);
      if (!x.ok()) return LineError(line.number, x.status().message());
      v.push_back(static_cast<int>(*x));
    }
    auto arity = [&](size_t k) -> absl::Status {
      if (v.size() != k) {
        return LineError(line.number, "'", tokens[0], "' takes ", k,
                         " integers, got ", v.size());
      }
      return absl::OkStatus();
    };
    const std::string_view key = tokens[0];
    absl::Status s;
    if (key == "formula") {
      if (s = arity(2); s.ok()) {
        m = v[0];
        d = v[1];
      }
    } else if (key == "p") {
      if (s = arity(1); s.ok()) layout.p = v[0];
    } else if (key == "n") {
      if (s = arity(1); s.ok()) layout.n = v[0];
    } else if (key == "cell") {
      if (s = arity(8); s.ok()) {
        layout.cells.push_back(
            {v[0], v[1], {v[2], v[3] != 0}, v[4], v[5], v[6], v[7]});
      }
    } else if (key == "clause") {
      if (s = arity(2); s.ok()) {
        if (v[0] != static_cast<int>(layout.clause_positions.size()) + 1) {
          return LineError(line.number, "clause lines must be in order");
        }
        layout.clause_positions.push_back(v[1]);
      }
    } else if (key == "equality") {
      if (s = arity(6); s.ok()) {
        layout.equalities.push_back(
            {v[0] - 1, v[1] - 1, v[2], v[3], v[4], v[5]});
      }
    } else if (key == "balancing") {
      if (s = arity(1); s.ok()) layout.balancing_positions.push_back(v[0]);
    } else if (key == "dummy") {
      if (s = arity(2); s.ok()) layout.dummies.push_back({v[0], v[1]});
    } else {
      return LineError(line.number, "unknown layout entry '", key, "'");
    }
    if (!s.ok()) return s;
  }

  if (static_cast<int>(layout.cells.size()) != 3 * d) {
    return absl::InvalidArgumentError(absl::StrCat(
        "layout lists ", layout.cells.size(), " cells for ", d, " clauses"));
  }
  for (const EqualityGadget& g : layout.equalities) {
    if (g.first < 0 || g.second < 0 ||
        g.first >= static_cast<int>(layout.cells.size()) ||
        g.second >= static_cast<int>(layout.cells.size())) {
      return absl::InvalidArgumentError("equality refers to a missing cell");
    }
  }
  std::vector<Clause> clauses(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < 3; ++j) clauses[i][j] = layout.cells[3 * i + j].literal;
  }
  auto formula = CnfFormula::Create(m, std::move(clauses));
  if (!formula.ok()) return formula.status();
  layout.formula = *std::move(formula);
  return layout;
}

}  // namespace permuniv
