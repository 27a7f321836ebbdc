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

#include "permuniv/reductions.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace permuniv {
namespace {

// Gadgets before free gaps are closed. Positions: memory cells, then clause
// positions, then equality pairs, then balancing. Gaps outside a memory chain
// are free.
SatLcpReduction BuildCore(const CnfFormula& formula) {
  ReductionLayout layout;
  layout.formula = formula;

  std::vector<int> occurrences(formula.num_variables + 1, 0);
  for (int i = 0; i < formula.num_clauses(); ++i) {
    for (int j = 0; j < 3; ++j) {
      LiteralCell cell;
      cell.clause = i + 1;
      cell.slot = j + 1;
      cell.literal = formula.clauses[i][j];
      cell.occurrence = ++occurrences[cell.literal.variable];
      layout.cells.push_back(cell);
    }
  }
  const int p = *std::max_element(occurrences.begin(), occurrences.end());
  layout.p = p;
  const int copies = p + 1;
  const int num_cells = static_cast<int>(layout.cells.size());

  // Values: per cell an f block then a t block, cells in position order, so
  // every value of an earlier cell is below every value of a later one.
  for (int c = 0; c < num_cells; ++c) {
    LiteralCell& cell = layout.cells[c];
    cell.mem = c * copies + 1;
    cell.f = 2 * copies * c + 1;
    cell.t = cell.f + copies;
  }
  const int num_values = 2 * copies * num_cells;

  std::vector<std::vector<int>> allowed;
  for (const LiteralCell& cell : layout.cells) {
    for (int x = 0; x <= p; ++x) allowed.push_back({cell.f + x, cell.t + x});
  }
  for (int i = 0; i < formula.num_clauses(); ++i) {
    layout.clause_positions.push_back(static_cast<int>(allowed.size()) + 1);
    const LiteralCell* cells = &layout.cells[3 * i];
    allowed.push_back({cells[0].f, cells[1].f, cells[2].f});
  }
  for (int a = 0; a < num_cells; ++a) {
    for (int b = a + 1; b < num_cells; ++b) {
      const LiteralCell& first = layout.cells[a];
      const LiteralCell& second = layout.cells[b];
      if (first.literal.variable != second.literal.variable) continue;
      EqualityGadget gadget;
      gadget.first = a;
      gadget.second = b;
      gadget.first_copy = second.occurrence;
      gadget.second_copy = first.occurrence;
      const int fa = first.f + gadget.first_copy;
      const int ta = first.t + gadget.first_copy;
      const int fb = second.f + gadget.second_copy;
      const int tb = second.t + gadget.second_copy;
      gadget.comp1 = static_cast<int>(allowed.size()) + 1;
      gadget.comp2 = gadget.comp1 + 1;
      if (first.literal.negated == second.literal.negated) {
        allowed.push_back({ta, fb});
        allowed.push_back({fa, tb});
      } else {
        allowed.push_back({ta, tb});
        allowed.push_back({fa, fb});
      }
      layout.equalities.push_back(gadget);
    }
  }
  // There are always at least as many values as gadget positions.
  std::vector<int> everything(num_values);
  for (int v = 0; v < num_values; ++v) everything[v] = v + 1;
  while (static_cast<int>(allowed.size()) < num_values) {
    layout.balancing_positions.push_back(static_cast<int>(allowed.size()) + 1);
    allowed.push_back(everything);
  }

  std::vector<std::optional<LinearOrder>> orders(num_values - 1);
  for (const LiteralCell& cell : layout.cells) {
    for (int x = 0; x < p; ++x) {
      orders[cell.mem + x - 1] = *LinearOrder::FromChain(
          num_values, {cell.f + x, cell.f + x + 1, cell.t + x, cell.t + x + 1});
    }
  }
  layout.n = num_values;
  auto instance =
      LcpInstance::Create(num_values, std::move(allowed), std::move(orders));
  return {*std::move(instance), std::move(layout)};
}

}  // namespace

SatLcpReduction SatToLcp(const CnfFormula& formula) {
  SatLcpReduction core = BuildCore(formula);
  const LcpInstance& open = core.instance;

  // A dummy lands right after every position that precedes a free gap, so an
  // old position moves right by the number of free gaps before it.
  std::vector<int> shift(open.n + 1, 0);
  for (int old = 2; old <= open.n; ++old) {
    shift[old] = shift[old - 1] + (open.Order(old - 1) ? 0 : 1);
  }
  auto moved = [&](int old) { return old + shift[old]; };

  ReductionLayout layout = core.layout;
  for (LiteralCell& cell : layout.cells) cell.mem = moved(cell.mem);
  for (int& pos : layout.clause_positions) pos = moved(pos);
  for (EqualityGadget& g : layout.equalities) {
    g.comp1 = moved(g.comp1);
    g.comp2 = moved(g.comp2);
  }
  for (int& pos : layout.balancing_positions) pos = moved(pos);
  int dummy_value = open.n;
  for (int g = 1; g < open.n; ++g) {
    if (!open.Order(g)) layout.dummies.push_back({moved(g) + 1, ++dummy_value});
  }

  LcpInstance closed = CompleteFreeOrders(open);
  layout.n = closed.n;
  return {std::move(closed), std::move(layout)};
}

SatPipReduction PrefixIncreasingNormalForm(const CnfFormula& formula) {
  SatLcpReduction core = BuildCore(formula);
  const int prefix = static_cast<int>(core.layout.cells.size()) *
                     (core.layout.p + 1);
  auto pip = PipInstance::Create(core.instance.n, core.instance.allowed,
                                 std::min(prefix - 1, core.instance.n - 1));
  return {*std::move(pip), std::move(core.layout)};
}

absl::StatusOr<Permutation> EmbedAssignment(const LcpInstance& instance,
                                            const ReductionLayout& layout,
                                            const Assignment& assignment) {
  const CnfFormula& formula = layout.formula;
  if (static_cast<int>(assignment.size()) != formula.num_variables) {
    return absl::InvalidArgumentError(
        absl::StrCat("assignment has ", assignment.size(),
                     " values, formula has ", formula.num_variables,
                     " variables"));
  }
  if (auto bad = FirstViolatedClause(formula, assignment)) {
    return absl::InvalidArgumentError(
        absl::StrCat("assignment falsifies clause ", *bad + 1));
  }
  if (instance.n != layout.n) {
    return absl::InvalidArgumentError("layout does not match the instance");
  }

  std::vector<int> value_at(instance.n + 1, 0);
  std::vector<bool> used(instance.n + 1, false);
  auto place = [&](int position, int value) {
    value_at[position] = value;
    used[value] = true;
  };

  for (const LiteralCell& cell : layout.cells) {
    const int base = LiteralValue(cell.literal, assignment) ? cell.t : cell.f;
    for (int x = 0; x <= layout.p; ++x) place(cell.mem + x, base + x);
  }
  for (int i = 0; i < formula.num_clauses(); ++i) {
    for (int j = 0; j < 3; ++j) {
      const LiteralCell& cell = layout.cells[3 * i + j];
      if (LiteralValue(cell.literal, assignment)) {
        place(layout.clause_positions[i], cell.f);
        break;
      }
    }
  }
  // Exactly one value of each comparison position is still free when the two
  // occurrences agree.
  for (const EqualityGadget& g : layout.equalities) {
    for (int position : {g.comp1, g.comp2}) {
      const auto& options = instance.Allowed(position);
      auto it = std::find_if(options.begin(), options.end(),
                             [&](int v) { return !used[v]; });
      if (it == options.end()) {
        return absl::InternalError(
            absl::StrCat("equality position ", position, " has no free value"));
      }
      place(position, *it);
    }
  }
  for (const DummySlot& d : layout.dummies) place(d.position, d.value);
  int next_free = 1;
  for (int position : layout.balancing_positions) {
    while (used[next_free]) ++next_free;
    place(position, next_free);
  }

  auto pi = Permutation::Create(
      std::vector<int>(value_at.begin() + 1, value_at.end()));
  if (!pi.ok()) return pi.status();
  if (!CheckSolution(instance, *pi)) {
    return absl::InternalError("embedded permutation violates the instance");
  }
  return pi;
}

CellReading ReadCell(const LiteralCell& cell, int p, const Permutation& pi) {
  bool all_t = true;
  bool all_f = true;
  for (int x = 0; x <= p; ++x) {
    const int v = pi(cell.mem + x);
    all_t = all_t && v == cell.t + x;
    all_f = all_f && v == cell.f + x;
  }
  if (all_t) return CellReading::kTrue;
  if (all_f) return CellReading::kFalse;
  return CellReading::kUndecided;
}

absl::StatusOr<Assignment> ExtractAssignment(const LcpInstance& instance,
                                             const ReductionLayout& layout,
                                             const Permutation& pi) {
  if (!CheckSolution(instance, pi)) {
    return absl::InvalidArgumentError(
        "permutation does not solve the LCP instance");
  }
  const CnfFormula& formula = layout.formula;
  Assignment assignment(formula.num_variables, false);
  std::vector<bool> decided(formula.num_variables, false);
  for (const LiteralCell& cell : layout.cells) {
    const CellReading reading = ReadCell(cell, layout.p, pi);
    const int var = cell.literal.variable - 1;
    if (reading == CellReading::kUndecided || decided[var]) continue;
    decided[var] = true;
    assignment[var] = (reading == CellReading::kTrue) != cell.literal.negated;
  }
  if (auto bad = FirstViolatedClause(formula, assignment)) {
    return absl::InternalError(absl::StrCat(
        "recovered assignment falsifies clause ", *bad + 1));
  }
  return assignment;
}

Word Ord(const LinearOrder& order) {
  return Word{std::max(1, order.size()), order.order_word()};
}

Word Enc(const std::vector<int>& set, int n) {
  Word w{n, set};
  std::sort(w.symbols.begin(), w.symbols.end());
  return w;
}

absl::StatusOr<Word> LcpToWord(const LcpInstance& instance) {
  const int n = instance.n;
  if (const int free = instance.FreeGapCount(); free > 0) {
    return absl::FailedPreconditionError(absl::StrCat(
        "instance has ", free, " free gaps; complete the orders first"));
  }
  Word w{n, {}};
  auto append_complement = [&](int position) {
    std::vector<bool> in(n + 1, false);
    for (int v : instance.Allowed(position)) in[v] = true;
    std::vector<int> missing;
    for (int v = 1; v <= n; ++v) {
      if (!in[v]) missing.push_back(v);
    }
    const Word enc = Enc(missing, n);
    w.symbols.insert(w.symbols.end(), enc.symbols.begin(), enc.symbols.end());
  };
  for (int i = 1; i <= n; ++i) {
    append_complement(i);
    if (i == n) break;
    const Word ord = Reverse(Ord(*instance.Order(i)));
    w.symbols.insert(w.symbols.end(), ord.symbols.begin(), ord.symbols.end());
  }
  return w;
}

SatWordReduction SatToWord(const CnfFormula& formula) {
  SatLcpReduction lcp = SatToLcp(formula);
  Word word = *LcpToWord(lcp.instance);
  return {std::move(word), std::move(lcp)};
}

}  // namespace permuniv
