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

// Acceptance suite. One line per criterion; exits 1 if any criterion
// fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "cli.h"
#include "oracles.h"
#include "permuniv/cnf.h"
#include "permuniv/generators.h"
#include "permuniv/lcp.h"
#include "permuniv/matching.h"
#include "permuniv/min_search.h"
#include "permuniv/reductions.h"
#include "permuniv/universality.h"
#include "permuniv/words.h"

namespace permuniv {
namespace {

// Thresholds.
constexpr double kSevenLetterCheckMs = 10.0;
constexpr double kMinimalityMs = 1000.0;
constexpr double kFourBudgetMs = 30.0 * 60 * 1000;  // 30 minutes
constexpr double kWordConstructionMs = 30000.0;
constexpr int kDeciderWords = 1000;
constexpr int kWordConstructionInstances = 200;
constexpr int kRandomFormulas = 100;
constexpr int kMatchingInstances = 500;

using Clock = std::chrono::steady_clock;

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

// Plain greedy: does `text` contain every ordering in `perms`?
bool ContainsAll(const std::vector<std::vector<int>>& perms,
                 const std::vector<int>& text) {
  for (const auto& p : perms) {
    size_t at = 0;
    for (int c : text) {
      if (at < p.size() && p[at] == c) ++at;
    }
    if (at < p.size()) return false;
  }
  return true;
}

std::vector<std::vector<int>> AllPermutations(int n) {
  std::vector<std::vector<int>> out;
  testing::ForEachPermutation(n, [&](const std::vector<int>& p) { out.push_back(p); });
  return out;
}

// No word of length `length` over {1..n} is universal, by full enumeration.
bool NoneUniversal(int n, int length) {
  const auto perms = AllPermutations(n);
  bool found = false;
  testing::ForEachWord(n, length, [&](const std::vector<int>& w) {
    found = ContainsAll(perms, w);
    return !found;
  });
  return !found;
}

Outcome SevenLetterCheck() {
  Outcome o;
  const std::string path = "/tmp/permuniv_acceptance_seven.word";
  std::ofstream(path) << "word 3 7\n1 2 3 1 2 1 3\n";
  const auto start = Clock::now();
  const cli::RunResult r = cli::Run({"check", path});
  const Word t{3, {1, 2, 3, 1, 2, 1, 3}};
  int embedded = 0;
  testing::ForEachPermutation(3, [&](const std::vector<int>& p) {
    embedded += IsSubsequence(p, t.symbols);
  });
  const double ms = MsSince(start);
  o.Require(r.exit_code == cli::kPositive, "check did not exit 0");
  o.Require(r.out == "universal n=3 |T|=7\n", "unexpected report: " + r.out);
  o.Require(embedded == 6, absl::StrCat(embedded, "/6 permutations embedded"));
  o.Require(ms < kSevenLetterCheckMs, absl::StrFormat("%.2f ms", ms));
  if (o.pass) o.detail = absl::StrFormat("%.2f ms < %.0f ms", ms, kSevenLetterCheckMs);
  return o;
}

Outcome Minimality() {
  Outcome o;
  const auto start = Clock::now();
  const long long universal6 = testing::CountUniversalWords(3, 6);
  auto f3 = MinUniversalLength(3, 9);
  const double ms = MsSince(start);
  o.Require(universal6 == 0, absl::StrCat(universal6, " universal words of length 6"));
  o.Require(f3.ok() && f3->length == 7, "min_universal_length(3) != 7");
  if (f3.ok()) {
    o.Require(*IsUniversal(f3->example, 3) &&
                  ContainsAll(AllPermutations(3), f3->example.symbols),
              "example is not universal");
  }
  o.Require(ms < kMinimalityMs, absl::StrFormat("%.1f ms", ms));
  if (o.pass) {
    o.detail = absl::StrFormat("729 words scanned, f(3)=7 via %s, %.1f ms < %.0f ms",
                               JoinInts(f3->example.symbols), ms, kMinimalityMs);
  }
  return o;
}

Outcome FValues() {
  Outcome o;
  std::string times;
  for (const auto& [n, expected] : {std::pair{1, 1}, {2, 3}, {4, 12}}) {
    const auto start = Clock::now();
    MinSearchOptions options;
    options.jobs = n == 4 ? 4 : 1;
    auto f = MinUniversalLength(n, expected + 2, options);
    const double search_ms = MsSince(start);
    o.Require(f.ok() && f->length == expected, absl::StrCat("f(", n, ") wrong"));
    if (!f.ok()) continue;
    o.Require(ContainsAll(AllPermutations(n), f->example.symbols),
              absl::StrCat("f(", n, ") example not universal"));
    const auto scan = Clock::now();
    o.Require(NoneUniversal(n, expected - 1),
              absl::StrCat("a universal word of length ", expected - 1, " exists"));
    const double scan_ms = MsSince(scan);
    o.Require(search_ms + scan_ms < kFourBudgetMs, "over budget");
    absl::StrAppendFormat(&times, "%sf(%d)=%d search %.0f ms scan %.0f ms",
                          times.empty() ? "" : "; ", n, f->length, search_ms,
                          scan_ms);
  }
  if (o.pass) o.detail = times;
  return o;
}

Outcome DeciderExactness() {
  Outcome o;
  Rng rng(20260101);
  int negatives = 0;
  for (int trial = 0; trial < kDeciderWords && o.pass; ++trial) {
    const int n = rng.Uniform(2, 6);
    const Word t = RandomWord(n, rng.Uniform(0, 3 * n), rng);
    auto verdict = FindMissingPermutation(t, n);
    const bool oracle = ContainsAll(AllPermutations(n), t.symbols);
    o.Require(verdict.ok() && verdict->universal == oracle,
              "disagreement on " + JoinInts(t.symbols));
    if (verdict.ok() && !verdict->universal) {
      ++negatives;
      o.Require(verdict->witness &&
                    !testing::EmbeddingExists(verdict->witness->values(), t.symbols),
                "witness embeds in " + JoinInts(t.symbols));
    }
  }
  if (o.pass) {
    o.detail = absl::StrCat(kDeciderWords, " words, ", negatives,
                            " negative verdicts with valid witnesses");
  }
  return o;
}

Outcome WordConstructionProperty() {
  Outcome o;
  Rng rng(5);
  const auto start = Clock::now();
  long long pairs = 0;
  int made = 0;
  while (made < kWordConstructionInstances && o.pass) {
    const LcpInstance inst = CompleteFreeOrders(RandomLcp(rng.Uniform(1, 6), rng));
    if (inst.n > 6) continue;
    ++made;
    auto w = LcpToWord(inst);
    o.Require(w.ok(), "lcp_to_word failed");
    if (!w.ok()) break;
    testing::ForEachPermutation(inst.n, [&](const std::vector<int>& p) {
      const Permutation pi = *Permutation::Create(p);
      ++pairs;
      o.Require(CheckSolution(inst, pi) != testing::EmbeddingExists(p, w->symbols),
                "equivalence fails on " + SerializeLcp(inst));
    });
    o.Require(testing::AllWordsEmbedded(*w, inst.n, inst.n - 1),
              "W misses a word of length n-1");
  }
  const double ms = MsSince(start);
  o.Require(ms < kWordConstructionMs, absl::StrFormat("%.0f ms", ms));
  if (o.pass) {
    o.detail = absl::StrFormat("%d instances, %d (instance, pi) pairs, %.0f ms < %.0f ms",
                               made, pairs, ms, kWordConstructionMs);
  }
  return o;
}

// The criterion-6 formula set.
std::vector<CnfFormula> ReductionFormulas() {
  std::vector<CnfFormula> all = testing::FormulaGrid(3, 2);
  Rng rng(66);
  for (int i = 0; i < kRandomFormulas; ++i) {
    const int m = rng.Uniform(1, 4);
    all.push_back(RandomCnf(m, rng.Uniform(1, 3), rng));
  }
  return all;
}

Outcome SatToLcpProperty() {
  Outcome o;
  int sat = 0;
  int round_trips = 0;
  const auto formulas = ReductionFormulas();
  for (const CnfFormula& f : formulas) {
    if (!o.pass) break;
    const auto models = testing::AllModels(f);
    const SatLcpReduction r = SatToLcp(f);
    const auto pi = Solve(r.instance);
    o.Require(pi.has_value() == !models.empty(),
              "satisfiability differs on\n" + SerializeDimacs(f));
    if (!pi) continue;
    ++sat;
    auto back = ExtractAssignment(r.instance, r.layout, *pi);
    o.Require(back.ok() && Satisfies(f, *back),
              "extracted assignment fails\n" + SerializeDimacs(f));
    for (const Assignment& a : models) {
      auto e = EmbedAssignment(r.instance, r.layout, a);
      o.Require(e.ok() && CheckSolution(r.instance, *e),
                "embedding fails\n" + SerializeDimacs(f));
      ++round_trips;
    }
  }
  if (o.pass) {
    o.detail = absl::StrCat(formulas.size(), " formulas (", sat, " satisfiable), ",
                            round_trips, " embeddings checked");
  }
  return o;
}

Outcome NpDirection() {
  Outcome o;
  int checked = 0;
  long long letters = 0;
  for (const CnfFormula& f : ReductionFormulas()) {
    if (!o.pass) break;
    const SatWordReduction r = SatToWord(f);
    const auto pi = Solve(r.lcp.instance);
    if (!pi) continue;
    o.Require(!IsSubsequence(*pi, r.word),
              "solution embeds in W for\n" + SerializeDimacs(f));
    ++checked;
    letters += r.word.length();
  }
  if (o.pass) {
    o.detail = absl::StrCat(checked, " satisfiable formulas, witness missing from W (",
                            letters / std::max(checked, 1), " letters on average)");
  }
  return o;
}

Outcome MatchingExactness() {
  Outcome o;
  Rng rng(88);
  for (int trial = 0; trial < kMatchingInstances && o.pass; ++trial) {
    const MatchingInstance inst = RandomMatching(rng.Uniform(1, 6), rng);
    auto slow = BruteForceMatchings(inst);
    const auto fast = Solve(inst);
    o.Require(slow.ok() && slow->has_value() == fast.has_value(),
              "disagreement on\n" + SerializeMatching(inst));
    if (fast) o.Require(Verify(inst, *fast), "invalid matching returned");
  }
  long long grid = 0;
  for (int n = 1; n <= 4 && o.pass; ++n) {
    const int subsets = 1 << n;
    int total = 1;
    for (int i = 0; i < n; ++i) total *= subsets;
    for (int code = 0; code < total && o.pass; ++code) {
      std::vector<std::vector<int>> allowed(n);
      for (int i = 0, rest = code; i < n; ++i, rest /= subsets) {
        for (int v = 1; v <= n; ++v) {
          if ((rest % subsets) >> (v - 1) & 1) allowed[i].push_back(v);
        }
      }
      for (int k = 0; k < n; ++k) {
        const PipInstance pip = *PipInstance::Create(n, allowed, k);
        bool feasible = false;
        testing::ForEachPermutation(n, [&](const std::vector<int>& p) {
          bool ok = true;
          for (int i = 0; i < n; ++i) {
            ok = ok && std::binary_search(allowed[i].begin(), allowed[i].end(), p[i]);
          }
          for (int i = 0; i < k; ++i) ok = ok && p[i] < p[i + 1];
          feasible = feasible || ok;
        });
        o.Require(Solve(PipToMatching(pip)).has_value() == feasible,
                  "pip2match changes solvability of\n" + SerializePip(pip));
        ++grid;
      }
    }
  }
  if (o.pass) {
    o.detail = absl::StrCat(kMatchingInstances, " random instances, ", grid,
                            " PIP instances");
  }
  return o;
}

Outcome NormalForm() {
  Outcome o;
  int count = 0;
  for (const CnfFormula& f : ReductionFormulas()) {
    if (!o.pass) break;
    const SatPipReduction nf = PrefixIncreasingNormalForm(f);
    const LcpInstance as_lcp = PipToLcp(nf.instance);
    const int prefix = static_cast<int>(nf.layout.cells.size()) * (nf.layout.p + 1);
    o.Require(nf.instance.k == prefix - 1, "constraint prefix has wrong length");
    for (int g = 1; g < as_lcp.n; ++g) {
      const auto& order = as_lcp.Order(g);
      o.Require(g <= nf.instance.k ? order && order->IsInteger() : !order,
                "constraints are not an integer-monotone prefix");
    }
    for (const LiteralCell& cell : nf.layout.cells) {
      o.Require(cell.mem + nf.layout.p <= prefix, "memory cell outside prefix");
    }
    o.Require(Solve(as_lcp).has_value() == Solve(SatToLcp(f).instance).has_value(),
              "normal form changes satisfiability of\n" + SerializeDimacs(f));
    ++count;
  }
  if (o.pass) o.detail = absl::StrCat(count, " formulas");
  return o;
}

template <typename T, typename Ser, typename Par>
bool RoundTrips(const T& value, Ser serialize, Par parse) {
  const std::string text = serialize(value);
  auto back = parse(text);
  return back.ok() && *back == value && serialize(*back) == text;
}

Outcome Formats() {
  Outcome o;
  Rng rng(10);
  int checked = 0;
  for (int i = 0; i < 200 && o.pass; ++i) {
    const int n = rng.Uniform(1, 8);
    o.Require(RoundTrips(RandomWord(n, rng.Uniform(0, 30), rng), SerializeWord,
                         ParseWord),
              "word");
    const LcpInstance lcp = RandomLcp(n, rng);
    o.Require(RoundTrips(lcp, SerializeLcp, ParseLcp), "lcp");
    o.Require(RoundTrips(CompleteFreeOrders(lcp), SerializeLcp, ParseLcp),
              "completed lcp");
    o.Require(RoundTrips(RandomPip(n, rng), SerializePip, ParsePip), "pip");
    const CnfFormula f = RandomCnf(rng.Uniform(1, 4), rng.Uniform(1, 3), rng);
    o.Require(RoundTrips(f, SerializeDimacs, ParseDimacs), "dimacs");
    o.Require(RoundTrips(SatToLcp(f).layout, SerializeLayout, ParseLayout), "layout");
    const MatchingInstance m = RandomMatching(n, rng);
    o.Require(RoundTrips(m, SerializeMatching, ParseMatching), "matching");
    o.Require(RoundTrips(Matching{rng.Shuffled(n)}, SerializeMatchingSolution,
                         [n](std::string_view s) {
                           return ParseMatchingSolution(s, n);
                         }),
              "matching solution");
    checked += 8;
  }
  if (o.pass) o.detail = absl::StrCat(checked, " values across all formats");
  return o;
}

}  // namespace
}  // namespace permuniv

int main() {
  using permuniv::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 2 3 1 2 1 3 is universal", permuniv::SevenLetterCheck},
      {"length 7 is minimal for n=3", permuniv::Minimality},
      {"f(1), f(2), f(4)", permuniv::FValues},
      {"decider exactness", permuniv::DeciderExactness},
      {"word construction equivalence", permuniv::WordConstructionProperty},
      {"sat to lcp equivalence and witnesses", permuniv::SatToLcpProperty},
      {"sat to word witness", permuniv::NpDirection},
      {"matching exactness", permuniv::MatchingExactness},
      {"prefix increasing normal form", permuniv::NormalForm},
      {"format round trips", permuniv::Formats},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    failures += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
