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

#include "cli.h"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>
#include <utility>

#include "CLI11.hpp"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "permuniv/cnf.h"
#include "permuniv/generators.h"
#include "permuniv/lcp.h"
#include "permuniv/matching.h"
#include "permuniv/min_search.h"
#include "permuniv/reductions.h"
#include "permuniv/universality.h"
#include "permuniv/words.h"

namespace permuniv::cli {
namespace {

constexpr char kGenHelp[] =
    "Generators (mt19937-64, --seed defaults to 0):\n"
    "  word   symbols uniform on 1..n\n"
    "  lcp    each value in each H_i with probability 1/2; each gap free,\n"
    "         integer order or uniform random order with probability 1/3\n"
    "  pip    H_i as for lcp; k uniform on 0..n-1\n"
    "  cnf    literals uniform over the m variables, sign by fair coin\n"
    "  match  each edge present with probability 1/2; |restricted| uniform\n"
    "         on 0..n, a uniform subset of that size";

// Collects the report; `verdict` is what --quiet prints.
class Report {
 public:
  explicit Report(bool quiet) : quiet_(quiet) {}

  template <typename... Args>
  void Line(const Args&... args) {
    if (!quiet_ && !payload_) absl::StrAppend(&result_.out, args..., "\n");
  }
  // A file body sent to stdout. Nothing else is printed after it, so the
  // output stays parseable.
  void Payload(const std::string& text) {
    result_.out += text;
    payload_ = true;
  }

  RunResult Finish(int code, const char* verdict) {
    if (quiet_ && !payload_) absl::StrAppend(&result_.out, verdict, "\n");
    result_.exit_code = code;
    return std::move(result_);
  }

 private:
  bool quiet_;
  bool payload_ = false;
  RunResult result_;
};

RunResult Fail(const std::string& message) {
  RunResult r;
  r.exit_code = kError;
  r.err = absl::StrCat("error: ", message, "\n");
  return r;
}

RunResult Fail(const absl::Status& status) {
  return Fail(std::string(status.message()));
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat(path, ": cannot open"));
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

absl::Status WriteFile(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError(absl::StrCat(path, ": cannot write"));
  out << body;
  if (!out) return absl::DataLossError(absl::StrCat(path, ": write failed"));
  return absl::OkStatus();
}

// Reads and parses a file; parse errors get the path in front.
template <typename T, typename Parser>
absl::StatusOr<T> Load(const std::string& path, Parser parse) {
  auto body = ReadFile(path);
  if (!body.ok()) return body.status();
  absl::StatusOr<T> value = parse(*body);
  if (!value.ok()) {
    return absl::Status(value.status().code(),
                        absl::StrCat(path, ": ", std::string(value.status().message())));
  }
  return value;
}

// Sends a file body either to `path` or, when empty, to stdout.
absl::Status Emit(Report& report, const std::string& path,
                  const std::string& body, const char* what) {
  if (path.empty()) {
    report.Payload(body);
    return absl::OkStatus();
  }
  if (auto s = WriteFile(path, body); !s.ok()) return s;
  report.Line("wrote ", what, " ", path);
  return absl::OkStatus();
}

const std::string& OneInput(const RunConfig& c) { return c.inputs.front(); }

absl::StatusOr<Word> LoadWord(const RunConfig& c) {
  return Load<Word>(OneInput(c), ParseWord);
}

int AlphabetFor(const RunConfig& c, const Word& w) {
  return c.n > 0 ? c.n : w.alphabet_size;
}

UniversalityLimits Limits(const RunConfig& c) {
  UniversalityLimits limits;
  limits.max_frontier_alphabet = c.caps.max_frontier_n;
  limits.max_oracle_alphabet = c.caps.max_oracle_n;
  return limits;
}

// --- universality -------------------------------------------------------

RunResult Check(const RunConfig& c) {
  auto w = LoadWord(c);
  if (!w.ok()) return Fail(w.status());
  const int n = AlphabetFor(c, *w);
  auto universal = IsUniversal(*w, n, Limits(c));
  if (!universal.ok()) return Fail(universal.status());
  Report report(c.quiet);
  const char* verdict = *universal ? "universal" : "not-universal";
  report.Line(verdict, " n=", n, " |T|=", w->length());
  return report.Finish(*universal ? kPositive : kNegative, verdict);
}

RunResult Witness(const RunConfig& c) {
  auto w = LoadWord(c);
  if (!w.ok()) return Fail(w.status());
  const int n = AlphabetFor(c, *w);
  auto verdict = c.oracle ? BruteForceUniversal(*w, n, Limits(c))
                          : FindMissingPermutation(*w, n, Limits(c));
  if (!verdict.ok()) return Fail(verdict.status());
  Report report(c.quiet);
  const char* token = verdict->universal ? "universal" : "not-universal";
  report.Line(token, " n=", n, " |T|=", w->length());
  if (verdict->witness) report.Line("witness: ", verdict->witness->ToString());
  return report.Finish(verdict->universal ? kPositive : kNegative, token);
}

RunResult KCheck(const RunConfig& c) {
  if (c.k < 0) return Fail("kcheck: --k must be given and >= 0");
  auto w = LoadWord(c);
  if (!w.ok()) return Fail(w.status());
  const int n = AlphabetFor(c, *w);
  if (auto s = ValidateWord(Word{n, w->symbols}); !s.ok()) return Fail(s);
  const bool ok = AllWordsUniversal(*w, n, c.k);
  Report report(c.quiet);
  const char* token = ok ? "k-universal" : "not-k-universal";
  report.Line(token, " k=", c.k, " n=", n, " |T|=", w->length());
  report.Line("max-covered-length: ", MaxCoveredWordLength(*w, n));
  return report.Finish(ok ? kPositive : kNegative, token);
}

RunResult MinSearch(const RunConfig& c) {
  MinSearchOptions options;
  options.max_alphabet = c.caps.max_search_n;
  options.jobs = c.jobs;
  auto result = MinUniversalLength(c.n, c.budget, options);
  Report report(c.quiet);
  if (result.status().code() == absl::StatusCode::kNotFound) {
    report.Line("exhausted n=", c.n, " budget=", c.budget);
    return report.Finish(kNegative, "exhausted");
  }
  if (!result.ok()) return Fail(result.status());
  report.Line("f(", c.n, ")=", result->length);
  report.Line("example: ", JoinInts(result->example.symbols));
  report.Line("nodes: ", result->nodes_explored);
  return report.Finish(kPositive, "found");
}

// --- lcp ----------------------------------------------------------------

absl::StatusOr<Permutation> ParsePerm(const std::string& text, int n) {
  auto values = ParseIntList(text);
  if (!values.ok()) return values.status();
  if (static_cast<int>(values->size()) != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "--perm has ", values->size(), " entries, instance has n=", n));
  }
  return Permutation::Create(*std::move(values));
}

RunResult LcpSolve(const RunConfig& c) {
  auto inst = Load<LcpInstance>(OneInput(c), ParseLcp);
  if (!inst.ok()) return Fail(inst.status());
  std::optional<Permutation> pi;
  if (c.oracle) {
    auto slow = BruteForceSolve(*inst, c.caps.max_oracle_n);
    if (!slow.ok()) return Fail(slow.status());
    pi = *slow;
  } else {
    LcpSolveOptions options;
    options.hall_pruning = !c.no_hall;
    pi = Solve(*inst, options);
  }
  Report report(c.quiet);
  if (!pi) {
    report.Line("unsat n=", inst->n);
    return report.Finish(kNegative, "unsat");
  }
  report.Line("sat n=", inst->n);
  report.Line("solution: ", pi->ToString());
  return report.Finish(kPositive, "sat");
}

RunResult LcpCheck(const RunConfig& c) {
  auto inst = Load<LcpInstance>(OneInput(c), ParseLcp);
  if (!inst.ok()) return Fail(inst.status());
  auto pi = ParsePerm(c.perm, inst->n);
  if (!pi.ok()) return Fail(pi.status());
  const bool ok = CheckSolution(*inst, *pi);
  Report report(c.quiet);
  const char* token = ok ? "feasible" : "infeasible";
  report.Line(token, " n=", inst->n);
  return report.Finish(ok ? kPositive : kNegative, token);
}

RunResult LcpComplete(const RunConfig& c) {
  auto inst = Load<LcpInstance>(OneInput(c), ParseLcp);
  if (!inst.ok()) return Fail(inst.status());
  const LcpInstance done = CompleteFreeOrders(*inst);
  Report report(c.quiet);
  if (auto s = Emit(report, c.output, SerializeLcp(done), "lcp"); !s.ok()) {
    return Fail(s);
  }
  report.Line("completed n=", inst->n, " free=", inst->FreeGapCount(),
              " new-n=", done.n);
  return report.Finish(kPositive, "ok");
}

RunResult LcpToWordCmd(const RunConfig& c) {
  auto inst = Load<LcpInstance>(OneInput(c), ParseLcp);
  if (!inst.ok()) return Fail(inst.status());
  const LcpInstance ready = c.complete ? CompleteFreeOrders(*inst) : *inst;
  auto w = LcpToWord(ready);
  if (!w.ok()) {
    return Fail(absl::StrCat(OneInput(c), ": ", std::string(w.status().message()),
                             " (or pass --complete)"));
  }
  Report report(c.quiet);
  if (auto s = Emit(report, c.output, SerializeWord(*w), "word"); !s.ok()) {
    return Fail(s);
  }
  report.Line("word n=", w->alphabet_size, " |W|=", w->length());
  return report.Finish(kPositive, "ok");
}

// --- reductions ---------------------------------------------------------

RunResult Sat2Lcp(const RunConfig& c) {
  auto f = Load<CnfFormula>(OneInput(c), ParseDimacs);
  if (!f.ok()) return Fail(f.status());
  const SatLcpReduction r = SatToLcp(*f);
  Report report(c.quiet);
  if (auto s = Emit(report, c.output, SerializeLcp(r.instance), "lcp"); !s.ok()) {
    return Fail(s);
  }
  if (!c.layout_out.empty()) {
    if (auto s = WriteFile(c.layout_out, SerializeLayout(r.layout)); !s.ok()) {
      return Fail(s);
    }
    report.Line("wrote layout ", c.layout_out);
  }
  report.Line("lcp n=", r.instance.n, " p=", r.layout.p,
              " cells=", r.layout.cells.size(),
              " equalities=", r.layout.equalities.size());
  return report.Finish(kPositive, "ok");
}

RunResult Sat2Word(const RunConfig& c) {
  auto f = Load<CnfFormula>(OneInput(c), ParseDimacs);
  if (!f.ok()) return Fail(f.status());
  const SatWordReduction r = SatToWord(*f);
  Report report(c.quiet);
  if (auto s = Emit(report, c.output, SerializeWord(r.word), "word"); !s.ok()) {
    return Fail(s);
  }
  for (const auto& [path, body, what] :
       {std::tuple{c.lcp_out, SerializeLcp(r.lcp.instance), "lcp"},
        std::tuple{c.layout_out, SerializeLayout(r.lcp.layout), "layout"}}) {
    if (path.empty()) continue;
    if (auto s = WriteFile(path, body); !s.ok()) return Fail(s);
    report.Line("wrote ", what, " ", path);
  }
  report.Line("word n=", r.word.alphabet_size, " |W|=", r.word.length());
  return report.Finish(kPositive, "ok");
}

RunResult PipNormal(const RunConfig& c) {
  auto f = Load<CnfFormula>(OneInput(c), ParseDimacs);
  if (!f.ok()) return Fail(f.status());
  const SatPipReduction r = PrefixIncreasingNormalForm(*f);
  Report report(c.quiet);
  if (auto s = Emit(report, c.output, SerializePip(r.instance), "pip"); !s.ok()) {
    return Fail(s);
  }
  if (!c.layout_out.empty()) {
    if (auto s = WriteFile(c.layout_out, SerializeLayout(r.layout)); !s.ok()) {
      return Fail(s);
    }
    report.Line("wrote layout ", c.layout_out);
  }
  report.Line("pip n=", r.instance.n, " k=", r.instance.k);
  return report.Finish(kPositive, "ok");
}

RunResult Pip2Match(const RunConfig& c) {
  auto pip = Load<PipInstance>(OneInput(c), ParsePip);
  if (!pip.ok()) return Fail(pip.status());
  const MatchingInstance m = PipToMatching(*pip);
  Report report(c.quiet);
  if (auto s = Emit(report, c.output, SerializeMatching(m), "match"); !s.ok()) {
    return Fail(s);
  }
  report.Line("match n=", m.n, " edges=", m.edges.size(),
              " restricted=", m.restricted.size());
  return report.Finish(kPositive, "ok");
}

struct Sidecars {
  LcpInstance instance;
  ReductionLayout layout;
};

absl::StatusOr<Sidecars> LoadSidecars(const RunConfig& c) {
  if (c.lcp.empty() || c.layout.empty()) {
    return absl::InvalidArgumentError("--lcp and --layout are both required");
  }
  auto inst = Load<LcpInstance>(c.lcp, ParseLcp);
  if (!inst.ok()) return inst.status();
  auto layout = Load<ReductionLayout>(c.layout, ParseLayout);
  if (!layout.ok()) return layout.status();
  if (layout->n != inst->n) {
    return absl::InvalidArgumentError(absl::StrCat(
        c.layout, ": layout n=", layout->n, " but ", c.lcp, " has n=", inst->n));
  }
  return Sidecars{*std::move(inst), *std::move(layout)};
}

RunResult Embed(const RunConfig& c) {
  auto sc = LoadSidecars(c);
  if (!sc.ok()) return Fail(sc.status());
  auto bits = ParseIntList(c.assignment);
  if (!bits.ok()) return Fail(bits.status());
  Assignment a;
  for (int b : *bits) {
    if (b != 0 && b != 1) return Fail("--assignment takes 0/1 values");
    a.push_back(b == 1);
  }
  Report report(c.quiet);
  if (static_cast<int>(a.size()) == sc->layout.formula.num_variables) {
    if (auto bad = FirstViolatedClause(sc->layout.formula, a)) {
      report.Line("falsified clause ", *bad + 1);
      return report.Finish(kNegative, "falsified");
    }
  }
  auto pi = EmbedAssignment(sc->instance, sc->layout, a);
  if (!pi.ok()) return Fail(pi.status());
  report.Line("permutation: ", pi->ToString());
  return report.Finish(kPositive, "ok");
}

RunResult Extract(const RunConfig& c) {
  auto sc = LoadSidecars(c);
  if (!sc.ok()) return Fail(sc.status());
  auto pi = ParsePerm(c.perm, sc->instance.n);
  if (!pi.ok()) return Fail(pi.status());
  Report report(c.quiet);
  if (!CheckSolution(sc->instance, *pi)) {
    report.Line("infeasible permutation");
    return report.Finish(kNegative, "infeasible");
  }
  auto a = ExtractAssignment(sc->instance, sc->layout, *pi);
  if (!a.ok()) return Fail(a.status());
  std::vector<int> bits(a->begin(), a->end());
  report.Line("assignment: ", JoinInts(bits));
  return report.Finish(kPositive, "ok");
}

// --- matching -----------------------------------------------------------

RunResult MatchSolve(const RunConfig& c) {
  auto inst = Load<MatchingInstance>(OneInput(c), ParseMatching);
  if (!inst.ok()) return Fail(inst.status());
  std::optional<Matching> m;
  if (c.oracle) {
    auto slow = BruteForceMatchings(*inst, c.caps.max_oracle_n);
    if (!slow.ok()) return Fail(slow.status());
    m = *slow;
  } else {
    m = Solve(*inst, MatchingSolveOptions{!c.no_hall});
  }
  Report report(c.quiet);
  if (!m) {
    report.Line("unsat n=", inst->n);
    return report.Finish(kNegative, "unsat");
  }
  report.Line("sat n=", inst->n);
  if (c.output.empty()) {
    report.Line("solution: ", JoinInts(m->partner));
  } else if (auto s = Emit(report, c.output, SerializeMatchingSolution(*m),
                           "solution");
             !s.ok()) {
    return Fail(s);
  }
  return report.Finish(kPositive, "sat");
}

RunResult MatchVerify(const RunConfig& c) {
  if (c.inputs.size() != 2) return Fail("match verify: expected <instance> <solution>");
  auto inst = Load<MatchingInstance>(c.inputs[0], ParseMatching);
  if (!inst.ok()) return Fail(inst.status());
  const int n = inst->n;
  auto m = Load<Matching>(c.inputs[1], [n](std::string_view text) {
    return ParseMatchingSolution(text, n);
  });
  if (!m.ok()) return Fail(m.status());
  const bool ok = Verify(*inst, *m);
  Report report(c.quiet);
  const char* token = ok ? "valid" : "invalid";
  report.Line(token, " n=", n);
  return report.Finish(ok ? kPositive : kNegative, token);
}

// --- generators ---------------------------------------------------------

absl::Status CheckRange(const char* flag, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    return absl::OutOfRangeError(absl::StrCat(flag, "=", value, " outside [", lo,
                                              ", ", hi, "] (cap)"));
  }
  return absl::OkStatus();
}

RunResult Generate(const RunConfig& c) {
  const std::string& kind = c.command[1];
  Rng rng(c.seed);
  std::string body;
  absl::Status bad;
  if (kind == "cnf") {
    bad = CheckRange("--m", c.m, 1, c.caps.max_gen_n);
    if (bad.ok()) bad = CheckRange("--d", c.d, 1, c.caps.max_gen_n);
    if (bad.ok()) body = SerializeDimacs(RandomCnf(c.m, c.d, rng));
  } else {
    bad = CheckRange("--n", c.n, 1, c.caps.max_gen_n);
    if (bad.ok() && kind == "word") {
      bad = CheckRange("--len", c.len, 0, c.caps.max_gen_len);
      if (bad.ok()) body = SerializeWord(RandomWord(c.n, c.len, rng));
    } else if (bad.ok() && kind == "lcp") {
      body = SerializeLcp(RandomLcp(c.n, rng));
    } else if (bad.ok() && kind == "pip") {
      body = SerializePip(RandomPip(c.n, rng));
    } else if (bad.ok() && kind == "match") {
      body = SerializeMatching(RandomMatching(c.n, rng));
    }
  }
  if (!bad.ok()) return Fail(bad);
  Report report(c.quiet);
  if (auto s = Emit(report, c.output, body, kind.c_str()); !s.ok()) return Fail(s);
  return report.Finish(kPositive, "ok");
}

using Handler = std::function<RunResult(const RunConfig&)>;

const std::map<std::vector<std::string>, Handler>& Handlers() {
  static const auto* table = new std::map<std::vector<std::string>, Handler>{
      {{"check"}, Check},
      {{"witness"}, Witness},
      {{"kcheck"}, KCheck},
      {{"minsearch"}, MinSearch},
      {{"lcp", "solve"}, LcpSolve},
      {{"lcp", "check"}, LcpCheck},
      {{"lcp", "complete"}, LcpComplete},
      {{"lcp", "to-word"}, LcpToWordCmd},
      {{"reduce", "sat2lcp"}, Sat2Lcp},
      {{"reduce", "sat2word"}, Sat2Word},
      {{"reduce", "pip-normal"}, PipNormal},
      {{"reduce", "pip2match"}, Pip2Match},
      {{"reduce", "embed"}, Embed},
      {{"reduce", "extract"}, Extract},
      {{"match", "solve"}, MatchSolve},
      {{"match", "verify"}, MatchVerify},
      {{"gen", "word"}, Generate},
      {{"gen", "lcp"}, Generate},
      {{"gen", "pip"}, Generate},
      {{"gen", "cnf"}, Generate},
      {{"gen", "match"}, Generate},
  };
  return *table;
}

// Commands that read exactly one input file.
bool TakesOneInput(const std::vector<std::string>& command) {
  return command[0] != "minsearch" && command[0] != "gen" &&
         command != std::vector<std::string>{"match", "verify"} &&
         command != std::vector<std::string>{"reduce", "embed"} &&
         command != std::vector<std::string>{"reduce", "extract"};
}

}  // namespace

RunResult Execute(const RunConfig& config) {
  auto it = Handlers().find(config.command);
  if (it == Handlers().end()) return Fail("unknown command");
  if (TakesOneInput(config.command) && config.inputs.size() != 1) {
    return Fail(absl::StrCat(config.command.back(), ": expected one input file"));
  }
  return it->second(config);
}

RunResult Run(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"Permutation universality toolkit", "permuniv"};
  app.set_version_flag("--version", kFormatTag);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("-q,--quiet", config.quiet, "print only the verdict token");
  app.add_option("--max-frontier-n", config.caps.max_frontier_n,
                 "alphabet cap for the subset DP")->capture_default_str();
  app.add_option("--max-oracle-n", config.caps.max_oracle_n,
                 "size cap for brute-force oracles")->capture_default_str();
  app.add_option("--max-search-n", config.caps.max_search_n,
                 "alphabet cap for minsearch")->capture_default_str();
  app.add_option("--max-gen-n", config.caps.max_gen_n,
                 "size cap for generators")->capture_default_str();

  auto inputs = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", config.inputs, what)->required();
  };
  auto output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", config.output, "output file (default stdout)");
  };
  auto n_flag = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "alphabet size (default: from the file)");
  };

  auto* check = app.add_subcommand("check", "is every permutation a subsequence");
  inputs(check, "word file");
  n_flag(check);
  auto* witness = app.add_subcommand("witness", "find a missing permutation");
  inputs(witness, "word file");
  n_flag(witness);
  witness->add_flag("--oracle", config.oracle, "use the n! scan");
  auto* kcheck = app.add_subcommand("kcheck", "are all words of length k subsequences");
  inputs(kcheck, "word file");
  n_flag(kcheck);
  kcheck->add_option("--k", config.k, "word length")->required();
  auto* minsearch = app.add_subcommand("minsearch", "shortest universal word");
  minsearch->add_option("--n", config.n, "alphabet size")->required();
  minsearch->add_option("--budget", config.budget, "largest length to try")->required();
  minsearch->add_option("--jobs", config.jobs, "worker threads")->capture_default_str();

  auto group = [&](const char* name, const char* desc) {
    auto* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };

  auto* lcp = group("lcp", "locally constrained permutations");
  auto* lcp_solve = lcp->add_subcommand("solve", "find a feasible permutation");
  inputs(lcp_solve, "lcp file");
  lcp_solve->add_flag("--oracle", config.oracle, "use the n! scan");
  lcp_solve->add_flag("--no-hall", config.no_hall, "disable matching pruning");
  auto* lcp_check = lcp->add_subcommand("check", "test one permutation");
  inputs(lcp_check, "lcp file");
  lcp_check->add_option("--perm", config.perm, "values, space separated")->required();
  auto* lcp_complete = lcp->add_subcommand("complete", "close free gaps with dummies");
  inputs(lcp_complete, "lcp file");
  output(lcp_complete);
  auto* lcp_word = lcp->add_subcommand("to-word", "build the supersequence word");
  inputs(lcp_word, "lcp file");
  output(lcp_word);
  lcp_word->add_flag("--complete", config.complete, "close free gaps first");

  auto* reduce = group("reduce", "reductions");
  auto* sat2lcp = reduce->add_subcommand("sat2lcp", "3-CNF to LCP");
  inputs(sat2lcp, "DIMACS file");
  output(sat2lcp);
  sat2lcp->add_option("--layout-out", config.layout_out, "layout sidecar");
  auto* sat2word = reduce->add_subcommand("sat2word", "3-CNF to word");
  inputs(sat2word, "DIMACS file");
  output(sat2word);
  sat2word->add_option("--lcp-out", config.lcp_out, "intermediate LCP sidecar");
  sat2word->add_option("--layout-out", config.layout_out, "layout sidecar");
  auto* pipn = reduce->add_subcommand("pip-normal", "3-CNF to prefix increasing form");
  inputs(pipn, "DIMACS file");
  output(pipn);
  pipn->add_option("--layout-out", config.layout_out, "layout sidecar");
  auto* pip2match = reduce->add_subcommand("pip2match", "PIP to restricted matching");
  inputs(pip2match, "pip file");
  output(pip2match);
  auto* embed = reduce->add_subcommand("embed", "assignment to permutation");
  embed->add_option("--lcp", config.lcp, "lcp file")->required();
  embed->add_option("--layout", config.layout, "layout file")->required();
  embed->add_option("--assignment", config.assignment, "0/1 per variable")->required();
  auto* extract = reduce->add_subcommand("extract", "permutation to assignment");
  extract->add_option("--lcp", config.lcp, "lcp file")->required();
  extract->add_option("--layout", config.layout, "layout file")->required();
  extract->add_option("--perm", config.perm, "values, space separated")->required();

  auto* match = group("match", "partially non-crossing perfect matching");
  auto* match_solve = match->add_subcommand("solve", "find a matching");
  inputs(match_solve, "match file");
  output(match_solve);
  match_solve->add_flag("--oracle", config.oracle, "use the n! scan");
  match_solve->add_flag("--no-hall", config.no_hall, "disable matching pruning");
  auto* match_verify = match->add_subcommand("verify", "check a solution file");
  match_verify->add_option("input", config.inputs, "match file, solution file")
      ->required()
      ->expected(2);

  auto* gen = group("gen", "seeded random instances");
  gen->footer(kGenHelp);
  for (const char* kind : {"word", "lcp", "pip", "cnf", "match"}) {
    auto* sub = gen->add_subcommand(kind, absl::StrCat("random ", kind));
    sub->add_option("--seed", config.seed, "64-bit seed")->capture_default_str();
    output(sub);
    if (std::string(kind) == "cnf") {
      sub->add_option("--m", config.m, "variables")->required();
      sub->add_option("--d", config.d, "clauses")->required();
    } else {
      sub->add_option("--n", config.n, "size")->required();
    }
    if (std::string(kind) == "word") {
      sub->add_option("--len", config.len, "length")->required();
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream out;
  std::ostringstream err;
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    RunResult r;
    r.exit_code = code == 0 ? kPositive : kError;
    r.out = out.str();
    r.err = err.str();
    return r;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    config.command.push_back(sub->get_name());
    for (CLI::App* leaf : sub->get_subcommands()) {
      config.command.push_back(leaf->get_name());
    }
  }
  return Execute(config);
}

}  // namespace permuniv::cli
