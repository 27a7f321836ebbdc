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

#include <vector>

#include "benchmark/benchmark.h"
#include "permuniv/generators.h"
#include "permuniv/lcp.h"
#include "permuniv/matching.h"
#include "permuniv/min_search.h"
#include "permuniv/reductions.h"
#include "permuniv/universality.h"

namespace permuniv {
namespace {

// Subset DP on a universal word, n = range(0).
void BM_IsUniversal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Word w = ConstructUniversal(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsUniversal(w, n));
  }
  state.SetComplexityN(int64_t{1} << n);
}
BENCHMARK(BM_IsUniversal)->DenseRange(4, 20, 4)->Complexity();

void BM_FindMissingPermutation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Word w = RandomWord(n, n * n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(FindMissingPermutation(w, n));
  }
}
BENCHMARK(BM_FindMissingPermutation)->Arg(8)->Arg(12)->Arg(16);

void BM_MinSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MinSearchOptions options;
  options.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(MinUniversalLength(n, n * n, options));
  }
}
BENCHMARK(BM_MinSearch)->Args({3, 1})->Args({4, 1})->Args({4, 4})
    ->Unit(benchmark::kMillisecond);

// LCP solver on reduction output, formulas of d = range(0) clauses.
void BM_SolveReduction(benchmark::State& state) {
  Rng rng(7);
  std::vector<LcpInstance> instances;
  for (int i = 0; i < 16; ++i) {
    instances.push_back(
        SatToLcp(RandomCnf(4, static_cast<int>(state.range(0)), rng)).instance);
  }
  LcpSolveOptions options;
  options.hall_pruning = state.range(1) != 0;
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(instances[i++ % instances.size()], options));
  }
}
BENCHMARK(BM_SolveReduction)->Args({2, 1})->Args({3, 1})->Args({4, 1})
    ->Unit(benchmark::kMicrosecond);

void BM_SolveRandomLcp(benchmark::State& state) {
  Rng rng(3);
  std::vector<LcpInstance> instances;
  for (int i = 0; i < 64; ++i) {
    instances.push_back(RandomLcp(static_cast<int>(state.range(0)), rng));
  }
  LcpSolveOptions options;
  options.hall_pruning = state.range(1) != 0;
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(instances[i++ % instances.size()], options));
  }
}
BENCHMARK(BM_SolveRandomLcp)->Args({8, 0})->Args({8, 1})->Args({12, 1})
    ->Args({16, 1});

void BM_SatToWord(benchmark::State& state) {
  Rng rng(5);
  const CnfFormula f = RandomCnf(4, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SatToWord(f));
  }
}
BENCHMARK(BM_SatToWord)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MatchingSolve(benchmark::State& state) {
  Rng rng(9);
  std::vector<MatchingInstance> instances;
  for (int i = 0; i < 64; ++i) {
    instances.push_back(RandomMatching(static_cast<int>(state.range(0)), rng));
  }
  MatchingSolveOptions options{state.range(1) != 0};
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(instances[i++ % instances.size()], options));
  }
}
BENCHMARK(BM_MatchingSolve)->Args({8, 0})->Args({8, 1})->Args({16, 1})
    ->Args({32, 1});

}  // namespace
}  // namespace permuniv

BENCHMARK_MAIN();
