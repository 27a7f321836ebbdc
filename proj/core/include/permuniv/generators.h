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

#ifndef PERMUNIV_GENERATORS_H_
#define PERMUNIV_GENERATORS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "permuniv/cnf.h"
#include "permuniv/lcp.h"
#include "permuniv/matching.h"
#include "permuniv/words.h"

namespace permuniv {

// Seeded source of randomness. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; bounded draws use rejection sampling so
// that a seed yields the same instances on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform in [0, bound), bound >= 1.
  uint64_t Below(uint64_t bound);
  // Uniform in [lo, hi].
  int Uniform(int lo, int hi) {
    return lo + static_cast<int>(Below(static_cast<uint64_t>(hi - lo) + 1));
  }
  bool Coin() { return (Next() >> 63) != 0; }
  std::vector<int> Shuffled(int n);  // a uniform permutation of 1..n

 private:
  std::mt19937_64 engine_;
};

// Symbols uniform over {1..n}.
Word RandomWord(int n, int length, Rng& rng);

// Each value joins each H_i with probability 1/2; each gap is free, the
// integer order, or a uniformly random order with probability 1/3 each.
LcpInstance RandomLcp(int n, Rng& rng);

// Each value joins each H_i with probability 1/2; k uniform in [0, n-1].
PipInstance RandomPip(int n, Rng& rng);

// d clauses, every literal picks a uniform variable and a fair sign.
CnfFormula RandomCnf(int m, int d, Rng& rng);

// Each of the n^2 edges present with probability 1/2; |W| uniform in
// [0, n], then W a uniform subset of that size.
MatchingInstance RandomMatching(int n, Rng& rng);

}  // namespace permuniv

#endif  // PERMUNIV_GENERATORS_H_
