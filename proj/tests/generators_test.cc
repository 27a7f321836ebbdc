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

#include "permuniv/generators.h"

#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"

namespace permuniv {
namespace {

TEST(RngTest, SameSeedSameStream) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.Next(), b.Next());
  Rng c(43);
  EXPECT_NE(Rng(42).Next(), c.Next());
}

TEST(RngTest, UniformStaysInRangeAndHitsEnds) {
  Rng rng(0);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 5000; ++i) {
    const int x = rng.Uniform(3, 7);
    ASSERT_GE(x, 3);
    ASSERT_LE(x, 7);
    ++hits[x - 3];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(RngTest, ShuffledIsAPermutation) {
  Rng rng(7);
  for (int n = 0; n <= 9; ++n) {
    std::vector<int> p = rng.Shuffled(n);
    std::sort(p.begin(), p.end());
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    EXPECT_EQ(p, id);
  }
}

TEST(GeneratorsTest, DeterministicForFixedSeed) {
  Rng a(11);
  Rng b(11);
  EXPECT_EQ(RandomWord(4, 20, a), RandomWord(4, 20, b));
  EXPECT_EQ(RandomLcp(6, a), RandomLcp(6, b));
  EXPECT_EQ(RandomPip(6, a), RandomPip(6, b));
  EXPECT_EQ(RandomCnf(4, 5, a), RandomCnf(4, 5, b));
  EXPECT_EQ(RandomMatching(5, a), RandomMatching(5, b));
}

TEST(GeneratorsTest, OutputsAreValid) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.Uniform(1, 7);
    EXPECT_TRUE(ValidateWord(RandomWord(n, 15, rng)).ok());
    const LcpInstance lcp = RandomLcp(n, rng);
    EXPECT_TRUE(LcpInstance::Create(lcp.n, lcp.allowed, lcp.orders).ok());
    const PipInstance pip = RandomPip(n, rng);
    EXPECT_TRUE(PipInstance::Create(pip.n, pip.allowed, pip.k).ok());
    const MatchingInstance m = RandomMatching(n, rng);
    EXPECT_TRUE(MatchingInstance::Create(m.n, m.edges, m.restricted).ok());
    EXPECT_LE(static_cast<int>(m.restricted.size()), n);
  }
}

TEST(GeneratorsTest, GapKindsAllAppear) {
  Rng rng(13);
  int free = 0, integer = 0, other = 0;
  for (int trial = 0; trial < 100; ++trial) {
    for (const auto& order : RandomLcp(6, rng).orders) {
      if (!order) {
        ++free;
      } else if (order->IsInteger()) {
        ++integer;
      } else {
        ++other;
      }
    }
  }
  EXPECT_GT(free, 100);
  EXPECT_GT(integer, 100);
  EXPECT_GT(other, 100);
}

}  // namespace
}  // namespace permuniv
