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

#include "permuniv/words.h"

#include "gtest/gtest.h"
#include "oracles.h"
#include "permuniv/generators.h"

namespace permuniv {
namespace {

const Word kSevenLetters{3, {1, 2, 3, 1, 2, 1, 3}};

TEST(IsSubsequenceTest, EmptyPatternMatchesEverything) {
  EXPECT_TRUE(IsSubsequence(Word{3, {}}, kSevenLetters));
  EXPECT_TRUE(IsSubsequence(Word{3, {}}, Word{3, {}}));
}

TEST(IsSubsequenceTest, OrderMatters) {
  EXPECT_FALSE(IsSubsequence(Word{2, {1, 2}}, Word{2, {2, 1}}));
}

TEST(IsSubsequenceTest, SevenLetterWordContainsAllPermutationsOfThree) {
  EXPECT_TRUE(IsSubsequence(Word{3, {2, 1, 3}}, kSevenLetters));
  testing::ForEachPermutation(3, [](const std::vector<int>& p) {
    EXPECT_TRUE(IsSubsequence(p, kSevenLetters.symbols)) << JoinInts(p);
  });
}

TEST(IsSubsequenceTest, EmptyTextContainsOnlyEmptyPattern) {
  EXPECT_FALSE(IsSubsequence(Word{1, {1}}, Word{1, {}}));
}

TEST(IsSubsequenceTest, GreedyAgreesWithExhaustiveEmbedding) {
  Rng rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = rng.Uniform(1, 4);
    const Word pattern = RandomWord(n, rng.Uniform(0, 8), rng);
    const Word text = RandomWord(n, rng.Uniform(0, 12), rng);
    ASSERT_EQ(IsSubsequence(pattern, text),
              testing::EmbeddingExists(pattern.symbols, text.symbols))
        << JoinInts(pattern.symbols) << " in " << JoinInts(text.symbols);
  }
}

TEST(NextOccurrenceTest, SevenLetterWordExamples) {
  EXPECT_EQ(NextOccurrence(kSevenLetters, 0, 3), 3);
  EXPECT_EQ(NextOccurrence(kSevenLetters, 3, 3), 7);
  EXPECT_EQ(NextOccurrence(kSevenLetters, 7, 1), std::nullopt);
}

TEST(NextOccurrenceTest, SuccessorTableMatchesScanAndIsIncreasing) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.Uniform(1, 5);
    const Word text = RandomWord(n, rng.Uniform(0, 15), rng);
    const SuccessorTable table(text);
    for (int c = 1; c <= n; ++c) {
      int previous = -1;
      for (int q = 0; q <= text.length(); ++q) {
        const auto scan = NextOccurrence(text, q, c);
        const int fast = table.Next(q, c);
        ASSERT_EQ(scan.value_or(text.length() + 1), fast);
        if (scan) {
          // Strictly past the query, and monotone in it.
          EXPECT_GT(*scan, q);
          EXPECT_GE(*scan, previous);
          previous = *scan;
        }
      }
      EXPECT_EQ(table.Next(text.length() + 5, c), table.infinity());
    }
  }
}

TEST(ReverseTest, Examples) {
  EXPECT_EQ(Reverse(Word{3, {1, 2, 3}}), (Word{3, {3, 2, 1}}));
  EXPECT_EQ(Reverse(Word{3, {}}), (Word{3, {}}));
  EXPECT_EQ(Reverse(Word{2, {2, 2, 1}}), (Word{2, {1, 2, 2}}));
}

TEST(ReverseTest, IsAnInvolution) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = RandomWord(rng.Uniform(1, 6), rng.Uniform(0, 20), rng);
    EXPECT_EQ(Reverse(Reverse(w)), w);
  }
}

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_FALSE(Permutation::Create({1, 1}).ok());
  EXPECT_FALSE(Permutation::Create({0, 1}).ok());
  EXPECT_FALSE(Permutation::Create({1, 3}).ok());
  ASSERT_TRUE(Permutation::Create({2, 3, 1}).ok());
  EXPECT_EQ(Permutation::Create({2, 3, 1})->ToString(), "2 3 1");
}

TEST(WordFormatTest, ParsesAndSerializes) {
  auto w = ParseWord("word 3 7\n1 2 3 1 2 1 3\n");
  ASSERT_TRUE(w.ok()) << w.status();
  EXPECT_EQ(*w, kSevenLetters);
  EXPECT_EQ(SerializeWord(*w), "word 3 7\n1 2 3 1 2 1 3\n");
}

TEST(WordFormatTest, EmptyWord) {
  auto w = ParseWord(SerializeWord(Word{2, {}}));
  ASSERT_TRUE(w.ok()) << w.status();
  EXPECT_EQ(*w, (Word{2, {}}));
}

TEST(WordFormatTest, RejectsOutOfRangeSymbolNamingIndex) {
  auto w = ParseWord("word 3 4\n1 2 4 1\n");
  ASSERT_FALSE(w.ok());
  EXPECT_NE(std::string(w.status().message()).find("index 3"),
            std::string::npos)
      << w.status();
}

TEST(WordFormatTest, RejectsLengthMismatch) {
  EXPECT_FALSE(ParseWord("word 3 4\n1 2 3\n").ok());
  EXPECT_FALSE(ParseWord("word 0 0\n").ok());
  EXPECT_FALSE(ParseWord("wrd 3 1\n1\n").ok());
}

}  // namespace
}  // namespace permuniv
