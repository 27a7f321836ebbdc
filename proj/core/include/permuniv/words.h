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

#ifndef PERMUNIV_WORDS_H_
#define PERMUNIV_WORDS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace permuniv {

// A finite word over the alphabet {1..alphabet_size}. Positions are 1-based
// in every public API; `symbols` itself is an ordinary 0-based vector.
struct Word {
  int alphabet_size = 1;
  std::vector<int> symbols;

  int length() const { return static_cast<int>(symbols.size()); }
  bool empty() const { return symbols.empty(); }
  // Symbol at 1-based position `pos`.
  int at(int pos) const { return symbols[pos - 1]; }

  friend bool operator==(const Word&, const Word&) = default;
};

// A bijection on {1..n}, stored as the word pi_1 ... pi_n.
class Permutation {
 public:
  Permutation() = default;

  // Fails unless `values` is a bijection onto {1..values.size()}.
  static absl::StatusOr<Permutation> Create(std::vector<int> values);
  static Permutation Identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  // 1-based accessor: the value at position `pos`.
  int operator()(int pos) const { return values_[pos - 1]; }
  const std::vector<int>& values() const { return values_; }

  // The permutation read as a word over {1..n}.
  Word AsWord() const;
  std::string ToString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}

  std::vector<int> values_;
};

absl::Status ValidateWord(const Word& w);

// Greedy left-to-right subsequence test: each pattern symbol is matched to its
// earliest occurrence after the previous match.
bool IsSubsequence(std::span<const int> pattern, std::span<const int> text);
bool IsSubsequence(const Word& pattern, const Word& text);
bool IsSubsequence(const Permutation& pattern, const Word& text);

// Smallest 1-based index j > position with text[j] == symbol.
std::optional<int> NextOccurrence(const Word& text, int position, int symbol);

Word Reverse(const Word& w);

// For every position q in [0, |T|] and symbol c, the smallest j > q with
// T[j] == c, or the sentinel |T|+1 when there is none. Querying from any
// q > |T| yields the sentinel as well, which makes the sentinel absorbing.
class SuccessorTable {
 public:
  explicit SuccessorTable(const Word& text);

  int alphabet_size() const { return n_; }
  int text_length() const { return length_; }
  int infinity() const { return length_ + 1; }

  int Next(int position, int symbol) const {
    if (position >= length_) return length_ + 1;
    return table_[static_cast<size_t>(position) * n_ + (symbol - 1)];
  }

 private:
  int n_;
  int length_;
  std::vector<int32_t> table_;
};

// Plain-text word format:
//   word <n> <L>
//   s_1 s_2 ... s_L
absl::StatusOr<Word> ParseWord(std::string_view text);
std::string SerializeWord(const Word& w);

// Space-separated symbols, e.g. "1 2 3". Used for permutations on the
// command line and in reports.
absl::StatusOr<std::vector<int>> ParseIntList(std::string_view text);
std::string JoinInts(std::span<const int> values);

}  // namespace permuniv

#endif  // PERMUNIV_WORDS_H_
