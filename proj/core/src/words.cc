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

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "text_lines.h"

namespace permuniv {

using internal::LineError;
using internal::ParseInteger;
using internal::TextLines;
using internal::Tokens;

absl::StatusOr<Permutation> Permutation::Create(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n + 1, false);
  for (size_t i = 0; i < values.size(); ++i) {
    const int v = values[i];
    if (v < 1 || v > n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "permutation value ", v, " at position ", i + 1, " is outside [1, ",
          n, "]"));
    }
    if (seen[v]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "permutation value ", v, " repeats at position ", i + 1));
    }
    seen[v] = true;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::Identity(int n) {
  std::vector<int> values(n);
  for (int i = 0; i < n; ++i) values[i] = i + 1;
  return Permutation(std::move(values));
}

Word Permutation::AsWord() const {
  return Word{std::max(1, size()), values_};
}

std::string Permutation::ToString() const { return JoinInts(values_); }

absl::Status ValidateWord(const Word& w) {
  if (w.alphabet_size < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("alphabet size must be positive, got ", w.alphabet_size));
  }
  for (size_t i = 0; i < w.symbols.size(); ++i) {
    const int s = w.symbols[i];
    if (s < 1 || s > w.alphabet_size) {
      return absl::InvalidArgumentError(
          absl::StrCat("symbol ", s, " at index ", i + 1, " is outside [1, ",
                       w.alphabet_size, "]"));
    }
  }
  return absl::OkStatus();
}

bool IsSubsequence(std::span<const int> pattern, std::span<const int> text) {
  size_t matched = 0;
  for (size_t i = 0; i < text.size() && matched < pattern.size(); ++i) {
    if (text[i] == pattern[matched]) ++matched;
  }
  return matched == pattern.size();
}

bool IsSubsequence(const Word& pattern, const Word& text) {
  return IsSubsequence(pattern.symbols, text.symbols);
}

bool IsSubsequence(const Permutation& pattern, const Word& text) {
  return IsSubsequence(pattern.values(), text.symbols);
}

std::optional<int> NextOccurrence(const Word& text, int position, int symbol) {
  for (int j = std::max(position, 0) + 1; j <= text.length(); ++j) {
    if (text.at(j) == symbol) return j;
  }
  return std::nullopt;
}

Word Reverse(const Word& w) {
  Word out = w;
  std::reverse(out.symbols.begin(), out.symbols.end());
  return out;
}

SuccessorTable::SuccessorTable(const Word& text)
    : n_(text.alphabet_size), length_(text.length()) {
  table_.assign(static_cast<size_t>(length_ + 1) * n_, length_ + 1);
  // Row q holds answers for "strictly after q"; fill right to left.
  for (int q = length_ - 1; q >= 0; --q) {
    const size_t row = static_cast<size_t>(q) * n_;
    std::copy_n(table_.begin() + row + n_, n_, table_.begin() + row);
    table_[row + (text.symbols[q] - 1)] = q + 1;
  }
}

absl::StatusOr<Word> ParseWord(std::string_view text) {
  TextLines lines(text);
  if (lines.done()) return LineError(1, "missing 'word <n> <L>' header");
  const auto header = lines.Take();
  const auto head = Tokens(header.text);
  if (head.size() != 3 || head[0] != "word") {
    return LineError(header.number, "expected 'word <n> <L>'");
  }
  auto n = ParseInteger(head[1]);
  auto len = ParseInteger(head[2]);
  if (!n.ok() || !len.ok()) {
    return LineError(header.number, "header values must be integers");
  }
  if (*n < 1) return LineError(header.number, "alphabet size must be >= 1");
  if (*len < 0) return LineError(header.number, "length must be >= 0");

  Word w{static_cast<int>(*n), {}};
  w.symbols.reserve(*len);
  if (*len > 0) {
    if (lines.done()) {
      return LineError(lines.end_line(), "missing symbol line");
    }
    const auto body = lines.Take();
    const auto tokens = Tokens(body.text);
    if (static_cast<long long>(tokens.size()) != *len) {
      return LineError(body.number, "expected ", *len, " symbols, found ",
                       tokens.size());
    }
    for (size_t i = 0; i < tokens.size(); ++i) {
      auto s = ParseInteger(tokens[i]);
      if (!s.ok()) return LineError(body.number, s.status().message());
      if (*s < 1 || *s > *n) {
        return LineError(body.number, "symbol ", *s, " at index ", i + 1,
                         " is outside [1, ", *n, "]");
      }
      w.symbols.push_back(static_cast<int>(*s));
    }
  }
  if (!lines.done()) {
    return LineError(lines.Peek().number, "unexpected trailing content");
  }
  return w;
}

std::string SerializeWord(const Word& w) {
  return absl::StrCat("word ", w.alphabet_size, " ", w.length(), "\n",
                      JoinInts(w.symbols), "\n");
}

absl::StatusOr<std::vector<int>> ParseIntList(std::string_view text) {
  std::vector<int> out;
  for (std::string_view tok : Tokens(text)) {
    auto v = ParseInteger(tok);
    if (!v.ok()) return v.status();
    out.push_back(static_cast<int>(*v));
  }
  return out;
}

std::string JoinInts(std::span<const int> values) {
  return absl::StrJoin(values, " ");
}

}  // namespace permuniv
