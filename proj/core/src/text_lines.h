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

#ifndef PERMUNIV_SRC_TEXT_LINES_H_
#define PERMUNIV_SRC_TEXT_LINES_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"

namespace permuniv::internal {

// Splits input into lines, remembering 1-based line numbers. Blank lines and
// lines starting with '#' are skipped.
class TextLines {
 public:
  struct Line {
    int number;
    std::string_view text;
  };

  explicit TextLines(std::string_view input);

  bool done() const { return next_ >= lines_.size(); }
  const Line& Peek() const { return lines_[next_]; }
  Line Take() { return lines_[next_++]; }
  size_t remaining() const { return lines_.size() - next_; }
  // Line number to blame when input ends early.
  int end_line() const { return last_line_ + 1; }

 private:
  std::vector<Line> lines_;
  size_t next_ = 0;
  int last_line_ = 0;
};

std::vector<std::string_view> Tokens(std::string_view line);

absl::StatusOr<long long> ParseInteger(std::string_view token);

// absl::StrCat predates std::string_view in some absl builds.
template <typename T>
const T& Printable(const T& value) {
  return value;
}
inline absl::string_view Printable(std::string_view value) {
  return absl::string_view(value.data(), value.size());
}

template <typename... Args>
absl::Status LineError(int line, const Args&... args) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", line, ": ", Printable(args)...));
}

}  // namespace permuniv::internal

#endif  // PERMUNIV_SRC_TEXT_LINES_H_
