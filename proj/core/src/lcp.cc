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

#include "permuniv/lcp.h"

#include <algorithm>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "text_lines.h"

namespace permuniv {

using internal::LineError;
using internal::ParseInteger;
using internal::TextLines;
using internal::Tokens;

absl::StatusOr<LinearOrder> LinearOrder::FromOrderWord(
    std::vector<int> order_word) {
  const int n = static_cast<int>(order_word.size());
  LinearOrder order;
  order.rank_.assign(n + 1, -1);
  for (int r = 0; r < n; ++r) {
    const int x = order_word[r];
    if (x < 1 || x > n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "order element ", x, " at rank ", r + 1, " is outside [1, ", n, "]"));
    }
    if (order.rank_[x] != -1) {
      return absl::InvalidArgumentError(
          absl::StrCat("order element ", x, " is listed twice"));
    }
    order.rank_[x] = r;
  }
  order.order_word_ = std::move(order_word);
  return order;
}

absl::StatusOr<LinearOrder> LinearOrder::FromChain(
    int n, const std::vector<int>& chain) {
  std::vector<bool> mentioned(n + 1, false);
  std::vector<int> word;
  word.reserve(n);
  for (int x : chain) {
    if (x < 1 || x > n || mentioned[x]) {
      return absl::InvalidArgumentError(
          absl::StrCat("chain element ", x, " is out of range or repeated"));
    }
    mentioned[x] = true;
    word.push_back(x);
  }
  for (int x = 1; x <= n; ++x) {
    if (!mentioned[x]) word.push_back(x);
  }
  return FromOrderWord(std::move(word));
}

LinearOrder LinearOrder::Integer(int n) {
  LinearOrder order;
  order.order_word_.resize(n);
  std::iota(order.order_word_.begin(), order.order_word_.end(), 1);
  order.rank_.resize(n + 1);
  std::iota(order.rank_.begin(), order.rank_.end(), -1);
  return order;
}

bool LinearOrder::IsInteger() const {
  for (int r = 0; r < size(); ++r) {
    if (order_word_[r] != r + 1) return false;
  }
  return true;
}

namespace {

absl::Status ValidateAllowed(int n, std::vector<std::vector<int>>& allowed) {
  if (static_cast<int>(allowed.size()) != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "expected ", n, " allowed sets, got ", allowed.size()));
  }
  for (size_t i = 0; i < allowed.size(); ++i) {
    auto& set = allowed[i];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!set.empty() && (set.front() < 1 || set.back() > n)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "allowed set of position ", i + 1, " leaves [1, ", n, "]"));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<LcpInstance> LcpInstance::Create(
    int n, std::vector<std::vector<int>> allowed,
    std::vector<std::optional<LinearOrder>> orders) {
  if (n < 1) {
    return absl::InvalidArgumentError(absl::StrCat("n must be >= 1, got ", n));
  }
  if (auto s = ValidateAllowed(n, allowed); !s.ok()) return s;
  if (static_cast<int>(orders.size()) != n - 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "expected ", n - 1, " gap orders, got ", orders.size()));
  }
  for (size_t g = 0; g < orders.size(); ++g) {
    if (orders[g].has_value() && orders[g]->size() != n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "order of gap ", g + 1, " ranks ", orders[g]->size(),
          " elements, expected ", n));
    }
  }
  return LcpInstance{n, std::move(allowed), std::move(orders)};
}

int LcpInstance::FreeGapCount() const {
  return static_cast<int>(std::count_if(
      orders.begin(), orders.end(), [](const auto& o) { return !o; }));
}

absl::StatusOr<PipInstance> PipInstance::Create(
    int n, std::vector<std::vector<int>> allowed, int k) {
  if (n < 1) {
    return absl::InvalidArgumentError(absl::StrCat("n must be >= 1, got ", n));
  }
  if (k < 0 || k > n - 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("prefix length k=", k, " must lie in [0, ", n - 1, "]"));
  }
  if (auto s = ValidateAllowed(n, allowed); !s.ok()) return s;
  return PipInstance{n, std::move(allowed), k};
}

bool CheckSolution(const LcpInstance& instance, const Permutation& pi) {
  if (pi.size() != instance.n) return false;
  for (int i = 1; i <= instance.n; ++i) {
    const auto& set = instance.Allowed(i);
    if (!std::binary_search(set.begin(), set.end(), pi(i))) return false;
  }
  for (int g = 1; g < instance.n; ++g) {
    const auto& order = instance.Order(g);
    if (order && !order->Less(pi(g), pi(g + 1))) return false;
  }
  return true;
}

bool CheckPipSolution(const PipInstance& instance, const Permutation& pi) {
  if (pi.size() != instance.n) return false;
  for (int i = 1; i <= instance.n; ++i) {
    const auto& set = instance.allowed[i - 1];
    if (!std::binary_search(set.begin(), set.end(), pi(i))) return false;
  }
  for (int j = 1; j <= instance.k; ++j) {
    if (pi(j) >= pi(j + 1)) return false;
  }
  return true;
}

LcpInstance CompleteFreeOrders(const LcpInstance& instance) {
  const int n = instance.n;
  const int free_gaps = instance.FreeGapCount();
  if (free_gaps == 0) return instance;
  const int total = n + free_gaps;

  // Existing orders keep their relative order on {1..n}; dummy values go last
  // since no original position can hold them.
  auto widen = [&](const LinearOrder& order) {
    std::vector<int> word = order.order_word();
    for (int v = n + 1; v <= total; ++v) word.push_back(v);
    return *LinearOrder::FromOrderWord(std::move(word));
  };
  auto dummy_last = [&](int dummy) {
    std::vector<int> word;
    for (int v = 1; v <= total; ++v) {
      if (v != dummy) word.push_back(v);
    }
    word.push_back(dummy);
    return *LinearOrder::FromOrderWord(std::move(word));
  };
  auto dummy_first = [&](int dummy) {
    std::vector<int> word{dummy};
    for (int v = 1; v <= total; ++v) {
      if (v != dummy) word.push_back(v);
    }
    return *LinearOrder::FromOrderWord(std::move(word));
  };

  LcpInstance out;
  out.n = total;
  int next_dummy = n + 1;
  for (int i = 1; i <= n; ++i) {
    out.allowed.push_back(instance.Allowed(i));
    if (i == n) break;
    const auto& order = instance.Order(i);
    if (order) {
      out.orders.push_back(widen(*order));
      continue;
    }
    const int dummy = next_dummy++;
    out.orders.push_back(dummy_last(dummy));
    out.allowed.push_back({dummy});
    out.orders.push_back(dummy_first(dummy));
  }
  return out;
}

absl::StatusOr<Permutation> ProjectCompletedSolution(int original_n,
                                                     const Permutation& pi) {
  std::vector<int> kept;
  kept.reserve(original_n);
  for (int v : pi.values()) {
    if (v <= original_n) kept.push_back(v);
  }
  if (static_cast<int>(kept.size()) != original_n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "projection kept ", kept.size(), " positions, expected ", original_n));
  }
  return Permutation::Create(std::move(kept));
}

LcpInstance PipToLcp(const PipInstance& pip) {
  LcpInstance out;
  out.n = pip.n;
  out.allowed = pip.allowed;
  for (int g = 1; g < pip.n; ++g) {
    if (g <= pip.k) {
      out.orders.emplace_back(LinearOrder::Integer(pip.n));
    } else {
      out.orders.emplace_back(std::nullopt);
    }
  }
  return out;
}

namespace {

// Parses "<keyword> <i>:" and returns the tokens after the colon.
absl::StatusOr<std::vector<std::string_view>> IndexedLine(
    const TextLines::Line& line, std::string_view keyword, int expected) {
  const size_t colon = line.text.find(':');
  if (colon == std::string_view::npos) {
    return LineError(line.number, "expected '", keyword, " ", expected, ": ...'");
  }
  const auto head = Tokens(line.text.substr(0, colon));
  if (head.size() != 2 || head[0] != keyword) {
    return LineError(line.number, "expected '", keyword, " ", expected, ": ...'");
  }
  auto index = ParseInteger(head[1]);
  if (!index.ok() || *index != expected) {
    return LineError(line.number, "expected index ", expected, " after '",
                     keyword, "'");
  }
  return Tokens(line.text.substr(colon + 1));
}

absl::StatusOr<std::vector<int>> ValuesInRange(
    const TextLines::Line& line, const std::vector<std::string_view>& tokens,
    int n) {
  std::vector<int> values;
  for (std::string_view tok : tokens) {
    auto v = ParseInteger(tok);
    if (!v.ok()) return LineError(line.number, v.status().message());
    if (*v < 1 || *v > n) {
      return LineError(line.number, "value ", *v, " is outside [1, ", n, "]");
    }
    values.push_back(static_cast<int>(*v));
  }
  return values;
}

absl::StatusOr<std::vector<std::vector<int>>> ParseAllowedLines(
    TextLines& lines, int n) {
  std::vector<std::vector<int>> allowed;
  for (int i = 1; i <= n; ++i) {
    if (lines.done()) {
      return LineError(lines.end_line(), "missing 'allowed ", i, ":' line");
    }
    const auto line = lines.Take();
    auto tokens = IndexedLine(line, "allowed", i);
    if (!tokens.ok()) return tokens.status();
    auto values = ValuesInRange(line, *tokens, n);
    if (!values.ok()) return values.status();
    allowed.push_back(*std::move(values));
  }
  return allowed;
}

std::string AllowedLines(const std::vector<std::vector<int>>& allowed) {
  std::string out;
  for (size_t i = 0; i < allowed.size(); ++i) {
    absl::StrAppend(&out, "allowed ", i + 1, ":");
    for (int v : allowed[i]) absl::StrAppend(&out, " ", v);
    out += '\n';
  }
  return out;
}

absl::StatusOr<int> ParseHeaderSize(const TextLines::Line& line,
                                     std::string_view token) {
  auto n = ParseInteger(token);
  if (!n.ok()) return LineError(line.number, n.status().message());
  if (*n < 1) return LineError(line.number, "n must be >= 1");
  return static_cast<int>(*n);
}

}  // namespace

absl::StatusOr<LcpInstance> ParseLcp(std::string_view text) {
  TextLines lines(text);
  if (lines.done()) return LineError(1, "missing 'lcp <n>' header");
  const auto header = lines.Take();
  const auto head = Tokens(header.text);
  if (head.size() != 2 || head[0] != "lcp") {
    return LineError(header.number, "expected 'lcp <n>'");
  }
  auto n = ParseHeaderSize(header, head[1]);
  if (!n.ok()) return n.status();

  auto allowed = ParseAllowedLines(lines, *n);
  if (!allowed.ok()) return allowed.status();

  std::vector<std::optional<LinearOrder>> orders;
  for (int g = 1; g < *n; ++g) {
    if (lines.done()) {
      return LineError(lines.end_line(), "missing 'order ", g, ":' line");
    }
    const auto line = lines.Take();
    auto tokens = IndexedLine(line, "order", g);
    if (!tokens.ok()) return tokens.status();
    if (tokens->size() == 1 && (*tokens)[0] == "free") {
      orders.emplace_back(std::nullopt);
      continue;
    }
    auto values = ValuesInRange(line, *tokens, *n);
    if (!values.ok()) return values.status();
    if (static_cast<int>(values->size()) != *n) {
      return LineError(line.number, "order of gap ", g, " lists ",
                       values->size(), " elements, expected ", *n);
    }
    auto order = LinearOrder::FromOrderWord(*std::move(values));
    if (!order.ok()) {
      return LineError(line.number, "order is not a bijection: ",
                       order.status().message());
    }
    orders.emplace_back(*std::move(order));
  }
  if (!lines.done()) {
    return LineError(lines.Peek().number, "unexpected trailing content");
  }
  return LcpInstance::Create(*n, *std::move(allowed), std::move(orders));
}

std::string SerializeLcp(const LcpInstance& instance) {
  std::string out = absl::StrCat("lcp ", instance.n, "\n");
  out += AllowedLines(instance.allowed);
  for (int g = 1; g < instance.n; ++g) {
    const auto& order = instance.Order(g);
    if (order) {
      absl::StrAppend(&out, "order ", g, ": ",
                      absl::StrJoin(order->order_word(), " "), "\n");
    } else {
      absl::StrAppend(&out, "order ", g, ": free\n");
    }
  }
  return out;
}

absl::StatusOr<PipInstance> ParsePip(std::string_view text) {
  TextLines lines(text);
  if (lines.done()) return LineError(1, "missing 'pip <n> <k>' header");
  const auto header = lines.Take();
  const auto head = Tokens(header.text);
  if (head.size() != 3 || head[0] != "pip") {
    return LineError(header.number, "expected 'pip <n> <k>'");
  }
  auto n = ParseHeaderSize(header, head[1]);
  if (!n.ok()) return n.status();
  auto k = ParseInteger(head[2]);
  if (!k.ok()) return LineError(header.number, k.status().message());
  if (*k < 0 || *k > *n - 1) {
    return LineError(header.number, "k=", *k, " must lie in [0, ", *n - 1,
                     "]");
  }
  auto allowed = ParseAllowedLines(lines, *n);
  if (!allowed.ok()) return allowed.status();
  if (!lines.done()) {
    return LineError(lines.Peek().number, "unexpected trailing content");
  }
  return PipInstance::Create(*n, *std::move(allowed), static_cast<int>(*k));
}

std::string SerializePip(const PipInstance& instance) {
  return absl::StrCat("pip ", instance.n, " ", instance.k, "\n",
                      AllowedLines(instance.allowed));
}

}  // namespace permuniv
