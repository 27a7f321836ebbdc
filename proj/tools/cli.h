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

#ifndef PERMUNIV_TOOLS_CLI_H_
#define PERMUNIV_TOOLS_CLI_H_

#include <cstdint>
#include <string>
#include <vector>

namespace permuniv::cli {

// Exit codes shared by every subcommand.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kError = 2;

// Bumped whenever a file format changes incompatibly.
inline constexpr char kFormatTag[] = "permuniv-formats/1";

struct RunResult {
  int exit_code = kError;
  std::string out;  // report, one fact per line
  std::string err;  // diagnostics
};

struct Caps {
  int max_frontier_n = 24;
  int max_oracle_n = 8;
  int max_search_n = 5;
  int max_gen_n = 4096;
  int max_gen_len = 10'000'000;
};

// Everything a command line can say, after parsing.
struct RunConfig {
  std::vector<std::string> command;  // e.g. {"lcp", "solve"}
  std::vector<std::string> inputs;
  std::string output;
  std::string lcp_out;
  std::string layout_out;
  std::string layout;
  std::string lcp;
  std::string perm;
  std::string assignment;
  int n = 0;  // 0: take it from the input
  int k = -1;
  int budget = 0;
  int jobs = 1;
  int len = 0;
  int m = 0;
  int d = 0;
  uint64_t seed = 0;
  bool quiet = false;
  bool oracle = false;
  bool no_hall = false;
  bool complete = false;
  Caps caps;
};

RunResult Execute(const RunConfig& config);

// Runs one command line. `args` excludes the program name.
RunResult Run(const std::vector<std::string>& args);

}  // namespace permuniv::cli

#endif  // PERMUNIV_TOOLS_CLI_H_
