// Copyright 2026 The gptlab Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gptlab/theory.hpp"
#include "gptlab_cli/report.hpp"

namespace gptlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFalsified = 3;

RunReport cmd_dense_coding(const TheoryConfig& config);

struct TeleportOptions {
  int n_bits = 2;
  std::string state = "random";  // random | axis:k
  std::uint64_t seed = 0;
  int effects = 100;
};
RunReport cmd_teleport(const TeleportOptions& opts);

struct SwapOptions {
  int n_bits = 2;
  std::uint32_t mu = 0;
  std::uint64_t seed = 0;
};
RunReport cmd_swap(const SwapOptions& opts);

RunReport cmd_lt_table(int n_max);

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 0;
  int trials = 1000;
};
RunReport cmd_verify(const VerifyOptions& opts);

/// Full command line without the program name. Reports go to `out` (or
/// --out PATH), diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gptlab::cli
