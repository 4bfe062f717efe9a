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

#include "gptlab/theory.hpp"

namespace gptlab::capacity {

/// 2N: log2 of the dimension of the entangled sector.
double dimension_upper_bound(int n_bits);

/// log2(1 + |lambda| (2^N - 1)); requires |lambda| <= 1 and N >= 2.
double weak_entanglement_bound(double lambda, int n_bits);

/// (1 + 2j) / (2^N - 1) for j in {0, 1}.
double weak_threshold(int j, int n_bits);

/// Mutual information of the explicit dense coding protocol.
double dc_capacity_lower_bound(const TheoryConfig& config);

struct SandwichResult {
  int n_bits = 0;
  double lower = 0.0;          // dc_capacity_lower_bound
  double best_observed = 0.0;  // max capacity over the searched protocols
  double upper = 0.0;          // dimension_upper_bound
  int trials = 0;

  bool ok() const;
};

/// Searches base-theory channels: states T_mu phi_0 (optionally mixed with
/// product states), decodings mixed from relabelled Bell measurements,
/// products of canonical measurements and {u}. The explicit dense coding
/// channel is always included.
SandwichResult bipartite_capacity_search(int n_bits, int trials, std::uint64_t seed);

}  // namespace gptlab::capacity
