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
#include <string>
#include <vector>

#include "gptlab/core/types.hpp"

namespace gptlab::protocols {

struct ResidualWitness {
  std::uint32_t x = 0;
  std::size_t y = 0;
  double residual = 0.0;
};

struct TeleportationRun {
  int n_bits = 0;
  State input;
  std::vector<Effect> bob_effects;  // sampled e_y; the last one is u
  Matrix joint;                     // p_tel(x, y), rows x
  Vector p_x;                       // from the unit effect on B
  double max_residual = 0.0;        // max |p_tel(y|x) - e_y . omega_a|
  double max_px_deviation = 0.0;    // max |p_x - 2^-N|
  ResidualWitness worst;

  bool ok() const;
};

/// Contracts (E_x (x) e_y) . (omega_a (x) phi_0 T_x^t) over A', A and B.
/// Bob's effects are `bob_effects` random extremal effects plus u.
TeleportationRun teleport(const State& input, int n_bits, std::uint64_t seed, int bob_effects = 100);

struct SwapRun {
  int n_bits = 0;
  Matrix joint;        // p_swap(x, y) over the Bell effects E'_y
  Matrix conditional;  // p_swap(y | x)
  Vector p_x;
  double max_residual = 0.0;  // over Bell and random product effects
  double max_px_deviation = 0.0;
  ResidualWitness worst;

  bool ok() const;
};

/// Four-index contraction (E_x (x) E'_y) . (phi (x) phi_0 T_x^t) with phi on
/// A'C. Checks p_swap(y|x) = E'_y . phi for every Bell effect E'_y and for
/// `product_effects` random extremal product effects.
SwapRun entanglement_swap(const BipartiteState& phi, int n_bits, std::uint64_t seed,
                          int product_effects = 32);

}  // namespace gptlab::protocols
