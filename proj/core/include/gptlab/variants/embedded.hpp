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

#include "gptlab/core/types.hpp"
#include "gptlab/core/validation.hpp"

namespace gptlab::variants {

/// Local vectors (1, 0_n, r) with n = 2^N - 1 hidden Hadamard coordinates
/// and r in the unit ball of R^m.
struct EmbeddedTheory {
  int n_bits = 2;
  Index embed_dim = 2;

  /// Throws std::domain_error unless N >= 2 and m >= 1.
  static EmbeddedTheory create(int n_bits, Index embed_dim);

  Index hidden_dim() const;
  Index vector_size() const { return 1 + hidden_dim() + embed_dim; }
  LocalBall local_space() const { return LocalBall{hidden_dim(), embed_dim}; }

  /// Phi_mu = blockdiag(phi_mu, 0_m).
  BipartiteState state(std::uint32_t mu) const;
  /// F_y = 2^-N Phi_y.
  BipartiteEffect effect(std::uint32_t y) const;
  BipartiteMeasurement measurement() const;
  /// T_mu^(R) = blockdiag(T_mu, R).
  Transformation transformation(std::uint32_t mu, const Matrix& rotation) const;
  State local_state(const Vector& r) const;
  /// (chi, 0_n, alpha).
  Effect local_effect(double chi, const Vector& alpha) const;
};

struct EmbeddedRun {
  Channel channel;
  double info_bits = 0.0;
  double max_residual = 0.0;  // max |F_y . Phi_x - delta_xy|
};

/// Encodes x with T_x^(R) for one seeded random R in SO(m) per message.
/// Throws std::logic_error if F_y . Phi_x differs from delta_xy.
EmbeddedRun embedded_dense_coding(const EmbeddedTheory& theory, std::uint64_t rotation_seed);

struct TlWitnessReport {
  int trials = 0;
  double max_spread = 0.0;          // max over effect pairs of (max_mu - min_mu)
  double max_product_error = 0.0;   // max |(e (x) f) . Phi_mu - chi xi|
  double min_state_distance = 0.0;  // min over mu != 0 of L1 |Phi_0 - Phi_mu|
  double expected_distance = 0.0;   // 2 * 2^(N-1)
  bool ok() const;
};

TlWitnessReport tl_violation_witness(const EmbeddedTheory& theory, int trials, std::uint64_t seed);

}  // namespace gptlab::variants
