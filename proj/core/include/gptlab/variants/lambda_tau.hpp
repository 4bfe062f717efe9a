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
#include <stdexcept>
#include <string>

#include "gptlab/core/types.hpp"

namespace gptlab::variants {

/// Raised when lambda * tau leaves [-1/(2^N-1), 1/(2^N-3)].
class AdmissibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Entangled states blockdiag(1, lambda T_hat_mu) and effects
/// 2^-N blockdiag(1, tau T_hat_mu).
struct LambdaTauTheory {
  int n_bits = 2;
  double lambda = 1.0;
  double tau = 1.0;

  /// Throws std::domain_error for N < 2 or |lambda|, |tau| > 1, and
  /// AdmissibilityError when the product bound fails.
  static LambdaTauTheory create(int n_bits, double lambda, double tau);

  double product() const { return lambda * tau; }
  BipartiteState state(std::uint32_t mu) const;
  BipartiteEffect effect(std::uint32_t mu) const;
  BipartiteMeasurement measurement() const;
  /// phi_0 T' with T' = diag(1, 1, -1, ..., -1); drives the upper bound.
  BipartiteState witness_state() const;
  /// blockdiag(1, R_a) phi_0 blockdiag(1, R_b)^t.
  BipartiteState rotated_state(const Matrix& r_a, const Matrix& r_b) const;
};

double lt_product_lower_bound(int n_bits);
double lt_product_upper_bound(int n_bits);

/// Channel E_y . (T_x phi_0) with uniform prior. Throws std::logic_error if
/// the contraction disagrees with lambda tau delta + 2^-N (1 - lambda tau).
Channel lt_channel(const LambdaTauTheory& theory);

/// Probability of decoding correctly at the optimal product 1/(2^N-3).
double lt_q(int n_bits);
/// h(p) + (1 - p) log2(2^N - 1).
double lt_entropy(double p, int n_bits);
/// N - H(Q_N); throws std::domain_error for N < 2.
double lt_optimal_info(int n_bits);

struct AdmissibilityProbe {
  double lambda_tau = 0.0;
  double min_probability = 0.0;
  double max_probability = 0.0;
  std::string witness;  // state attaining min_probability
  bool admissible() const;
};

/// Contracts every E_y^(tau) with phi_x, the witness state and rotated
/// states without any admissibility check, so out-of-range products show
/// up as negative probabilities.
AdmissibilityProbe probe_admissibility(int n_bits, double lambda_tau, std::uint64_t seed = 0,
                                       int rotations = 8);

}  // namespace gptlab::variants
