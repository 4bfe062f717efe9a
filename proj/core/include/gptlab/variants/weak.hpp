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

namespace gptlab::variants {

/// Entangled states blockdiag(1, lambda T_hat_mu) next to all product states.
struct WeakTheory {
  int n_bits = 2;
  double lambda = 1.0;

  /// Throws std::domain_error unless N >= 2 and |lambda| <= 1.
  static WeakTheory create(int n_bits, double lambda);

  BipartiteState state(std::uint32_t mu) const;
  /// 2^-N blockdiag(1, s T_hat_y) with s = sign(lambda) (s = 1 at lambda = 0).
  BipartiteEffect effect(std::uint32_t y) const;
  BipartiteMeasurement measurement() const;
};

/// Shares phi_0, encodes with T_x, decodes with measurement().
Channel weak_dense_coding(const WeakTheory& theory);

struct WeakSearchResult {
  double max_info_bits = 0.0;
  int trials = 0;
  int unconverged = 0;
};

/// Random encodings x -> T_mu_x on a random entangled state (optionally
/// mixed with a product state) and random decodings mixed from relabelled
/// Bell measurements, products of canonical measurements and {u}.
WeakSearchResult weak_random_search(const WeakTheory& theory, int trials, std::uint64_t seed);

}  // namespace gptlab::variants
