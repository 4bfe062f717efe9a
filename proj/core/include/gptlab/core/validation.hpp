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

namespace gptlab {

struct Violation {
  std::size_t effect_index = 0;
  std::string state;  // label of the witness state
  double value = 0.0;
  std::string what;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t checks = 0;

  bool ok() const { return violations.empty(); }
};

/// Local state space {(1, 0_hidden, r) : |r| <= 1}. A plain hypersphere
/// theory has hidden == 0; the embedded theory pads with hidden zeros.
struct LocalBall {
  Index hidden = 0;
  Index ball_dim = 1;

  Index vector_size() const { return 1 + hidden + ball_dim; }
};

/// Generators of a bipartite state space: an explicit list of (entangled)
/// states plus all product states of the two local balls. Product states are
/// covered by sampling the B side (random pure points and +-coordinate axes)
/// and minimising/maximising over A in closed form.
struct BipartiteStateSpace {
  LocalBall a;
  LocalBall b;
  std::vector<std::pair<std::string, BipartiteState>> generators;
  int product_samples = 256;
  std::uint64_t seed = 0;
};

/// Sum of effects equals u and every effect gives a probability in [0, 1]
/// on the whole local ball (checked exactly via the support function).
/// Violations are reported, never clamped.
ValidationReport validate_measurement(const Measurement& m, const LocalBall& space);

ValidationReport validate_measurement(const BipartiteMeasurement& m,
                                      const BipartiteStateSpace& space);

/// Exact range [min, max] of e . omega over the local ball.
std::pair<double, double> effect_range(const Vector& effect, const LocalBall& space);

}  // namespace gptlab
