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

#include "gptlab/core/types.hpp"
#include "gptlab/core/validation.hpp"

namespace gptlab {

enum class TheoryKind { Base, LambdaTau, Embedded, Weak };

std::string to_string(TheoryKind kind);
/// Accepts base, lambda-tau, embedded, weak. Throws std::invalid_argument.
TheoryKind parse_theory_kind(const std::string& name);

struct TheoryConfig {
  TheoryKind kind = TheoryKind::Base;
  int n_bits = 2;
  double lambda = 1.0;    // lambda-tau and weak
  double tau = 1.0;       // lambda-tau
  Index embed_dim = 2;    // embedded
  std::uint64_t seed = 0; // rotations (embedded) and validator sampling
};

/// Throws std::domain_error (or variants::AdmissibilityError) when the
/// parameters do not define a theory.
void check_config(const TheoryConfig& config);

LocalBall local_space(const TheoryConfig& config);

/// Listed entangled generators plus the product states of local_space().
/// The lambda-tau space also lists phi_0 T' and `rotations` states
/// T phi_0 T'^t with random rotations.
BipartiteStateSpace bipartite_space(const TheoryConfig& config, int product_samples = 256,
                                    int rotations = 8);

ValidationReport validate_measurement(const Measurement& m, const TheoryConfig& config);
ValidationReport validate_measurement(const BipartiteMeasurement& m, const TheoryConfig& config);

}  // namespace gptlab
