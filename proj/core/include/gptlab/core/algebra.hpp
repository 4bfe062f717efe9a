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

#include <utility>

#include "gptlab/core/types.hpp"

namespace gptlab {

/// Outcome probability e . omega. Throws std::invalid_argument on a
/// dimension mismatch.
double contract(const Effect& e, const State& omega);

/// Tr(E^t phi) = sum_ij E_ij phi_ij.
double bipartite_contract(const BipartiteEffect& e, const BipartiteState& phi);

BipartiteState product_state(const State& a, const State& b);
BipartiteEffect product_effect(const Effect& a, const Effect& b);

/// (phi u_B, phi^t u_A): first column and first row of phi.
std::pair<State, State> reduced_states(const BipartiteState& phi);

State apply(const Transformation& t, const State& omega);
/// (T (x) I) phi = T phi.
BipartiteState apply_on_a(const Transformation& t, const BipartiteState& phi);
/// (I (x) T) phi = phi T^t.
BipartiteState apply_on_b(const Transformation& t, const BipartiteState& phi);

Transformation compose(const Transformation& outer, const Transformation& inner);

/// Component-wise sum of the effects of a measurement.
Vector effect_sum(const Measurement& m);
Matrix effect_sum(const BipartiteMeasurement& m);

}  // namespace gptlab
