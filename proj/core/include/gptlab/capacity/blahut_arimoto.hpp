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

#include "gptlab/core/types.hpp"

namespace gptlab {

struct CapacityResult {
  double capacity_bits = 0.0;     // I(X:Y) at optimal_prior
  double upper_bound_bits = 0.0;  // log2 max_x 2^{D(W_x || q)} at the last iterate
  Vector optimal_prior;
  int iterations = 0;
  bool converged = false;
};

struct BlahutArimotoOptions {
  double tol = 1e-10;
  int max_iter = 100000;
};

/// Capacity of the fixed channel `conditional` (rows x, columns y). Stops
/// once the gap between the standard upper and lower capacity bounds drops
/// below tol. On non-convergence the last iterate is returned with
/// converged == false.
CapacityResult blahut_arimoto(const Matrix& conditional, BlahutArimotoOptions opts = {});

}  // namespace gptlab
