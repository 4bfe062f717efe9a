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
#include <random>

#include "gptlab/core/types.hpp"

namespace gptlab {

using Rng = std::mt19937_64;

/// splitmix64 mix of (base, stream). Trial i of a sweep seeded with s uses
/// derive_seed(s, i), so results do not depend on how trials are scheduled.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Uniform on the unit sphere in R^n (normalised Gaussian vector).
Vector random_unit_vector(Index n, Rng& rng);

/// Uniform in the unit ball of R^n.
Vector random_ball_point(Index n, Rng& rng);

/// Flat Dirichlet sample of length k.
Vector random_simplex(Index k, Rng& rng);

/// Haar-random element of SO(m): QR of a Gaussian matrix with the sign of
/// R's diagonal absorbed into Q, then one column flipped if det < 0.
Matrix random_rotation(Index m, Rng& rng);

}  // namespace gptlab
