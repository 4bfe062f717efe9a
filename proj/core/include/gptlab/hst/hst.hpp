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
#include <optional>
#include <vector>

#include "gptlab/core/random.hpp"
#include "gptlab/core/types.hpp"
#include "gptlab/core/validation.hpp"

namespace gptlab::hst {

/// Largest supported ball dimension.
inline constexpr Index kMaxDim = Index{1} << 20;

struct HstState {
  Vector r;

  State state() const;
  bool pure() const;
};

/// Effect gamma (1, m). Extremal effects have gamma = 1/2 and |m| = 1.
struct HstEffect {
  double gamma = 0.5;
  Vector m;

  Effect effect() const;
};

/// (1, r); throws std::domain_error if |r| > 1 + kExactTol.
State make_state(const Vector& r);
/// 1/2 (1, m); throws std::domain_error unless |m| = 1 within kExactTol.
Effect make_extremal_effect(const Vector& m);

/// {e_m, e_-m}.
Measurement canonical_measurement(const Vector& m);

LocalBall ball(Index n);

/// log2(1 + M R).
double capacity_upper_bound(double m_norm, double r_norm);

/// Antipodal encoding {(1, e1), (1, -e1)} with uniform prior, decoded with
/// the canonical measurement along `decode` (default e1).
Channel one_bit_protocol(Index n, const std::optional<Vector>& decode = std::nullopt);

/// Random measurement with k outcomes: a flat-simplex mixture of canonical
/// measurements whose two outcomes are sent to random labels, and of the
/// trivial measurement {u} sent to a random label. With `hints` (unit
/// vectors), half of the canonical components use a hinted direction.
Measurement random_measurement(Index n, Index k, Rng& rng, const std::vector<Vector>& hints = {});

struct CapacitySearchResult {
  double max_capacity_bits = 0.0;
  double max_upper_bound_bits = 0.0;
  int trials = 0;
  int unconverged = 0;
};

/// Random encodings (2..8 pure or mixed states) and random decodings
/// (2..8 outcomes); each channel's prior is optimised by Blahut-Arimoto.
/// Trial i uses derive_seed(seed, i).
CapacitySearchResult random_capacity_search(Index n, int trials, std::uint64_t seed);

}  // namespace gptlab::hst
