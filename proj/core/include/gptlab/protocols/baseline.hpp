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

namespace gptlab::protocols {

struct BaselineResult {
  double max_info_bits = 0.0;
  int trials = 0;
  int unconverged = 0;
};

/// Dense coding from separable states. Each trial draws a random product
/// state, a random assignment x -> T_mu_x and a decoding mixed from up to
/// 8 products of random local measurements (optionally the Bell
/// measurement), then maximises over the prior. Half of the A-side
/// directions separate pairs of encoded states. n must be 2^N - 1.
BaselineResult separable_baseline(Index n, int trials, std::uint64_t seed);

/// Channel of the product state a (x) b encoded with every T_x and decoded
/// with the Bell measurement: p(y|x) = 2^-N (1 + (T_x a) . T_y b).
Channel product_bell_channel(const State& a, const State& b, int n_bits);

/// For random product decodings on T_x phi_0, the largest deviation of the
/// B-side marginal p(y2|x) across messages x.
double no_signalling_deviation(int n_bits, int trials, std::uint64_t seed);

}  // namespace gptlab::protocols
