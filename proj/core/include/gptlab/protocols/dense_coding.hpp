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

#include <string>

#include "gptlab/core/types.hpp"
#include "gptlab/theory.hpp"

namespace gptlab::protocols {

struct DenseCodingRun {
  TheoryConfig config;
  BipartiteState initial_state;
  Channel channel;  // rows: message x, columns: outcome y
  double info_bits = 0.0;
};

/// Shares phi_0, Alice applies T_x, Bob measures the theory's Bell
/// measurement. Variants dispatch to their own constructions.
DenseCodingRun dense_coding(const TheoryConfig& config);

enum class ProtocolClass { Ordinary, Superdense, Hyperdense };

std::string to_string(ProtocolClass c);

struct Classification {
  ProtocolClass cls = ProtocolClass::Ordinary;
  double dc_info = 0.0;
  double local_capacity = 0.0;
};

/// Superdense iff dc_info - kOptTol > local; hyperdense iff
/// dc_info - kOptTol > 2 local.
Classification classify(double dc_info, double local_capacity);

}  // namespace gptlab::protocols
