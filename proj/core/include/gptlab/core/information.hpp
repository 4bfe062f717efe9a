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

// All entropies are in bits with the convention 0 log 0 = 0.

double binary_entropy(double p);

/// Shannon entropy of a probability vector. Zero entries are kept and
/// contribute nothing.
double shannon_entropy(const Vector& p);

/// p(y) = sum_x p(x) p(y|x).
Vector output_distribution(const Channel& ch);

/// I(X:Y) = sum_xy p(x,y) log2(p(x,y) / (p(x) p(y))).
double mutual_information(const Channel& ch);

}  // namespace gptlab
