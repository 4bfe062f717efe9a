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
#include <vector>

#include "gptlab/core/types.hpp"

namespace gptlab::variants {

struct LemmaViolation {
  std::string bound;  // e.g. "|c_3| <= 1"
  double value = 0.0;
  double limit = 0.0;
};

struct LemmaReport {
  std::vector<LemmaViolation> violations;
  int checks = 0;

  bool ok() const { return violations.empty(); }
};

/// |a| <= 1, |b| <= 1 and |c_k| <= 1 for every column c_k of C.
LemmaReport lemma_state_check(const BipartiteState& phi);

/// 0 <= gamma <= 1, and |alpha|, |beta|, |gamma_k| <= min(gamma, 1 - gamma)
/// on the raw blocks, equivalently <= 1 after factoring gamma out.
LemmaReport lemma_effect_check(const BipartiteEffect& e);

}  // namespace gptlab::variants
