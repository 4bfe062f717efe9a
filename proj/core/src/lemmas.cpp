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

#include "gptlab/variants/lemmas.hpp"

#include <algorithm>

#include "gptlab/core/tolerances.hpp"

namespace gptlab::variants {

namespace {

void check(LemmaReport& r, const std::string& bound, double value, double limit) {
  ++r.checks;
  if (value > limit + kExactTol) r.violations.push_back({bound, value, limit});
}

}  // namespace

LemmaReport lemma_state_check(const BipartiteState& phi) {
  LemmaReport r;
  check(r, "|a| <= 1", phi.a().norm(), 1.0);
  check(r, "|b| <= 1", phi.b().norm(), 1.0);
  const auto c = phi.core();
  for (Index k = 0; k < c.cols(); ++k) {
    check(r, "|c_" + std::to_string(k + 1) + "| <= 1", c.col(k).norm(), 1.0);
  }
  return r;
}

LemmaReport lemma_effect_check(const BipartiteEffect& e) {
  LemmaReport r;
  const double g = e.gamma();
  ++r.checks;
  if (g < -kExactTol) r.violations.push_back({"gamma >= 0", g, 0.0});
  check(r, "gamma <= 1", g, 1.0);
  const double limit = std::max(0.0, std::min(g, 1.0 - g));
  check(r, "|alpha| <= min(gamma, 1-gamma)", e.alpha().norm(), limit);
  check(r, "|beta| <= min(gamma, 1-gamma)", e.beta().norm(), limit);
  const auto core = e.core();
  for (Index k = 0; k < core.cols(); ++k) {
    check(r, "|gamma_" + std::to_string(k + 1) + "| <= min(gamma, 1-gamma)", core.col(k).norm(),
          limit);
  }
  return r;
}

}  // namespace gptlab::variants
