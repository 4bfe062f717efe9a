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

#include "gptlab/core/information.hpp"

#include <cmath>

#include "gptlab/core/tolerances.hpp"

namespace gptlab {

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double shannon_entropy(const Vector& p) {
  double h = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) h -= p(i) * std::log2(p(i));
  }
  return h;
}

Vector output_distribution(const Channel& ch) {
  return ch.conditional().transpose() * ch.prior();
}

double mutual_information(const Channel& ch) {
  const Vector py = output_distribution(ch);
  const Matrix& w = ch.conditional();
  double info = 0.0;
  for (Index x = 0; x < w.rows(); ++x) {
    const double px = ch.prior()(x);
    if (px <= 0.0) continue;
    for (Index y = 0; y < w.cols(); ++y) {
      const double pyx = w(x, y);
      if (pyx <= 0.0) continue;
      // Written as a difference of logs so that dyadic channels are exact.
      info += px * pyx * (std::log2(pyx) - std::log2(py(y)));
    }
  }
  // Rounding can leave a tiny negative value on independent channels.
  if (info < 0.0 && info > -kExactTol) return 0.0;
  return info;
}

}  // namespace gptlab
