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

#include "gptlab/capacity/blahut_arimoto.hpp"

#include <cmath>
#include <stdexcept>

#include "gptlab/core/information.hpp"

namespace gptlab {

CapacityResult blahut_arimoto(const Matrix& conditional, BlahutArimotoOptions opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("blahut_arimoto: tol must be > 0");
  if (opts.max_iter < 1) throw std::invalid_argument("blahut_arimoto: max_iter must be >= 1");
  // Validates the table.
  const Channel validated = Channel::with_uniform_prior(conditional);
  const Matrix& w = validated.conditional();
  const Index nx = w.rows();
  const Index ny = w.cols();

  // sum_y W log2 W per row; only log2 q changes between iterations.
  Vector neg_entropy = Vector::Zero(nx);
  for (Index x = 0; x < nx; ++x)
    for (Index y = 0; y < ny; ++y)
      if (w(x, y) > 0.0) neg_entropy(x) += w(x, y) * std::log2(w(x, y));

  CapacityResult result;
  Vector p = validated.prior();
  Vector d(nx);
  Vector log_q(ny);
  for (int it = 1; it <= opts.max_iter; ++it) {
    const Vector q = w.transpose() * p;
    for (Index y = 0; y < ny; ++y) log_q(y) = q(y) > 0.0 ? std::log2(q(y)) : 0.0;
    for (Index x = 0; x < nx; ++x) {
      double cross = 0.0;
      for (Index y = 0; y < ny; ++y)
        if (w(x, y) > 0.0) cross += w(x, y) * log_q(y);
      d(x) = neg_entropy(x) - cross;
    }
    // Work relative to max D to keep 2^D in range.
    const double d_max = d.maxCoeff();
    Vector c(nx);
    for (Index x = 0; x < nx; ++x) c(x) = std::exp2(d(x) - d_max);
    const double z = p.dot(c);
    const double lower = d_max + std::log2(z);
    result.iterations = it;
    result.upper_bound_bits = d_max;
    if (d_max - lower < opts.tol) {
      result.converged = true;
      break;
    }
    p = p.cwiseProduct(c) / z;
  }
  result.optimal_prior = p;
  result.capacity_bits = mutual_information(Channel(p / p.sum(), w));
  return result;
}

}  // namespace gptlab
