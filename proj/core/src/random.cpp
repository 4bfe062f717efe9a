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

#include "gptlab/core/random.hpp"

#include <cmath>
#include <stdexcept>

namespace gptlab {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream) { return Rng(derive_seed(seed, stream)); }

Vector random_unit_vector(Index n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_unit_vector: n must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  double norm = 0.0;
  do {
    for (Index i = 0; i < n; ++i) v(i) = normal(rng);
    norm = v.norm();
  } while (norm < 1e-300);
  return v / norm;
}

Vector random_ball_point(Index n, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double radius = std::pow(unif(rng), 1.0 / static_cast<double>(n));
  return radius * random_unit_vector(n, rng);
}

Vector random_simplex(Index k, Rng& rng) {
  if (k < 1) throw std::invalid_argument("random_simplex: k must be >= 1");
  std::exponential_distribution<double> expo(1.0);
  Vector w(k);
  for (Index i = 0; i < k; ++i) w(i) = expo(rng);
  return w / w.sum();
}

Matrix random_rotation(Index m, Rng& rng) {
  if (m < 1) throw std::invalid_argument("random_rotation: m must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) g(i, j) = normal(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < m; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

}  // namespace gptlab
