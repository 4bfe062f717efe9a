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

#include "gptlab/variants/embedded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gptlab/core/algebra.hpp"
#include "gptlab/core/information.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"
#include "gptlab/hadamard/hadamard.hpp"

namespace gptlab::variants {

EmbeddedTheory EmbeddedTheory::create(int n_bits, Index embed_dim) {
  if (n_bits < 2 || n_bits > hadamard::kMaxBits) {
    throw std::domain_error("embedded theory needs 2 <= N <= 20");
  }
  if (embed_dim < 1) throw std::domain_error("embedded theory needs m >= 1");
  return EmbeddedTheory{n_bits, embed_dim};
}

Index EmbeddedTheory::hidden_dim() const { return hadamard::local_dim(n_bits); }

BipartiteState EmbeddedTheory::state(std::uint32_t mu) const {
  Matrix m = Matrix::Zero(vector_size(), vector_size());
  const Index size = hadamard::block_size(n_bits);
  m.topLeftCorner(size, size) = hadamard::entangled_state(mu, n_bits).matrix();
  return BipartiteState(std::move(m));
}

BipartiteEffect EmbeddedTheory::effect(std::uint32_t y) const {
  return BipartiteEffect(std::ldexp(1.0, -n_bits) * state(y).matrix());
}

BipartiteMeasurement EmbeddedTheory::measurement() const {
  BipartiteMeasurement m;
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n_bits));
  for (std::uint32_t y = 0; y < size; ++y) m.effects.push_back(effect(y));
  return m;
}

Transformation EmbeddedTheory::transformation(std::uint32_t mu, const Matrix& rotation) const {
  if (rotation.rows() != embed_dim || rotation.cols() != embed_dim) {
    throw std::invalid_argument("EmbeddedTheory::transformation: rotation must be m x m");
  }
  Matrix t = Matrix::Zero(vector_size(), vector_size());
  const Index size = hadamard::block_size(n_bits);
  t.topLeftCorner(size, size) = hadamard::local_transformation(mu, n_bits).matrix();
  t.bottomRightCorner(embed_dim, embed_dim) = rotation;
  return Transformation(std::move(t));
}

State EmbeddedTheory::local_state(const Vector& r) const {
  if (r.size() != embed_dim) throw std::invalid_argument("local_state: r must have length m");
  if (r.norm() > 1.0 + kExactTol) throw std::domain_error("local_state: |r| exceeds 1");
  Vector v = Vector::Zero(vector_size());
  v(0) = 1.0;
  v.tail(embed_dim) = r;
  return State(std::move(v));
}

Effect EmbeddedTheory::local_effect(double chi, const Vector& alpha) const {
  if (alpha.size() != embed_dim) throw std::invalid_argument("local_effect: alpha must have length m");
  Vector v = Vector::Zero(vector_size());
  v(0) = chi;
  v.tail(embed_dim) = alpha;
  return Effect(std::move(v));
}

EmbeddedRun embedded_dense_coding(const EmbeddedTheory& theory, std::uint64_t rotation_seed) {
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(theory.n_bits));
  const BipartiteMeasurement meas = theory.measurement();
  const BipartiteState phi0 = theory.state(0);
  Rng rng = make_rng(rotation_seed);
  Matrix w(size, size);
  double residual = 0.0;
  for (std::uint32_t x = 0; x < size; ++x) {
    const Matrix r = random_rotation(theory.embed_dim, rng);
    const BipartiteState phi_x = apply_on_a(theory.transformation(x, r), phi0);
    for (std::uint32_t y = 0; y < size; ++y) {
      w(x, y) = bipartite_contract(meas.effects[y], phi_x);
      residual = std::max(residual, std::abs(w(x, y) - (x == y ? 1.0 : 0.0)));
    }
  }
  if (residual > kExactTol) {
    std::ostringstream os;
    os << "embedded_dense_coding: F_y . Phi_x deviates from delta by " << residual;
    throw std::logic_error(os.str());
  }
  Channel ch = Channel::with_uniform_prior(w);
  const double info = mutual_information(ch);
  return EmbeddedRun{std::move(ch), info, residual};
}

bool TlWitnessReport::ok() const {
  return max_spread <= kExactTol && max_product_error <= kExactTol &&
         std::abs(min_state_distance - expected_distance) <= kExactTol && min_state_distance > 0.0;
}

TlWitnessReport tl_violation_witness(const EmbeddedTheory& theory, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("tl_violation_witness: trials must be >= 1");
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(theory.n_bits));
  std::vector<BipartiteState> states;
  for (std::uint32_t mu = 0; mu < size; ++mu) states.push_back(theory.state(mu));

  TlWitnessReport report;
  report.trials = trials;
  report.expected_distance = 2.0 * std::ldexp(1.0, theory.n_bits - 1);
  report.min_state_distance = std::numeric_limits<double>::infinity();
  for (std::uint32_t mu = 1; mu < size; ++mu) {
    const double d = (states[0].matrix() - states[mu].matrix()).cwiseAbs().sum();
    report.min_state_distance = std::min(report.min_state_distance, d);
  }

  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    const double chi = unif(rng);
    const double xi = unif(rng);
    const Vector alpha = std::min(chi, 1.0 - chi) * random_ball_point(theory.embed_dim, rng);
    const Vector beta = std::min(xi, 1.0 - xi) * random_ball_point(theory.embed_dim, rng);
    const BipartiteEffect e =
        product_effect(theory.local_effect(chi, alpha), theory.local_effect(xi, beta));
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& phi : states) {
      const double p = bipartite_contract(e, phi);
      lo = std::min(lo, p);
      hi = std::max(hi, p);
      report.max_product_error = std::max(report.max_product_error, std::abs(p - chi * xi));
    }
    report.max_spread = std::max(report.max_spread, hi - lo);
  }
  return report;
}

}  // namespace gptlab::variants
