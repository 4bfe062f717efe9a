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

#include "gptlab/variants/weak.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gptlab/capacity/blahut_arimoto.hpp"
#include "gptlab/core/algebra.hpp"
#include "gptlab/core/parallel.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"
#include "gptlab/hadamard/hadamard.hpp"
#include "gptlab/hst/hst.hpp"

namespace gptlab::variants {

namespace {

Matrix block(double scale, std::uint32_t mu, int n) {
  Matrix m = hadamard::hadamard_vector(mu, n).to_real().asDiagonal();
  m.bottomRightCorner(m.rows() - 1, m.cols() - 1) *= scale;
  return m;
}

}  // namespace

WeakTheory WeakTheory::create(int n_bits, double lambda) {
  if (n_bits < 2 || n_bits > hadamard::kMaxBits) {
    throw std::domain_error("weak theory needs 2 <= N <= 20");
  }
  if (!(std::abs(lambda) <= 1.0)) throw std::domain_error("weak theory needs |lambda| <= 1");
  return WeakTheory{n_bits, lambda};
}

BipartiteState WeakTheory::state(std::uint32_t mu) const {
  return BipartiteState(block(lambda, mu, n_bits));
}

BipartiteEffect WeakTheory::effect(std::uint32_t y) const {
  const double sign = lambda < 0.0 ? -1.0 : 1.0;
  return BipartiteEffect(std::ldexp(1.0, -n_bits) * block(sign, y, n_bits));
}

BipartiteMeasurement WeakTheory::measurement() const {
  BipartiteMeasurement m;
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n_bits));
  for (std::uint32_t y = 0; y < size; ++y) m.effects.push_back(effect(y));
  return m;
}

Channel weak_dense_coding(const WeakTheory& theory) {
  const int n = theory.n_bits;
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n));
  const BipartiteMeasurement meas = theory.measurement();
  const BipartiteState phi0 = theory.state(0);
  Matrix w(size, size);
  for (std::uint32_t x = 0; x < size; ++x) {
    const BipartiteState phi_x = apply_on_a(hadamard::local_transformation(x, n), phi0);
    for (std::uint32_t y = 0; y < size; ++y) w(x, y) = bipartite_contract(meas.effects[y], phi_x);
  }
  return Channel::with_uniform_prior(w);
}

WeakSearchResult weak_random_search(const WeakTheory& theory, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("weak_random_search: trials must be >= 1");
  const int n = theory.n_bits;
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n));
  const Index dim = size - 1;
  const BipartiteMeasurement bell = theory.measurement();

  std::vector<CapacityResult> results(trials);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    std::uniform_int_distribution<std::uint32_t> pick_mu(0, size - 1);
    std::uniform_int_distribution<Index> count(2, std::min<Index>(size, 8));
    std::uniform_int_distribution<int> parts_dist(1, 4);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    // Initial state: entangled, or mixed with a random product state.
    BipartiteState initial = theory.state(pick_mu(rng));
    if (unif(rng) < 0.3) {
      Vector ra(dim + 1), rb(dim + 1);
      ra << 1.0, random_ball_point(dim, rng);
      rb << 1.0, random_ball_point(dim, rng);
      initial = initial.mix(product_state(State(ra), State(rb)), unif(rng));
    }
    const Index nx = count(rng);
    const Index ny = count(rng);
    std::uniform_int_distribution<Index> label(0, ny - 1);

    std::vector<Matrix> dec(ny, Matrix::Zero(size, size));
    const int parts = parts_dist(rng);
    const Vector weights = random_simplex(parts, rng);
    for (int c = 0; c < parts; ++c) {
      const double kind = unif(rng);
      if (kind < 0.45) {
        for (const auto& e : bell.effects) dec[label(rng)] += weights(c) * e.matrix();
      } else if (kind < 0.9) {
        const Measurement ma = hst::canonical_measurement(random_unit_vector(dim, rng));
        const Measurement mb = hst::canonical_measurement(random_unit_vector(dim, rng));
        for (const auto& ea : ma.effects)
          for (const auto& eb : mb.effects)
            dec[label(rng)] += weights(c) * product_effect(ea, eb).matrix();
      } else {
        dec[label(rng)](0, 0) += weights(c);
      }
    }

    Matrix w(nx, ny);
    for (Index x = 0; x < nx; ++x) {
      const BipartiteState phi_x = apply_on_a(hadamard::local_transformation(pick_mu(rng), n), initial);
      for (Index y = 0; y < ny; ++y) w(x, y) = bipartite_contract(BipartiteEffect(dec[y]), phi_x);
    }
    if (w.minCoeff() < -kExactTol) {
      throw std::logic_error("weak_random_search: negative outcome probability");
    }
    w = w.cwiseMax(0.0);
    for (Index x = 0; x < nx; ++x) w.row(x) /= w.row(x).sum();
    results[i] = blahut_arimoto(w, {1e-9, 20000});
  });

  WeakSearchResult out;
  out.trials = trials;
  for (const auto& r : results) {
    out.max_info_bits = std::max(out.max_info_bits, r.capacity_bits);
    if (!r.converged) ++out.unconverged;
  }
  return out;
}

}  // namespace gptlab::variants
