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

#include "gptlab/protocols/baseline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "gptlab/capacity/blahut_arimoto.hpp"
#include "gptlab/core/algebra.hpp"
#include "gptlab/core/parallel.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"
#include "gptlab/hadamard/hadamard.hpp"
#include "gptlab/hst/hst.hpp"

namespace gptlab::protocols {

namespace {

int bits_for_dim(Index n) {
  const auto size = static_cast<std::uint64_t>(n) + 1;
  if (n < 1 || !std::has_single_bit(size)) {
    throw std::domain_error("separable_baseline: n must be 2^N - 1 for some N >= 1");
  }
  return std::countr_zero(size);
}

State random_state(Index dim, Rng& rng) {
  std::bernoulli_distribution pure(0.75);
  return hst::make_state(pure(rng) ? random_unit_vector(dim, rng) : random_ball_point(dim, rng));
}

}  // namespace

BaselineResult separable_baseline(Index n, int trials, std::uint64_t seed) {
  const int n_bits = bits_for_dim(n);
  if (trials < 1) throw std::invalid_argument("separable_baseline: trials must be >= 1");
  const auto size = static_cast<std::uint32_t>(n + 1);
  const BipartiteMeasurement bell = hadamard::bell_measurement(n_bits);

  std::vector<CapacityResult> results(trials);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    std::uniform_int_distribution<std::uint32_t> pick_mu(0, size - 1);
    std::uniform_int_distribution<Index> count(2, 8);
    std::uniform_int_distribution<Index> local_outcomes(1, 4);
    std::uniform_int_distribution<int> parts_dist(1, 8);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    const BipartiteState initial = product_state(random_state(n, rng), random_state(n, rng));
    const Index nx = count(rng);
    const Index ny = count(rng);
    std::uniform_int_distribution<Index> label(0, ny - 1);

    std::vector<std::uint32_t> mus(nx);
    for (auto& mu : mus) mu = pick_mu(rng);
    // A-side directions separating the encoded local states.
    std::vector<Vector> hints;
    const Vector a = initial.a();
    for (Index x = 0; x < nx; ++x)
      for (Index z = x + 1; z < nx; ++z) {
        const Vector d = (hadamard::hadamard_vector(mus[x], n_bits).to_real() -
                          hadamard::hadamard_vector(mus[z], n_bits).to_real())
                             .tail(n)
                             .cwiseProduct(a);
        if (d.norm() > 1e-9) hints.push_back(d / d.norm());
      }

    std::vector<Matrix> dec(ny, Matrix::Zero(size, size));
    const int parts = parts_dist(rng);
    const Vector weights = random_simplex(parts, rng);
    for (int c = 0; c < parts; ++c) {
      if (unif(rng) < 0.1) {
        for (const auto& e : bell.effects) dec[label(rng)] += weights(c) * e.matrix();
        continue;
      }
      const Measurement ma = hst::random_measurement(n, local_outcomes(rng), rng, hints);
      const Measurement mb = hst::random_measurement(n, local_outcomes(rng), rng);
      for (const auto& ea : ma.effects)
        for (const auto& eb : mb.effects)
          dec[label(rng)] += weights(c) * product_effect(ea, eb).matrix();
    }

    Matrix w(nx, ny);
    for (Index x = 0; x < nx; ++x) {
      const BipartiteState phi_x =
          apply_on_a(hadamard::local_transformation(mus[x], n_bits), initial);
      for (Index y = 0; y < ny; ++y) w(x, y) = bipartite_contract(BipartiteEffect(dec[y]), phi_x);
    }
    if (w.minCoeff() < -kExactTol) {
      throw std::logic_error("separable_baseline: negative outcome probability");
    }
    w = w.cwiseMax(0.0);
    for (Index x = 0; x < nx; ++x) w.row(x) /= w.row(x).sum();
    results[i] = blahut_arimoto(w, {1e-9, 20000});
  });

  BaselineResult out;
  out.trials = trials;
  for (const auto& r : results) {
    out.max_info_bits = std::max(out.max_info_bits, r.capacity_bits);
    if (!r.converged) ++out.unconverged;
  }
  return out;
}

Channel product_bell_channel(const State& a, const State& b, int n_bits) {
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n_bits));
  if (a.entries().size() != size || b.entries().size() != size) {
    throw std::invalid_argument("product_bell_channel: states must have dimension 2^N - 1");
  }
  const BipartiteState initial = product_state(a, b);
  const BipartiteMeasurement bell = hadamard::bell_measurement(n_bits);
  Matrix w(size, size);
  for (std::uint32_t x = 0; x < size; ++x) {
    const BipartiteState phi_x = apply_on_a(hadamard::local_transformation(x, n_bits), initial);
    for (std::uint32_t y = 0; y < size; ++y) w(x, y) = bipartite_contract(bell.effects[y], phi_x);
  }
  return Channel::with_uniform_prior(w);
}

double no_signalling_deviation(int n_bits, int trials, std::uint64_t seed) {
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n_bits));
  const Index dim = size - 1;
  const BipartiteState phi0 = hadamard::entangled_state(0, n_bits);
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<Index> outcomes(1, 4);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Measurement ma = hst::random_measurement(dim, outcomes(rng), rng);
    const Measurement mb = hst::random_measurement(dim, outcomes(rng), rng);
    for (const auto& eb : mb.effects) {
      double lo = 2.0, hi = -1.0;
      for (std::uint32_t x = 0; x < size; ++x) {
        const BipartiteState phi_x = apply_on_a(hadamard::local_transformation(x, n_bits), phi0);
        // Marginal over Alice's outcomes of the product decoding.
        double marginal = 0.0;
        for (const auto& ea : ma.effects) marginal += bipartite_contract(product_effect(ea, eb), phi_x);
        lo = std::min(lo, marginal);
        hi = std::max(hi, marginal);
      }
      worst = std::max(worst, hi - lo);
    }
  }
  return worst;
}

}  // namespace gptlab::protocols
