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

#include "gptlab/capacity/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gptlab/capacity/blahut_arimoto.hpp"
#include "gptlab/core/algebra.hpp"
#include "gptlab/core/parallel.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"
#include "gptlab/hadamard/hadamard.hpp"
#include "gptlab/hst/hst.hpp"
#include "gptlab/protocols/dense_coding.hpp"

namespace gptlab::capacity {

double dimension_upper_bound(int n_bits) {
  if (n_bits < 1) throw std::domain_error("dimension_upper_bound: N must be >= 1");
  return 2.0 * n_bits;
}

double weak_entanglement_bound(double lambda, int n_bits) {
  if (n_bits < 2) throw std::domain_error("weak_entanglement_bound: N must be >= 2");
  if (!(std::abs(lambda) <= 1.0)) throw std::domain_error("weak_entanglement_bound: |lambda| > 1");
  return std::log2(1.0 + std::abs(lambda) * (std::ldexp(1.0, n_bits) - 1.0));
}

double weak_threshold(int j, int n_bits) {
  if (j != 0 && j != 1) throw std::domain_error("weak_threshold: j must be 0 or 1");
  if (n_bits < 2) throw std::domain_error("weak_threshold: N must be >= 2");
  return (1.0 + 2.0 * j) / (std::ldexp(1.0, n_bits) - 1.0);
}

double dc_capacity_lower_bound(const TheoryConfig& config) {
  return protocols::dense_coding(config).info_bits;
}

bool SandwichResult::ok() const {
  return upper + kOptTol >= best_observed && best_observed + kOptTol >= lower &&
         lower + kOptTol >= n_bits;
}

SandwichResult bipartite_capacity_search(int n_bits, int trials, std::uint64_t seed) {
  if (trials < 0) throw std::invalid_argument("bipartite_capacity_search: trials must be >= 0");
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n_bits));
  const Index dim = size - 1;
  const BipartiteMeasurement bell = hadamard::bell_measurement(n_bits);
  const BipartiteState phi0 = hadamard::entangled_state(0, n_bits);

  SandwichResult out;
  out.n_bits = n_bits;
  out.trials = trials;
  out.upper = dimension_upper_bound(n_bits);
  out.lower = dc_capacity_lower_bound(TheoryConfig{TheoryKind::Base, n_bits});
  const Matrix identity = protocols::dense_coding(TheoryConfig{TheoryKind::Base, n_bits})
                              .channel.conditional();
  out.best_observed = blahut_arimoto(identity).capacity_bits;

  std::vector<double> found(trials, 0.0);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    std::uniform_int_distribution<std::uint32_t> pick_mu(0, size - 1);
    std::uniform_int_distribution<Index> count(2, size);
    std::uniform_int_distribution<int> parts_dist(1, 3);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    BipartiteState initial = phi0;
    if (unif(rng) < 0.3) {
      Vector ra(size), rb(size);
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
      if (kind < 0.6) {
        for (const auto& e : bell.effects) dec[label(rng)] += weights(c) * e.matrix();
      } else if (kind < 0.95) {
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
      const BipartiteState phi_x =
          apply_on_a(hadamard::local_transformation(pick_mu(rng), n_bits), initial);
      for (Index y = 0; y < ny; ++y) w(x, y) = bipartite_contract(BipartiteEffect(dec[y]), phi_x);
    }
    if (w.minCoeff() < -kExactTol) {
      throw std::logic_error("bipartite_capacity_search: negative outcome probability");
    }
    w = w.cwiseMax(0.0);
    for (Index x = 0; x < nx; ++x) w.row(x) /= w.row(x).sum();
    found[i] = blahut_arimoto(w, {1e-9, 20000}).capacity_bits;
  });
  for (double f : found) out.best_observed = std::max(out.best_observed, f);
  return out;
}

}  // namespace gptlab::capacity
