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

#include "gptlab/protocols/teleport.hpp"

#include <cmath>
#include <stdexcept>

#include "gptlab/core/algebra.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"
#include "gptlab/hadamard/hadamard.hpp"
#include "gptlab/hst/hst.hpp"

namespace gptlab::protocols {

bool TeleportationRun::ok() const {
  return max_residual < kExactTol && max_px_deviation < kExactTol;
}

bool SwapRun::ok() const { return max_residual < kExactTol && max_px_deviation < kExactTol; }

TeleportationRun teleport(const State& input, int n_bits, std::uint64_t seed, int bob_effects) {
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n_bits));
  const Index dim = size - 1;
  if (input.dim() != dim) {
    throw std::invalid_argument("teleport: input state must have dimension 2^N - 1");
  }
  if (input.bloch().norm() > 1.0 + kExactTol) {
    throw std::domain_error("teleport: input state outside the unit ball");
  }
  if (bob_effects < 0) throw std::invalid_argument("teleport: bob_effects must be >= 0");

  TeleportationRun run{n_bits, input, {}, {}, {}, 0.0, 0.0, {}};
  Rng rng = make_rng(seed);
  for (int k = 0; k < bob_effects; ++k) {
    run.bob_effects.push_back(hst::make_extremal_effect(random_unit_vector(dim, rng)));
  }
  run.bob_effects.push_back(Effect::unit(dim));

  const Vector& w = input.entries();
  const BipartiteState phi0 = hadamard::entangled_state(0, n_bits);
  const double expected_px = std::ldexp(1.0, -n_bits);
  const auto ny = run.bob_effects.size();
  run.joint.resize(size, static_cast<Index>(ny));
  run.p_x.resize(size);

  for (std::uint32_t x = 0; x < size; ++x) {
    const Matrix e = hadamard::entangled_effect(x, n_bits).matrix();  // indices (A', A)
    const Matrix m =
        apply_on_b(hadamard::local_transformation(x, n_bits), phi0).matrix();  // (A, B)
    // v(k) = sum_ij E(i,j) omega(i) M(j,k): Bob's unnormalised conditional state.
    Vector v = Vector::Zero(size);
    for (Index i = 0; i < size; ++i)
      for (Index j = 0; j < size; ++j) {
        const double eij = e(i, j) * w(i);
        if (eij == 0.0) continue;
        for (Index k = 0; k < size; ++k) v(k) += eij * m(j, k);
      }
    run.p_x(x) = v(0);
    run.max_px_deviation = std::max(run.max_px_deviation, std::abs(v(0) - expected_px));
    for (std::size_t y = 0; y < ny; ++y) {
      const Vector& ey = run.bob_effects[y].entries();
      const double joint = ey.dot(v);
      run.joint(x, static_cast<Index>(y)) = joint;
      const double residual = std::abs(joint / v(0) - ey.dot(w));
      if (residual > run.max_residual || (x == 0 && y == 0)) {
        run.max_residual = std::max(run.max_residual, residual);
        run.worst = {x, y, residual};
      }
    }
  }
  return run;
}

SwapRun entanglement_swap(const BipartiteState& phi, int n_bits, std::uint64_t seed,
                          int product_effects) {
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n_bits));
  if (phi.rows() != size || phi.cols() != size) {
    throw std::invalid_argument("entanglement_swap: state must be 2^N x 2^N");
  }
  const Index dim = size - 1;
  const BipartiteMeasurement bell = hadamard::bell_measurement(n_bits);
  std::vector<BipartiteEffect> checks = bell.effects;
  Rng rng = make_rng(seed);
  for (int k = 0; k < product_effects; ++k) {
    checks.push_back(product_effect(hst::make_extremal_effect(random_unit_vector(dim, rng)),
                                    hst::make_extremal_effect(random_unit_vector(dim, rng))));
  }
  checks.push_back(BipartiteEffect::unit(size, size));

  SwapRun run;
  run.n_bits = n_bits;
  run.joint.resize(size, size);
  run.conditional.resize(size, size);
  run.p_x.resize(size);
  const BipartiteState phi0 = hadamard::entangled_state(0, n_bits);
  const double expected_px = std::ldexp(1.0, -n_bits);
  const Matrix& p = phi.matrix();  // (A', C)

  for (std::uint32_t x = 0; x < size; ++x) {
    const Matrix e = hadamard::entangled_effect(x, n_bits).matrix();  // (A', A)
    const Matrix m =
        apply_on_b(hadamard::local_transformation(x, n_bits), phi0).matrix();  // (A, B)
    // z(k,l) = sum_ij E(i,j) phi(i,l) M(j,k): unnormalised state left on BC.
    Matrix z = Matrix::Zero(size, size);
    for (Index i = 0; i < size; ++i)
      for (Index j = 0; j < size; ++j) {
        if (e(i, j) == 0.0) continue;
        for (Index k = 0; k < size; ++k) {
          const double ejk = e(i, j) * m(j, k);
          if (ejk == 0.0) continue;
          for (Index l = 0; l < size; ++l) z(k, l) += ejk * p(i, l);
        }
      }
    const double px = z(0, 0);
    run.p_x(x) = px;
    run.max_px_deviation = std::max(run.max_px_deviation, std::abs(px - expected_px));
    for (std::size_t y = 0; y < checks.size(); ++y) {
      const double joint = z.cwiseProduct(checks[y].matrix()).sum();
      const double residual = std::abs(joint / px - bipartite_contract(checks[y], phi));
      if (y < size) {
        run.joint(x, static_cast<Index>(y)) = joint;
        run.conditional(x, static_cast<Index>(y)) = joint / px;
      }
      if (residual > run.max_residual || (x == 0 && y == 0)) {
        run.max_residual = std::max(run.max_residual, residual);
        run.worst = {x, y, residual};
      }
    }
  }
  return run;
}

}  // namespace gptlab::protocols
