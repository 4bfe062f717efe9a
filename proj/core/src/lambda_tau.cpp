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

#include "gptlab/variants/lambda_tau.hpp"

#include <cmath>
#include <sstream>

#include "gptlab/core/algebra.hpp"
#include "gptlab/core/information.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"
#include "gptlab/hadamard/hadamard.hpp"

namespace gptlab::variants {

namespace {

Matrix block(double scale, std::uint32_t mu, int n) {
  Matrix m = hadamard::hadamard_vector(mu, n).to_real().asDiagonal();
  m.bottomRightCorner(m.rows() - 1, m.cols() - 1) *= scale;
  return m;
}

Matrix embed_rotation(const Matrix& r) {
  Matrix t = Matrix::Identity(r.rows() + 1, r.cols() + 1);
  t.bottomRightCorner(r.rows(), r.cols()) = r;
  return t;
}

}  // namespace

double lt_product_lower_bound(int n_bits) {
  return -1.0 / (std::ldexp(1.0, n_bits) - 1.0);
}

double lt_product_upper_bound(int n_bits) { return 1.0 / (std::ldexp(1.0, n_bits) - 3.0); }

LambdaTauTheory LambdaTauTheory::create(int n_bits, double lambda, double tau) {
  if (n_bits < 2 || n_bits > hadamard::kMaxBits) {
    throw std::domain_error("lambda-tau theory needs 2 <= N <= 20 (N = 1 is the classical bit)");
  }
  if (std::abs(lambda) > 1.0 || std::abs(tau) > 1.0) {
    throw std::domain_error("lambda-tau theory needs |lambda| <= 1 and |tau| <= 1");
  }
  const double p = lambda * tau;
  const double lo = lt_product_lower_bound(n_bits);
  const double hi = lt_product_upper_bound(n_bits);
  if (p < lo - kExactTol || p > hi + kExactTol) {
    std::ostringstream os;
    os.precision(17);
    os << "admissibility violated: need -1/(2^N-1) <= lambda*tau <= 1/(2^N-3), i.e. " << lo
       << " <= " << p << " <= " << hi << " for N = " << n_bits;
    throw AdmissibilityError(os.str());
  }
  return LambdaTauTheory{n_bits, lambda, tau};
}

BipartiteState LambdaTauTheory::state(std::uint32_t mu) const {
  return BipartiteState(block(lambda, mu, n_bits));
}

BipartiteEffect LambdaTauTheory::effect(std::uint32_t mu) const {
  return BipartiteEffect(std::ldexp(1.0, -n_bits) * block(tau, mu, n_bits));
}

BipartiteMeasurement LambdaTauTheory::measurement() const {
  BipartiteMeasurement m;
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n_bits));
  for (std::uint32_t y = 0; y < size; ++y) m.effects.push_back(effect(y));
  return m;
}

BipartiteState LambdaTauTheory::witness_state() const {
  const Index size = hadamard::block_size(n_bits);
  Vector flip = -Vector::Ones(size);
  flip(0) = 1.0;
  flip(1) = 1.0;
  return BipartiteState(state(0).matrix() * flip.asDiagonal());
}

BipartiteState LambdaTauTheory::rotated_state(const Matrix& r_a, const Matrix& r_b) const {
  return BipartiteState(embed_rotation(r_a) * state(0).matrix() * embed_rotation(r_b).transpose());
}

Channel lt_channel(const LambdaTauTheory& theory) {
  const int n = theory.n_bits;
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n));
  const BipartiteMeasurement meas = theory.measurement();
  const BipartiteState phi0 = theory.state(0);
  const double lt = theory.product();
  const double base = std::ldexp(1.0 - lt, -n);
  Matrix w(size, size);
  for (std::uint32_t x = 0; x < size; ++x) {
    const BipartiteState phi_x = apply_on_a(hadamard::local_transformation(x, n), phi0);
    for (std::uint32_t y = 0; y < size; ++y) {
      w(x, y) = bipartite_contract(meas.effects[y], phi_x);
      const double closed = (x == y ? lt : 0.0) + base;
      if (std::abs(w(x, y) - closed) > kExactTol) {
        std::ostringstream os;
        os << "lt_channel: contraction " << w(x, y) << " != closed form " << closed << " at x=" << x
           << " y=" << y;
        throw std::logic_error(os.str());
      }
    }
  }
  return Channel::with_uniform_prior(w);
}

double lt_q(int n_bits) {
  const double d = std::ldexp(1.0, n_bits);
  return std::ldexp(1.0, 1 - n_bits) * (d - 2.0) / (d - 3.0);
}

double lt_entropy(double p, int n_bits) {
  return binary_entropy(p) + (1.0 - p) * std::log2(std::ldexp(1.0, n_bits) - 1.0);
}

double lt_optimal_info(int n_bits) {
  if (n_bits < 2) throw std::domain_error("lt_optimal_info: N must be >= 2");
  return n_bits - lt_entropy(lt_q(n_bits), n_bits);
}

bool AdmissibilityProbe::admissible() const {
  return min_probability >= -kExactTol && max_probability <= 1.0 + kExactTol;
}

AdmissibilityProbe probe_admissibility(int n_bits, double lambda_tau, std::uint64_t seed,
                                       int rotations) {
  if (std::abs(lambda_tau) > 1.0) throw std::domain_error("probe_admissibility: |lambda tau| > 1");
  const LambdaTauTheory theory{n_bits, 1.0, lambda_tau};
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n_bits));
  const Index dim = size - 1;

  std::vector<std::pair<std::string, BipartiteState>> states;
  for (std::uint32_t mu = 0; mu < size; ++mu) {
    states.emplace_back("phi_" + std::to_string(mu), theory.state(mu));
  }
  states.emplace_back("phi_0 T'", theory.witness_state());
  Rng rng = make_rng(seed);
  for (int k = 0; k < rotations; ++k) {
    states.emplace_back("rotated #" + std::to_string(k),
                        theory.rotated_state(random_rotation(dim, rng), random_rotation(dim, rng)));
  }

  AdmissibilityProbe probe;
  probe.lambda_tau = lambda_tau;
  probe.min_probability = 1.0;
  probe.max_probability = 0.0;
  const BipartiteMeasurement meas = theory.measurement();
  for (const auto& e : meas.effects) {
    for (const auto& [label, phi] : states) {
      const double p = bipartite_contract(e, phi);
      if (p < probe.min_probability) {
        probe.min_probability = p;
        probe.witness = label;
      }
      probe.max_probability = std::max(probe.max_probability, p);
    }
  }
  return probe;
}

}  // namespace gptlab::variants
