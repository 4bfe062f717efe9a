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

#include "gptlab/hst/hst.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gptlab/capacity/blahut_arimoto.hpp"
#include "gptlab/core/algebra.hpp"
#include "gptlab/core/parallel.hpp"
#include "gptlab/core/tolerances.hpp"

namespace gptlab::hst {

namespace {

void check_dim(Index n) {
  if (n < 1 || n > kMaxDim) {
    std::ostringstream os;
    os << "hst: dimension " << n << " outside [1, " << kMaxDim << "]";
    throw std::domain_error(os.str());
  }
}

Vector with_unit(double head, const Vector& tail) {
  Vector v(tail.size() + 1);
  v(0) = head;
  v.tail(tail.size()) = tail;
  return v;
}

}  // namespace

State HstState::state() const { return make_state(r); }

bool HstState::pure() const { return std::abs(r.norm() - 1.0) <= kExactTol; }

Effect HstEffect::effect() const { return Effect(gamma * with_unit(1.0, m)); }

State make_state(const Vector& r) {
  check_dim(r.size());
  const double norm = r.norm();
  if (norm > 1.0 + kExactTol) {
    std::ostringstream os;
    os << "make_state: |r| = " << norm << " exceeds 1";
    throw std::domain_error(os.str());
  }
  return State(with_unit(1.0, r));
}

Effect make_extremal_effect(const Vector& m) {
  check_dim(m.size());
  const double norm = m.norm();
  if (std::abs(norm - 1.0) > kExactTol) {
    std::ostringstream os;
    os << "make_extremal_effect: |m| = " << norm << ", expected 1";
    throw std::domain_error(os.str());
  }
  return Effect(0.5 * with_unit(1.0, m));
}

Measurement canonical_measurement(const Vector& m) {
  return Measurement{{make_extremal_effect(m), make_extremal_effect(-m)}};
}

LocalBall ball(Index n) {
  check_dim(n);
  return LocalBall{0, n};
}

double capacity_upper_bound(double m_norm, double r_norm) {
  if (m_norm < 0.0 || r_norm < 0.0) {
    throw std::domain_error("capacity_upper_bound: norms must be non-negative");
  }
  return std::log2(1.0 + m_norm * r_norm);
}

Channel one_bit_protocol(Index n, const std::optional<Vector>& decode) {
  check_dim(n);
  Vector axis = Vector::Zero(n);
  axis(0) = 1.0;
  const Measurement meas = canonical_measurement(decode ? *decode : axis);
  const State states[2] = {make_state(axis), make_state(-axis)};
  Matrix w(2, 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) w(x, y) = contract(meas.effects[y], states[x]);
  return Channel::with_uniform_prior(w);
}

Measurement random_measurement(Index n, Index k, Rng& rng, const std::vector<Vector>& hints) {
  check_dim(n);
  if (k < 1) throw std::invalid_argument("random_measurement: k must be >= 1");
  std::uniform_int_distribution<Index> label(0, k - 1);
  std::uniform_int_distribution<int> parts_dist(1, 4);
  std::bernoulli_distribution trivial(0.15);
  std::bernoulli_distribution hinted(0.5);
  std::uniform_int_distribution<std::size_t> pick(0, hints.empty() ? 0 : hints.size() - 1);

  const int parts = parts_dist(rng);
  const Vector weights = random_simplex(parts, rng);
  std::vector<Vector> acc(k, Vector::Zero(n + 1));
  for (int c = 0; c < parts; ++c) {
    if (trivial(rng)) {
      acc[label(rng)] += weights(c) * Effect::unit(n).entries();
      continue;
    }
    const Vector dir = !hints.empty() && hinted(rng) ? hints[pick(rng)] : random_unit_vector(n, rng);
    const Measurement canon = canonical_measurement(dir);
    acc[label(rng)] += weights(c) * canon.effects[0].entries();
    acc[label(rng)] += weights(c) * canon.effects[1].entries();
  }
  Measurement m;
  for (auto& v : acc) m.effects.emplace_back(std::move(v));
  return m;
}

CapacitySearchResult random_capacity_search(Index n, int trials, std::uint64_t seed) {
  check_dim(n);
  if (trials < 1) throw std::invalid_argument("random_capacity_search: trials must be >= 1");
  std::vector<CapacityResult> results(trials);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    std::uniform_int_distribution<Index> count(2, 8);
    std::bernoulli_distribution pure(0.75);
    const Index nx = count(rng);
    const Index ny = count(rng);
    std::vector<State> states;
    for (Index x = 0; x < nx; ++x) {
      states.push_back(make_state(pure(rng) ? random_unit_vector(n, rng) : random_ball_point(n, rng)));
    }
    // Directions separating pairs of encoded states; random directions
    // alone almost never resolve the encoding once n is large.
    std::vector<Vector> hints;
    for (Index a = 0; a < nx; ++a)
      for (Index b = a + 1; b < nx; ++b) {
        const Vector d = states[a].bloch() - states[b].bloch();
        if (d.norm() > 1e-9) hints.push_back(d / d.norm());
      }
    const Measurement meas = random_measurement(n, ny, rng, hints);
    Matrix w(nx, ny);
    for (Index x = 0; x < nx; ++x)
      for (Index y = 0; y < ny; ++y) w(x, y) = contract(meas.effects[y], states[x]);
    if (w.minCoeff() < -kExactTol) {
      throw std::logic_error("random_capacity_search: negative outcome probability");
    }
    // Round-off from the mixtures only.
    w = w.cwiseMax(0.0);
    for (Index x = 0; x < nx; ++x) w.row(x) /= w.row(x).sum();
    results[i] = blahut_arimoto(w, {1e-9, 20000});
  });
  CapacitySearchResult out;
  out.trials = trials;
  for (const auto& r : results) {
    out.max_capacity_bits = std::max(out.max_capacity_bits, r.capacity_bits);
    out.max_upper_bound_bits = std::max(out.max_upper_bound_bits, r.upper_bound_bits);
    if (!r.converged) ++out.unconverged;
  }
  return out;
}

}  // namespace gptlab::hst
