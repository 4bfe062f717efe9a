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

#include "gptlab/core/validation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gptlab/core/algebra.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"

namespace gptlab {

namespace {

std::string describe_vector(const Vector& v) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ")";
  return os.str();
}

void check_unit_sum(const Vector& sum, ValidationReport& report) {
  ++report.checks;
  Vector unit = Vector::Zero(sum.size());
  unit(0) = 1.0;
  const double dev = (sum - unit).cwiseAbs().maxCoeff();
  if (dev > kExactTol) {
    report.violations.push_back({0, "u", dev, "effects do not sum to the unit effect"});
  }
}

// `label` is only evaluated when a violation is recorded.
template <class Label>
void check_range(std::size_t index, const Label& label, double lo, double hi,
                 ValidationReport& report) {
  ++report.checks;
  if (lo < -kExactTol) {
    report.violations.push_back({index, label(), lo, "negative probability"});
  }
  if (hi > 1.0 + kExactTol) {
    report.violations.push_back({index, label(), hi, "probability exceeds 1"});
  }
}

}  // namespace

std::pair<double, double> effect_range(const Vector& effect, const LocalBall& space) {
  if (effect.size() != space.vector_size()) {
    throw std::invalid_argument("effect_range: effect does not match the state space");
  }
  const double r = effect.tail(space.ball_dim).norm();
  return {effect(0) - r, effect(0) + r};
}

ValidationReport validate_measurement(const Measurement& m, const LocalBall& space) {
  ValidationReport report;
  if (m.effects.empty()) {
    report.violations.push_back({0, "", 0.0, "measurement has no effects"});
    return report;
  }
  for (const auto& e : m.effects) {
    if (e.entries().size() != space.vector_size()) {
      throw std::invalid_argument("validate_measurement: effect does not match the state space");
    }
  }
  check_unit_sum(effect_sum(m), report);
  for (std::size_t i = 0; i < m.effects.size(); ++i) {
    const Vector& e = m.effects[i].entries();
    const auto [lo, hi] = effect_range(e, space);
    const Vector dir = e.tail(space.ball_dim);
    const double n = dir.norm();
    // Witness: the pure state that attains the violated extreme.
    Vector witness = n > 0.0 ? Vector(dir / n) : Vector(Vector::Zero(space.ball_dim));
    check_range(i, [&] { return "r=" + describe_vector(-witness); }, lo, 1.0, report);
    check_range(i, [&] { return "r=" + describe_vector(witness); }, 0.0, hi, report);
  }
  return report;
}

ValidationReport validate_measurement(const BipartiteMeasurement& m,
                                      const BipartiteStateSpace& space) {
  ValidationReport report;
  if (m.effects.empty()) {
    report.violations.push_back({0, "", 0.0, "measurement has no effects"});
    return report;
  }
  const Index rows = space.a.vector_size();
  const Index cols = space.b.vector_size();
  for (const auto& e : m.effects) {
    if (e.rows() != rows || e.cols() != cols) {
      throw std::invalid_argument("validate_measurement: effect does not match the state space");
    }
  }
  check_unit_sum(Eigen::Map<const Vector>(effect_sum(m).data(), rows * cols), report);

  for (std::size_t i = 0; i < m.effects.size(); ++i) {
    for (const auto& [label, phi] : space.generators) {
      const double p = bipartite_contract(m.effects[i], phi);
      check_range(i, [&] { return label; }, p, p, report);
    }
  }

  // Product states: fix a B-side point, then E (1,0,b) is an effect on A
  // whose range over the A ball is exact.
  std::vector<Vector> b_points;
  for (Index k = 0; k < space.b.ball_dim; ++k) {
    Vector v = Vector::Zero(space.b.ball_dim);
    v(k) = 1.0;
    b_points.push_back(v);
    b_points.push_back(-v);
  }
  b_points.push_back(Vector::Zero(space.b.ball_dim));
  Rng rng = make_rng(space.seed, 0x5eed);
  for (int s = 0; s < space.product_samples; ++s) {
    b_points.push_back(random_unit_vector(space.b.ball_dim, rng));
  }
  for (const Vector& bp : b_points) {
    Vector omega_b = Vector::Zero(cols);
    omega_b(0) = 1.0;
    omega_b.tail(space.b.ball_dim) = bp;
    for (std::size_t i = 0; i < m.effects.size(); ++i) {
      const Vector induced = m.effects[i].matrix() * omega_b;
      const auto [lo, hi] = effect_range(induced, space.a);
      check_range(i, [&] { return "product with b=" + describe_vector(bp); }, lo, hi, report);
    }
  }
  return report;
}

}  // namespace gptlab
