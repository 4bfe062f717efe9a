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

#include "gptlab/core/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace gptlab {

namespace {

[[noreturn]] void mismatch(const char* where, Index lhs, Index rhs) {
  std::ostringstream os;
  os << where << ": dimension mismatch (" << lhs << " vs " << rhs << ")";
  throw std::invalid_argument(os.str());
}

}  // namespace

double contract(const Effect& e, const State& omega) {
  if (e.entries().size() != omega.entries().size()) {
    mismatch("contract", e.entries().size(), omega.entries().size());
  }
  return e.entries().dot(omega.entries());
}

double bipartite_contract(const BipartiteEffect& e, const BipartiteState& phi) {
  if (e.rows() != phi.rows() || e.cols() != phi.cols()) {
    std::ostringstream os;
    os << "bipartite_contract: shape mismatch (" << e.rows() << "x" << e.cols() << " vs "
       << phi.rows() << "x" << phi.cols() << ")";
    throw std::invalid_argument(os.str());
  }
  return e.matrix().cwiseProduct(phi.matrix()).sum();
}

BipartiteState product_state(const State& a, const State& b) {
  return BipartiteState(a.entries() * b.entries().transpose());
}

BipartiteEffect product_effect(const Effect& a, const Effect& b) {
  return BipartiteEffect(a.entries() * b.entries().transpose());
}

std::pair<State, State> reduced_states(const BipartiteState& phi) {
  return {State(phi.matrix().col(0)), State(phi.matrix().row(0).transpose())};
}

State apply(const Transformation& t, const State& omega) {
  if (t.size() != omega.entries().size()) mismatch("apply", t.size(), omega.entries().size());
  return State(t.matrix() * omega.entries());
}

BipartiteState apply_on_a(const Transformation& t, const BipartiteState& phi) {
  if (t.size() != phi.rows()) mismatch("apply_on_a", t.size(), phi.rows());
  return BipartiteState(t.matrix() * phi.matrix());
}

BipartiteState apply_on_b(const Transformation& t, const BipartiteState& phi) {
  if (t.size() != phi.cols()) mismatch("apply_on_b", t.size(), phi.cols());
  return BipartiteState(phi.matrix() * t.matrix().transpose());
}

Transformation compose(const Transformation& outer, const Transformation& inner) {
  if (outer.size() != inner.size()) mismatch("compose", outer.size(), inner.size());
  return Transformation(outer.matrix() * inner.matrix());
}

Vector effect_sum(const Measurement& m) {
  if (m.effects.empty()) throw std::invalid_argument("effect_sum: empty measurement");
  Vector sum = Vector::Zero(m.effects.front().entries().size());
  for (const auto& e : m.effects) {
    if (e.entries().size() != sum.size()) {
      mismatch("effect_sum", sum.size(), e.entries().size());
    }
    sum += e.entries();
  }
  return sum;
}

Matrix effect_sum(const BipartiteMeasurement& m) {
  if (m.effects.empty()) throw std::invalid_argument("effect_sum: empty measurement");
  const auto& first = m.effects.front();
  Matrix sum = Matrix::Zero(first.rows(), first.cols());
  for (const auto& e : m.effects) {
    if (e.rows() != sum.rows() || e.cols() != sum.cols()) {
      throw std::invalid_argument("effect_sum: shape mismatch");
    }
    sum += e.matrix();
  }
  return sum;
}

}  // namespace gptlab
