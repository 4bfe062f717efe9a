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

#include "gptlab/core/types.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gptlab/core/tolerances.hpp"

namespace gptlab {

State::State(Vector entries) : entries_(std::move(entries)) {
  if (entries_.size() < 1) throw std::invalid_argument("State: empty vector");
  if (std::abs(entries_(0) - 1.0) > kExactTol) {
    std::ostringstream os;
    os << "State: normalisation component is " << entries_(0) << ", expected 1";
    throw std::domain_error(os.str());
  }
}

State State::mixed(Index n) {
  Vector v = Vector::Zero(n + 1);
  v(0) = 1.0;
  return State(std::move(v));
}

Effect::Effect(Vector entries) : entries_(std::move(entries)) {
  if (entries_.size() < 1) throw std::invalid_argument("Effect: empty vector");
}

Effect Effect::unit(Index n) {
  Vector v = Vector::Zero(n + 1);
  v(0) = 1.0;
  return Effect(std::move(v));
}

Effect Effect::zero(Index n) { return Effect(Vector::Zero(n + 1)); }

BipartiteState::BipartiteState(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() < 1 || matrix_.cols() < 1) {
    throw std::invalid_argument("BipartiteState: empty matrix");
  }
  if (std::abs(matrix_(0, 0) - 1.0) > kExactTol) {
    std::ostringstream os;
    os << "BipartiteState: entry (0,0) is " << matrix_(0, 0) << ", expected 1";
    throw std::domain_error(os.str());
  }
}

BipartiteState BipartiteState::mix(const BipartiteState& other, double w) const {
  if (other.rows() != rows() || other.cols() != cols()) {
    throw std::invalid_argument("BipartiteState::mix: shape mismatch");
  }
  if (w < 0.0 || w > 1.0) throw std::domain_error("BipartiteState::mix: weight outside [0,1]");
  return BipartiteState(w * matrix_ + (1.0 - w) * other.matrix_);
}

BipartiteEffect::BipartiteEffect(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() < 1 || matrix_.cols() < 1) {
    throw std::invalid_argument("BipartiteEffect: empty matrix");
  }
}

BipartiteEffect BipartiteEffect::unit(Index rows, Index cols) {
  Matrix m = Matrix::Zero(rows, cols);
  m(0, 0) = 1.0;
  return BipartiteEffect(std::move(m));
}

Transformation::Transformation(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw std::invalid_argument("Transformation: matrix must be square and non-empty");
  }
  // Normalisation preserving: first row must be (1, 0, ..., 0).
  for (Index j = 0; j < matrix_.cols(); ++j) {
    const double expected = j == 0 ? 1.0 : 0.0;
    if (std::abs(matrix_(0, j) - expected) > kExactTol) {
      throw std::domain_error("Transformation: not normalisation preserving");
    }
  }
}

Transformation Transformation::identity(Index dim) {
  return Transformation(Matrix::Identity(dim, dim));
}

Channel::Channel(Vector prior, Matrix conditional)
    : prior_(std::move(prior)), conditional_(std::move(conditional)) {
  if (prior_.size() != conditional_.rows()) {
    throw std::invalid_argument("Channel: prior length does not match input count");
  }
  if (conditional_.rows() == 0 || conditional_.cols() == 0) {
    throw std::invalid_argument("Channel: empty conditional table");
  }
  if (std::abs(prior_.sum() - 1.0) > kExactTol || (prior_.array() < -kExactTol).any()) {
    throw std::invalid_argument("Channel: prior is not a probability vector");
  }
  for (Index x = 0; x < conditional_.rows(); ++x) {
    const auto row = conditional_.row(x);
    if (std::abs(row.sum() - 1.0) > kExactTol) {
      std::ostringstream os;
      os << "Channel: row " << x << " sums to " << row.sum();
      throw std::invalid_argument(os.str());
    }
    if ((row.array() < -kExactTol).any() || (row.array() > 1.0 + kExactTol).any()) {
      std::ostringstream os;
      os << "Channel: row " << x << " has an entry outside [0,1]";
      throw std::invalid_argument(os.str());
    }
  }
}

Channel Channel::with_uniform_prior(Matrix conditional) {
  const Index n = conditional.rows();
  return Channel(Vector::Constant(n, 1.0 / static_cast<double>(n)), std::move(conditional));
}

}  // namespace gptlab
