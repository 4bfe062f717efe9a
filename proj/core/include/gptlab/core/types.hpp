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

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace gptlab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Normalised single-system state (1, r). Component 0 is the normalisation
/// component and is always 1 within kExactTol.
class State {
 public:
  explicit State(Vector entries);

  /// The completely mixed state (1, 0) of an n-dimensional theory.
  static State mixed(Index n);

  const Vector& entries() const { return entries_; }
  /// Dimension n of the Bloch-like part; entries().size() == n + 1.
  Index dim() const { return entries_.size() - 1; }
  auto bloch() const { return entries_.tail(dim()); }

 private:
  Vector entries_;
};

/// Effect vector. Positivity depends on the hosting theory and is checked by
/// validate_measurement, not here.
class Effect {
 public:
  explicit Effect(Vector entries);

  /// Unit effect u = (1, 0).
  static Effect unit(Index n);
  static Effect zero(Index n);

  const Vector& entries() const { return entries_; }
  Index dim() const { return entries_.size() - 1; }

 private:
  Vector entries_;
};

struct Measurement {
  std::vector<Effect> effects;
};

/// Bipartite state in block form (1, b^t; a, C). Rows index system A,
/// columns index system B; index 0 is the normalisation component.
class BipartiteState {
 public:
  explicit BipartiteState(Matrix matrix);

  const Matrix& matrix() const { return matrix_; }
  Index rows() const { return matrix_.rows(); }
  Index cols() const { return matrix_.cols(); }

  auto a() const { return matrix_.col(0).tail(matrix_.rows() - 1); }
  auto b() const { return matrix_.row(0).tail(matrix_.cols() - 1).transpose(); }
  auto core() const {
    return matrix_.bottomRightCorner(matrix_.rows() - 1, matrix_.cols() - 1);
  }

  /// Convex combination w * this + (1 - w) * other.
  BipartiteState mix(const BipartiteState& other, double w) const;

 private:
  Matrix matrix_;
};

/// Bipartite effect in block form (gamma, beta^t; alpha, Gamma).
class BipartiteEffect {
 public:
  explicit BipartiteEffect(Matrix matrix);

  static BipartiteEffect unit(Index rows, Index cols);

  const Matrix& matrix() const { return matrix_; }
  Index rows() const { return matrix_.rows(); }
  Index cols() const { return matrix_.cols(); }

  double gamma() const { return matrix_(0, 0); }
  auto alpha() const { return matrix_.col(0).tail(matrix_.rows() - 1); }
  auto beta() const { return matrix_.row(0).tail(matrix_.cols() - 1).transpose(); }
  auto core() const {
    return matrix_.bottomRightCorner(matrix_.rows() - 1, matrix_.cols() - 1);
  }

 private:
  Matrix matrix_;
};

struct BipartiteMeasurement {
  std::vector<BipartiteEffect> effects;
};

/// Normalisation-preserving linear map block-diag(1, T_hat).
class Transformation {
 public:
  explicit Transformation(Matrix matrix);

  static Transformation identity(Index dim);

  const Matrix& matrix() const { return matrix_; }
  Index size() const { return matrix_.rows(); }
  auto inner() const { return matrix_.bottomRightCorner(size() - 1, size() - 1); }

 private:
  Matrix matrix_;
};

/// Discrete memoryless channel: prior p(x) and row-stochastic p(y|x).
class Channel {
 public:
  /// Throws std::invalid_argument unless rows sum to 1, entries lie in
  /// [0, 1] and the prior is a probability vector (all within kExactTol).
  Channel(Vector prior, Matrix conditional);

  static Channel with_uniform_prior(Matrix conditional);

  const Vector& prior() const { return prior_; }
  const Matrix& conditional() const { return conditional_; }
  Index inputs() const { return conditional_.rows(); }
  Index outputs() const { return conditional_.cols(); }

  Channel with_prior(Vector prior) const { return Channel(std::move(prior), conditional_); }

 private:
  Vector prior_;
  Matrix conditional_;
};

}  // namespace gptlab
