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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gptlab/core/types.hpp"

namespace gptlab::hadamard {

inline constexpr int kMaxBits = 20;

/// N-bit string stored little-endian: bit l of value() is mu_l.
class BitString {
 public:
  /// Throws std::domain_error unless 1 <= n <= kMaxBits and value < 2^n.
  BitString(std::uint32_t value, int n);

  std::uint32_t value() const { return value_; }
  int bits() const { return n_; }

  friend BitString operator^(BitString a, BitString b);
  friend bool operator==(BitString a, BitString b) = default;

 private:
  std::uint32_t value_;
  int n_;
};

/// 2^N, the side of the Hadamard block.
Index block_size(int n);
/// 2^N - 1, the local ball dimension.
Index local_dim(int n);

/// Integer +-1 vector d_mu with (d_mu)_nu = (-1)^{popcount(mu & nu)}.
class HadamardVector {
 public:
  HadamardVector(int n, std::vector<std::int8_t> components);

  int bits() const { return n_; }
  std::size_t size() const { return components_.size(); }
  std::int8_t operator[](std::size_t nu) const { return components_[nu]; }
  const std::vector<std::int8_t>& components() const { return components_; }
  Vector to_real() const;

  friend bool operator==(const HadamardVector&, const HadamardVector&) = default;

 private:
  int n_;
  std::vector<std::int8_t> components_;
};

HadamardVector hadamard_vector(BitString mu);
HadamardVector hadamard_vector(std::uint32_t mu, int n);

/// Throws std::invalid_argument when the lengths differ.
HadamardVector elementwise_product(const HadamardVector& a, const HadamardVector& b);
std::int64_t dot(const HadamardVector& a, const HadamardVector& b);

/// phi_mu = diag(d_mu).
BipartiteState entangled_state(std::uint32_t mu, int n);
/// E_mu = 2^-N diag(d_mu).
BipartiteEffect entangled_effect(std::uint32_t mu, int n);
/// {E_mu}, indexed by mu.
BipartiteMeasurement bell_measurement(int n);
/// T_mu = diag(d_mu).
Transformation local_transformation(std::uint32_t mu, int n);

struct ProductWitness {
  Vector alpha;
  Vector beta;
  double value = 0.0;
  std::string what;
};

struct MembershipReport {
  std::vector<ProductWitness> violations;
  int checks = 0;
  double min_value = 0.0;
  double max_value = 0.0;

  bool ok() const { return violations.empty(); }
};

/// Samples `samples` extremal product effects e_alpha (x) e_beta and checks
/// 0 <= value <= 1 and u_AB . phi = 1. With `pure_mu` set, additionally
/// checks value == 1/4 (1 + alpha . T_mu beta) <= 1/2.
MembershipReport verify_max_tensor_membership(const BipartiteState& phi, int n, int samples,
                                              std::uint64_t seed,
                                              std::optional<std::uint32_t> pure_mu = {});

/// Rebuilds a bipartite state from the outcome probabilities of products
/// of the coordinate effects 1/2 (1, +-v_k) and the unit effect.
BipartiteState local_tomography(const std::function<double(const BipartiteEffect&)>& oracle,
                                Index rows, Index cols);

struct SuiteCheck {
  std::string name;
  bool passed = true;
  std::int64_t checks = 0;
  std::string detail;  // first failure, empty on success
};

/// Exhaustive orthogonality, column sums, XOR closure of elementwise
/// products and of T_mu T_mu' for every N in [1, n_max].
std::vector<SuiteCheck> verify_group_laws(int n_max);

/// T_mu maps random local states and random product states into valid
/// states, and T_mu phi_nu == phi_{mu ^ nu} exactly.
std::vector<SuiteCheck> verify_consistency(int n_max, int trials, std::uint64_t seed);

}  // namespace gptlab::hadamard
