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

#include <stdexcept>

#include <gtest/gtest.h>

#include "gptlab/core/algebra.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"
#include "gptlab/hadamard/hadamard.hpp"
#include "gptlab/hst/hst.hpp"
#include "oracles.hpp"

namespace gptlab::hadamard {
namespace {

std::vector<std::int8_t> v(std::initializer_list<int> xs) {
  return {xs.begin(), xs.end()};
}

TEST(BitString, RangeChecks) {
  EXPECT_NO_THROW(BitString(3, 2));
  EXPECT_THROW(BitString(4, 2), std::domain_error);
  EXPECT_THROW(BitString(0, 0), std::domain_error);
  EXPECT_THROW(BitString(0, 21), std::domain_error);
  EXPECT_EQ((BitString(1, 3) ^ BitString(3, 3)).value(), 2u);
}

TEST(HadamardVector, SmallCases) {
  EXPECT_EQ(hadamard_vector(0, 1).components(), v({1, 1}));
  EXPECT_EQ(hadamard_vector(1, 1).components(), v({1, -1}));
  EXPECT_EQ(hadamard_vector(1, 2).components(), v({1, -1, 1, -1}));
  for (int n = 1; n <= 6; ++n) {
    const auto d = hadamard_vector(0, n);
    for (auto c : d.components()) EXPECT_EQ(c, 1);
  }
}

TEST(HadamardVector, MatchesSylvesterOracle) {
  for (int n = 1; n <= 6; ++n) {
    const Eigen::MatrixXi h = oracle::sylvester(n);
    for (std::uint32_t mu = 0; mu < (1u << n); ++mu) {
      const auto d = hadamard_vector(mu, n);
      for (std::uint32_t nu = 0; nu < (1u << n); ++nu) ASSERT_EQ(d[nu], h(mu, nu));
    }
  }
}

TEST(HadamardVector, NegativeCount) {
  for (int n = 1; n <= 6; ++n)
    for (std::uint32_t mu = 1; mu < (1u << n); ++mu) {
      int neg = 0;
      const auto d = hadamard_vector(mu, n);
      for (auto c : d.components()) neg += c < 0;
      EXPECT_EQ(neg, 1 << (n - 1));
    }
}

TEST(ElementwiseProduct, GroupLaws) {
  const auto d = hadamard_vector(5, 3);
  EXPECT_EQ(elementwise_product(d, d), hadamard_vector(0, 3));
  EXPECT_EQ(elementwise_product(hadamard_vector(0, 3), d), d);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b)
      EXPECT_EQ(elementwise_product(hadamard_vector(a, 3), hadamard_vector(b, 3)),
                hadamard_vector(a ^ b, 3));
  EXPECT_THROW(elementwise_product(hadamard_vector(0, 2), hadamard_vector(0, 3)),
               std::invalid_argument);
}

TEST(Orthogonality, ExhaustiveUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    const std::int64_t size = 1 << n;
    for (std::uint32_t a = 0; a < size; ++a)
      for (std::uint32_t b = 0; b < size; ++b)
        ASSERT_EQ(dot(hadamard_vector(a, n), hadamard_vector(b, n)), a == b ? size : 0);
  }
}

TEST(EntangledState, IdentityAndLocalMixedness) {
  EXPECT_EQ(entangled_state(0, 3).matrix(), Matrix::Identity(8, 8));
  Matrix sum = Matrix::Zero(8, 8);
  for (const auto& e : bell_measurement(3).effects) sum += e.matrix();
  EXPECT_EQ(sum, BipartiteEffect::unit(8, 8).matrix());
}

TEST(BellMeasurement, DistinguishesEntangledStates) {
  const auto bell = bell_measurement(2);
  ASSERT_EQ(bell.effects.size(), 4u);
  for (std::uint32_t mu = 0; mu < 4; ++mu)
    for (std::uint32_t y = 0; y < 4; ++y)
      EXPECT_EQ(bipartite_contract(bell.effects[y], entangled_state(mu, 2)), y == mu ? 1.0 : 0.0);
}

TEST(BellMeasurement, ProductStates) {
  Rng rng = make_rng(1);
  const auto bell = bell_measurement(2);
  const auto mixed = product_state(State::mixed(3), State::mixed(3));
  for (const auto& e : bell.effects) EXPECT_DOUBLE_EQ(bipartite_contract(e, mixed), 0.25);
  for (int i = 0; i < 100; ++i) {
    const Vector a = random_ball_point(3, rng), b = random_ball_point(3, rng);
    const auto phi = product_state(hst::make_state(a), hst::make_state(b));
    for (std::uint32_t mu = 0; mu < 4; ++mu) {
      const Vector t = hadamard_vector(mu, 2).to_real().tail(3);
      const double p = bipartite_contract(bell.effects[mu], phi);
      EXPECT_NEAR(p, 0.25 * (1 + a.dot(t.cwiseProduct(b))), 1e-15);
      EXPECT_GE(p, -kExactTol);
      EXPECT_LE(p, 0.5 + kExactTol);
    }
  }
}

TEST(LocalTransformation, GroupAndRotation) {
  EXPECT_EQ(local_transformation(0, 3).matrix(), Matrix::Identity(8, 8));
  for (int n = 2; n <= 5; ++n)
    for (std::uint32_t mu = 0; mu < (1u << n); ++mu)
      EXPECT_DOUBLE_EQ(local_transformation(mu, n).inner().determinant(), 1.0);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      EXPECT_EQ(compose(local_transformation(a, 3), local_transformation(b, 3)).matrix(),
                local_transformation(a ^ b, 3).matrix());
      EXPECT_EQ(apply_on_a(local_transformation(a, 3), entangled_state(b, 3)).matrix(),
                entangled_state(a ^ b, 3).matrix());
    }
}

TEST(LocalTransformation, PreservesNorm) {
  Rng rng = make_rng(2);
  for (int i = 0; i < 100; ++i) {
    const Vector a = random_ball_point(7, rng);
    const State out = apply(local_transformation(i % 8, 3), hst::make_state(a));
    EXPECT_NEAR(out.bloch().norm(), a.norm(), 1e-15);
  }
}

TEST(GroupSuite, PassesExhaustively) {
  for (const auto& c : verify_group_laws(6)) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(ConsistencySuite, Passes) {
  for (const auto& c : verify_consistency(4, 200, 3)) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(MaxTensorMembership, ExamplesAndPureStates) {
  Vector e1 = Vector::Zero(3);
  e1(0) = 1.0;
  const auto e_same = product_effect(hst::make_extremal_effect(e1), hst::make_extremal_effect(e1));
  const auto e_opp = product_effect(hst::make_extremal_effect(e1), hst::make_extremal_effect(-e1));
  EXPECT_DOUBLE_EQ(bipartite_contract(e_same, entangled_state(0, 2)), 0.5);
  EXPECT_DOUBLE_EQ(bipartite_contract(e_opp, entangled_state(0, 2)), 0.0);
  for (std::uint32_t mu = 0; mu < 8; ++mu) {
    const auto r = verify_max_tensor_membership(entangled_state(mu, 3), 3, 500, mu, mu);
    EXPECT_TRUE(r.ok());
    EXPECT_LE(r.max_value, 0.5 + kExactTol);
  }
  const auto mix = entangled_state(0, 2).mix(entangled_state(3, 2), 0.3);
  EXPECT_TRUE(verify_max_tensor_membership(mix, 2, 500, 9).ok());
}

TEST(MaxTensorMembership, FlagsScaledState) {
  Matrix m = 3.0 * Matrix::Identity(4, 4);
  m(0, 0) = 1.0;
  const auto r = verify_max_tensor_membership(BipartiteState(m), 2, 200, 1);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().alpha.size(), 3);
}

TEST(LocalTomography, Reconstructs) {
  auto rebuild = [](const BipartiteState& phi) {
    return local_tomography([&](const BipartiteEffect& e) { return bipartite_contract(e, phi); },
                            phi.rows(), phi.cols());
  };
  for (std::uint32_t mu = 0; mu < 8; ++mu) {
    const auto phi = entangled_state(mu, 3);
    EXPECT_LT((rebuild(phi).matrix() - phi.matrix()).cwiseAbs().maxCoeff(), kExactTol);
  }
  Rng rng = make_rng(4);
  const auto prod = product_state(hst::make_state(random_ball_point(3, rng)),
                                  hst::make_state(random_ball_point(3, rng)));
  EXPECT_LT((rebuild(prod).matrix() - prod.matrix()).cwiseAbs().maxCoeff(), kExactTol);
  const auto mix = entangled_state(0, 2).mix(entangled_state(2, 2), 0.5);
  EXPECT_LT((rebuild(mix).matrix() - mix.matrix()).cwiseAbs().maxCoeff(), kExactTol);
}

}  // namespace
}  // namespace gptlab::hadamard
