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

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "gptlab/core/algebra.hpp"
#include "gptlab/core/information.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"
#include "gptlab/core/validation.hpp"
#include "gptlab/hadamard/hadamard.hpp"
#include "gptlab/hst/hst.hpp"
#include "gptlab/theory.hpp"
#include "oracles.hpp"

namespace gptlab {
namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

TEST(State, RequiresUnitNormalisation) {
  EXPECT_NO_THROW(State(vec({1, 0.3, -0.2})));
  EXPECT_THROW(State(vec({0.9, 0, 0})), std::domain_error);
  EXPECT_EQ(State::mixed(3).entries(), vec({1, 0, 0, 0}));
}

TEST(Contract, UnitEffectGivesOne) {
  Rng rng = make_rng(1);
  for (int i = 0; i < 20; ++i) {
    const State w = hst::make_state(random_ball_point(2, rng));
    EXPECT_DOUBLE_EQ(contract(Effect::unit(2), w), 1.0);
  }
}

TEST(Contract, ExtremalEffectOnPureStates) {
  const Vector m = vec({0.6, 0.8});
  const Effect e = hst::make_extremal_effect(m);
  EXPECT_NEAR(contract(e, hst::make_state(m)), 1.0, kExactTol);
  EXPECT_NEAR(contract(e, hst::make_state(-m)), 0.0, kExactTol);
}

TEST(Contract, DimensionMismatchThrows) {
  EXPECT_THROW(contract(Effect::unit(2), State::mixed(3)), std::invalid_argument);
  EXPECT_THROW(bipartite_contract(BipartiteEffect::unit(2, 2), hadamard::entangled_state(0, 2)),
               std::invalid_argument);
}

TEST(BipartiteContract, UnitEffectAndBellOutcomes) {
  const auto phi = hadamard::entangled_state(2, 2);
  EXPECT_DOUBLE_EQ(bipartite_contract(BipartiteEffect::unit(4, 4), phi), 1.0);
  EXPECT_DOUBLE_EQ(bipartite_contract(hadamard::entangled_effect(2, 2), phi), 1.0);
  EXPECT_DOUBLE_EQ(bipartite_contract(hadamard::entangled_effect(1, 2), phi), 0.0);
}

TEST(ProductState, OuterProductBlocks) {
  const State a(vec({1, 0.1, 0.2}));
  const State b(vec({1, -0.3, 0.4}));
  const auto phi = product_state(a, b);
  EXPECT_EQ(phi.a(), vec({0.1, 0.2}));
  EXPECT_EQ(phi.b(), vec({-0.3, 0.4}));
  EXPECT_DOUBLE_EQ(phi.core()(1, 0), 0.2 * -0.3);
  const auto uu = product_effect(Effect::unit(2), Effect::unit(2));
  EXPECT_EQ(uu.matrix(), BipartiteEffect::unit(3, 3).matrix());
}

TEST(ProductEffect, ExtremalProductsOnPhiMu) {
  // 1/2(1,alpha) (x) 1/2(1,beta) on phi_mu is 1/4 (1 + alpha . T_mu beta).
  Rng rng = make_rng(2);
  for (std::uint32_t mu = 0; mu < 4; ++mu) {
    const Vector t = hadamard::hadamard_vector(mu, 2).to_real().tail(3);
    const Vector alpha = random_unit_vector(3, rng), beta = random_unit_vector(3, rng);
    const auto e = product_effect(hst::make_extremal_effect(alpha), hst::make_extremal_effect(beta));
    EXPECT_NEAR(bipartite_contract(e, hadamard::entangled_state(mu, 2)),
                0.25 * (1 + alpha.dot(t.cwiseProduct(beta))), kExactTol);
  }
}

TEST(ReducedStates, EntangledStatesAreLocallyMixed) {
  for (std::uint32_t mu = 0; mu < 8; ++mu) {
    const auto [a, b] = reduced_states(hadamard::entangled_state(mu, 3));
    EXPECT_EQ(a.entries(), State::mixed(7).entries());
    EXPECT_EQ(b.entries(), State::mixed(7).entries());
  }
}

TEST(ReducedStates, ProductAndMixtures) {
  Rng rng = make_rng(3);
  for (int i = 0; i < 50; ++i) {
    const State a = hst::make_state(random_ball_point(3, rng));
    const State b = hst::make_state(random_ball_point(3, rng));
    const auto prod = product_state(a, b);
    const auto [ra, rb] = reduced_states(prod);
    EXPECT_TRUE(ra.entries().isApprox(a.entries()));
    EXPECT_TRUE(rb.entries().isApprox(b.entries()));

    std::uniform_real_distribution<double> unif(0, 1);
    const double w = unif(rng);
    const auto mix = hadamard::entangled_state(1, 2).mix(prod, w);
    const auto [ma, mb] = reduced_states(mix);
    EXPECT_LT((ma.entries() - (w * State::mixed(3).entries() + (1 - w) * a.entries())).norm(), 1e-15);
    EXPECT_LT((mb.entries() - (w * State::mixed(3).entries() + (1 - w) * b.entries())).norm(), 1e-15);
  }
}

TEST(Algebra, ApplyOnBothSides) {
  const auto t = hadamard::local_transformation(3, 2);
  const auto phi = hadamard::entangled_state(1, 2);
  EXPECT_EQ(apply_on_a(t, phi).matrix(), t.matrix() * phi.matrix());
  EXPECT_EQ(apply_on_b(t, phi).matrix(), phi.matrix() * t.matrix().transpose());
}

TEST(Properties, MeasurementProbabilitiesSumToOne) {
  Rng rng = make_rng(4);
  for (int i = 0; i < 200; ++i) {
    const Index n = 1 + i % 6;
    const Measurement m = hst::random_measurement(n, 1 + i % 5, rng);
    const State w = hst::make_state(random_ball_point(n, rng));
    double total = 0.0;
    for (const auto& e : m.effects) total += contract(e, w);
    EXPECT_NEAR(total, 1.0, kExactTol);
  }
}

TEST(Properties, BipartiteContractIsBilinear) {
  Rng rng = make_rng(5);
  std::uniform_real_distribution<double> coef(-2, 2);
  for (int i = 0; i < 100; ++i) {
    const auto phi1 = product_state(hst::make_state(random_ball_point(3, rng)),
                                    hst::make_state(random_ball_point(3, rng)));
    const auto phi2 = hadamard::entangled_state(i % 4, 2);
    const auto e = product_effect(hst::make_extremal_effect(random_unit_vector(3, rng)),
                                  hst::make_extremal_effect(random_unit_vector(3, rng)));
    const double a = coef(rng), b = coef(rng);
    const double lhs = e.matrix().cwiseProduct(a * phi1.matrix() + b * phi2.matrix()).sum();
    const double rhs = a * bipartite_contract(e, phi1) + b * bipartite_contract(e, phi2);
    EXPECT_NEAR(lhs, rhs, 1e-14);
  }
}

TEST(Information, EntropyBasics) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(1.0), 0.0);
  EXPECT_DOUBLE_EQ(shannon_entropy(vec({0.25, 0.25, 0.5, 0.0})), 1.5);
}

TEST(Information, IdentityChannelCarriesNBits) {
  for (int n = 1; n <= 6; ++n) {
    const Index k = Index{1} << n;
    EXPECT_EQ(mutual_information(Channel::with_uniform_prior(Matrix::Identity(k, k))), n);
  }
}

TEST(Information, ConstantChannelCarriesNothing) {
  Matrix w(3, 2);
  w << 0.3, 0.7, 0.3, 0.7, 0.3, 0.7;
  EXPECT_NEAR(mutual_information(Channel::with_uniform_prior(w)), 0.0, kExactTol);
}

TEST(Information, BinarySymmetricChannelMatchesOracle) {
  const double got = mutual_information(Channel::with_uniform_prior(oracle::bsc(0.11)));
  EXPECT_NEAR(got, oracle::bsc_capacity(0.11), 1e-14);
  EXPECT_NEAR(got, 0.5, 1e-3);
}

TEST(Properties, MutualInformationBounds) {
  Rng rng = make_rng(6);
  for (int i = 0; i < 300; ++i) {
    const Index nx = 1 + i % 5, ny = 1 + (i / 5) % 6;
    Matrix w(nx, ny);
    for (Index x = 0; x < nx; ++x) w.row(x) = random_simplex(ny, rng).transpose();
    const Vector prior = random_simplex(nx, rng);
    const double mi = mutual_information(Channel(prior, w));
    EXPECT_GE(mi, 0.0);
    EXPECT_LE(mi, std::min(std::log2(double(nx)), std::log2(double(ny))) + 1e-12);
    EXPECT_NEAR(mi, oracle::mutual_information(prior, w), 1e-12);
  }
}

TEST(Channel, RejectsInvalidTables) {
  Matrix w(2, 2);
  w << 0.5, 0.6, 0.5, 0.5;
  EXPECT_THROW(Channel::with_uniform_prior(w), std::invalid_argument);
  w << 1.2, -0.2, 0.5, 0.5;
  EXPECT_THROW(Channel::with_uniform_prior(w), std::invalid_argument);
  EXPECT_THROW(Channel(vec({0.7, 0.7}), Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST(ValidateMeasurement, CanonicalPasses) {
  TheoryConfig c{TheoryKind::Base, 2};
  EXPECT_TRUE(validate_measurement(hst::canonical_measurement(vec({0, 1, 0})), c).ok());
}

TEST(ValidateMeasurement, TrivialPasses) {
  EXPECT_TRUE(validate_measurement(Measurement{{Effect::unit(3)}}, hst::ball(3)).ok());
}

TEST(ValidateMeasurement, DuplicateEffectFailsSum) {
  const Vector m = vec({1, 0, 0});
  const Measurement bad{{hst::make_extremal_effect(m), hst::make_extremal_effect(m)}};
  const auto r = validate_measurement(bad, hst::ball(3));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().what, "effects do not sum to the unit effect");
}

TEST(ValidateMeasurement, ReportsNegativeProbabilityWithWitness) {
  // (0.5, 0.8, 0) reaches -0.3 on r = (-1, 0); sum still equals u.
  const Measurement bad{{Effect(vec({0.5, 0.8, 0})), Effect(vec({0.5, -0.8, 0}))}};
  const auto r = validate_measurement(bad, hst::ball(2));
  ASSERT_FALSE(r.ok());
  bool negative = false;
  for (const auto& v : r.violations) {
    if (v.what == "negative probability") {
      negative = true;
      EXPECT_NEAR(v.value, -0.3, 1e-15);
    }
  }
  EXPECT_TRUE(negative);
}

TEST(ValidateMeasurement, BipartiteBellPassesAndScaledFails) {
  TheoryConfig c{TheoryKind::Base, 2};
  EXPECT_TRUE(validate_measurement(hadamard::bell_measurement(2), c).ok());
  // Twice the Bell effects sums to 2u and gives probability 2 on phi_mu.
  BipartiteMeasurement twice = hadamard::bell_measurement(2);
  for (auto& e : twice.effects) e = BipartiteEffect(2.0 * e.matrix());
  EXPECT_FALSE(validate_measurement(twice, c).ok());
}

TEST(ValidateMeasurement, ProductSamplingCatchesNonPositiveEffect) {
  // gamma = 1/4 with core entry 0.6 goes negative on (1, e1) (x) (1, -e1).
  Matrix e = Matrix::Zero(4, 4);
  e(0, 0) = 0.25;
  e(1, 1) = 0.6;
  Matrix rest = -e;
  rest(0, 0) += 1.0;
  const BipartiteMeasurement m{{BipartiteEffect(e), BipartiteEffect(rest)}};
  BipartiteStateSpace space{hst::ball(3), hst::ball(3), {}, 64, 0};
  EXPECT_FALSE(validate_measurement(m, space).ok());
}

TEST(Random, RotationsAreSpecialOrthogonal) {
  Rng rng = make_rng(7);
  for (Index m = 1; m <= 6; ++m) {
    const Matrix r = random_rotation(m, rng);
    EXPECT_LT((r * r.transpose() - Matrix::Identity(m, m)).norm(), 1e-12);
    EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
  }
}

TEST(Random, DerivedSeedsAreStable) {
  EXPECT_EQ(derive_seed(0, 0), derive_seed(0, 0));
  EXPECT_NE(derive_seed(0, 0), derive_seed(0, 1));
  Rng a = make_rng(42, 3), b = make_rng(42, 3);
  EXPECT_EQ(a(), b());
}

}  // namespace
}  // namespace gptlab
