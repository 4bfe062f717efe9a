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
#include "gptlab/hadamard/hadamard.hpp"
#include "gptlab/hst/hst.hpp"
#include "gptlab/protocols/baseline.hpp"
#include "gptlab/protocols/dense_coding.hpp"
#include "gptlab/protocols/teleport.hpp"
#include "oracles.hpp"

namespace gptlab::protocols {
namespace {

TEST(DenseCoding, BaseIsExactIdentity) {
  for (int n = 1; n <= 6; ++n) {
    TheoryConfig c;
    c.n_bits = n;
    const auto run = dense_coding(c);
    const Index size = Index{1} << n;
    EXPECT_EQ(run.channel.conditional(), Matrix::Identity(size, size)) << n;
    EXPECT_EQ(run.info_bits, static_cast<double>(n));
  }
}

TEST(DenseCoding, VariantsDispatch) {
  TheoryConfig lt{TheoryKind::LambdaTau, 3, 1.0, 0.2};
  EXPECT_NEAR(dense_coding(lt).info_bits, 0.15356, 1e-5);
  lt.tau = 1.0 / 3.0;
  EXPECT_THROW(dense_coding(lt), std::domain_error);

  TheoryConfig emb{TheoryKind::Embedded, 3};
  emb.embed_dim = 4;
  EXPECT_NEAR(dense_coding(emb).info_bits, 3.0, 1e-12);

  TheoryConfig weak{TheoryKind::Weak, 2, 1.0 / 3.0};
  EXPECT_LE(dense_coding(weak).info_bits, 1.0 + kOptTol);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(3.0, 1.0).cls, ProtocolClass::Hyperdense);
  EXPECT_EQ(classify(1.5, 1.0).cls, ProtocolClass::Superdense);
  EXPECT_EQ(classify(2.0, 1.0).cls, ProtocolClass::Superdense);
  EXPECT_EQ(classify(1.0, 1.0).cls, ProtocolClass::Ordinary);
  EXPECT_EQ(classify(1.0 + 1e-7, 1.0).cls, ProtocolClass::Ordinary);
  EXPECT_EQ(classify(0.2, 1.0).cls, ProtocolClass::Ordinary);
  EXPECT_EQ(to_string(ProtocolClass::Hyperdense), "HYPERDENSE");
  EXPECT_THROW(classify(-1.0, 1.0), std::domain_error);
}

TEST(Classify, MonotoneInInformation) {
  int prev = 0;
  for (double i = 0.0; i <= 4.0; i += 0.01) {
    const int now = static_cast<int>(classify(i, 1.0).cls);
    EXPECT_GE(now, prev);
    prev = now;
  }
}

TEST(ProductBellChannel, ClosedForm) {
  Rng rng = make_rng(5);
  for (int n = 1; n <= 3; ++n) {
    const Index dim = (Index{1} << n) - 1;
    const Eigen::MatrixXi h = oracle::sylvester(n);
    for (int t = 0; t < 20; ++t) {
      const Vector a = random_ball_point(dim, rng), b = random_ball_point(dim, rng);
      const Channel ch = product_bell_channel(hst::make_state(a), hst::make_state(b), n);
      for (Index x = 0; x <= dim; ++x)
        for (Index y = 0; y <= dim; ++y) {
          double s = 1.0;
          for (Index k = 1; k <= dim; ++k) s += h(x, k) * a(k - 1) * h(y, k) * b(k - 1);
          EXPECT_NEAR(ch.conditional()(x, y), s / static_cast<double>(dim + 1), 1e-14);
        }
      EXPECT_LE(mutual_information(ch), 1.0 + kOptTol);
    }
  }
}

TEST(SeparableBaseline, NeverExceedsOneBit) {
  for (Index n : {1, 3, 7}) {
    const auto r = separable_baseline(n, 200, 17);
    EXPECT_EQ(r.trials, 200);
    EXPECT_LE(r.max_info_bits, 1.0 + kOptTol) << n;
    EXPECT_GT(r.max_info_bits, 0.0);
  }
  EXPECT_THROW(separable_baseline(2, 10, 0), std::domain_error);
  EXPECT_THROW(separable_baseline(3, 0, 0), std::invalid_argument);
}

TEST(SeparableBaseline, Deterministic) {
  const auto a = separable_baseline(3, 50, 9), b = separable_baseline(3, 50, 9);
  EXPECT_EQ(a.max_info_bits, b.max_info_bits);
}

TEST(NoSignalling, MarginalsIndependentOfMessage) {
  for (int n = 1; n <= 3; ++n) EXPECT_LT(no_signalling_deviation(n, 100, 3), kExactTol);
}

// Brute-force teleportation: Alice's outcome leaves Bob with
// sigma_k = sum_ij E_x(i,j) omega_i phi_0(j,k); Bob then applies T_x.
Matrix teleport_oracle(const Vector& omega, const std::vector<Effect>& bob, int n) {
  const Index size = Index{1} << n;
  const Eigen::MatrixXi h = oracle::sylvester(n);
  Matrix joint(size, static_cast<Index>(bob.size()));
  for (Index x = 0; x < size; ++x) {
    Vector sigma = Vector::Zero(size);
    for (Index i = 0; i < size; ++i)
      for (Index j = 0; j < size; ++j)
        for (Index k = 0; k < size; ++k) {
          const double e = i == j ? h(x, i) / static_cast<double>(size) : 0.0;
          const double phi = j == k ? 1.0 : 0.0;
          sigma(k) += e * omega(i) * phi;
        }
    for (Index k = 0; k < size; ++k) sigma(k) *= h(x, k);
    for (std::size_t y = 0; y < bob.size(); ++y)
      joint(x, static_cast<Index>(y)) = bob[y].entries().dot(sigma);
  }
  return joint;
}

TEST(Teleport, MatchesBruteForce) {
  Rng rng = make_rng(21);
  for (int n : {1, 2, 3}) {
    const Index dim = (Index{1} << n) - 1;
    for (int t = 0; t < 20; ++t) {
      const State omega = hst::make_state(random_unit_vector(dim, rng));
      const auto run = teleport(omega, n, t, 30);
      ASSERT_EQ(run.bob_effects.size(), 31u);
      EXPECT_EQ(run.bob_effects.back().entries(), Effect::unit(dim).entries());
      EXPECT_TRUE(run.ok());
      const Matrix expected = teleport_oracle(omega.entries(), run.bob_effects, n);
      EXPECT_LT((run.joint - expected).cwiseAbs().maxCoeff(), 1e-15);
      for (Index x = 0; x <= dim; ++x) EXPECT_EQ(run.p_x(x), std::ldexp(1.0, -n));
    }
  }
}

TEST(Teleport, MixedInputAndErrors) {
  const auto run = teleport(State::mixed(3), 2, 1);
  EXPECT_TRUE(run.ok());
  EXPECT_THROW(teleport(State::mixed(2), 2, 1), std::invalid_argument);
  Vector big = Vector::Zero(4);
  big(0) = 1.0;
  big(1) = 2.0;
  EXPECT_THROW(teleport(State(big), 2, 1), std::domain_error);
}

TEST(EntanglementSwap, BellStatesSwapExactly) {
  for (int n : {1, 2, 3}) {
    const std::uint32_t size = 1u << n;
    for (std::uint32_t mu = 0; mu < size; ++mu) {
      const auto run = entanglement_swap(hadamard::entangled_state(mu, n), n, mu);
      EXPECT_TRUE(run.ok()) << n << " " << mu;
      for (std::uint32_t x = 0; x < size; ++x)
        for (std::uint32_t y = 0; y < size; ++y)
          EXPECT_EQ(run.conditional(x, y), y == mu ? 1.0 : 0.0);
    }
  }
}

TEST(EntanglementSwap, ProductAndMixedStates) {
  Rng rng = make_rng(8);
  const auto prod = product_state(hst::make_state(random_ball_point(3, rng)),
                                  hst::make_state(random_ball_point(3, rng)));
  EXPECT_TRUE(entanglement_swap(prod, 2, 1).ok());
  const auto mix = hadamard::entangled_state(1, 2).mix(prod, 0.4);
  EXPECT_TRUE(entanglement_swap(mix, 2, 2).ok());
  EXPECT_THROW(entanglement_swap(prod, 3, 1), std::invalid_argument);
}

}  // namespace
}  // namespace gptlab::protocols
