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

#include "gptlab/capacity/blahut_arimoto.hpp"
#include "gptlab/capacity/bounds.hpp"
#include "gptlab/core/information.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"
#include "gptlab/variants/lambda_tau.hpp"
#include "oracles.hpp"

namespace gptlab {
namespace {

TEST(BlahutArimoto, IdentityChannel) {
  for (int k : {2, 4, 8, 64}) {
    const auto r = blahut_arimoto(Matrix::Identity(k, k));
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.capacity_bits, std::log2(k), kOptTol);
    EXPECT_NEAR(r.optimal_prior.sum(), 1.0, kExactTol);
  }
}

TEST(BlahutArimoto, BinarySymmetricChannel) {
  for (double flip : {0.0, 0.11, 0.25, 0.4, 0.5}) {
    const auto r = blahut_arimoto(oracle::bsc(flip));
    EXPECT_NEAR(r.capacity_bits, oracle::bsc_capacity(flip), kOptTol) << flip;
    EXPECT_GE(r.upper_bound_bits + kExactTol, r.capacity_bits);
  }
  EXPECT_NEAR(blahut_arimoto(oracle::bsc(0.25)).capacity_bits, 0.188722, 1e-6);
}

TEST(BlahutArimoto, ZChannel) {
  // Closed form for the Z channel with crossover q: log2(1 + (1-q) q^{q/(1-q)}).
  const double q = 0.5;
  Matrix w(2, 2);
  w << 1, 0, q, 1 - q;
  const double expected = std::log2(1 + (1 - q) * std::pow(q, q / (1 - q)));
  EXPECT_NEAR(blahut_arimoto(w).capacity_bits, expected, kOptTol);
}

TEST(BlahutArimoto, UselessChannel) {
  Matrix w = Matrix::Constant(3, 4, 0.25);
  EXPECT_NEAR(blahut_arimoto(w).capacity_bits, 0.0, kOptTol);
}

TEST(BlahutArimoto, DominatesUniformPriorAndMatchesOracle) {
  Rng rng = make_rng(11);
  for (int t = 0; t < 50; ++t) {
    const Index nx = 2 + t % 5, ny = 2 + (t / 5) % 5;
    Matrix w(nx, ny);
    for (Index x = 0; x < nx; ++x) w.row(x) = random_simplex(ny, rng).transpose();
    const auto r = blahut_arimoto(w);
    const Vector uniform = Vector::Constant(nx, 1.0 / static_cast<double>(nx));
    EXPECT_GE(r.capacity_bits + kOptTol, oracle::mutual_information(uniform, w));
    EXPECT_NEAR(r.capacity_bits, oracle::mutual_information(r.optimal_prior, w), 1e-12);
    EXPECT_LE(r.capacity_bits, std::log2(static_cast<double>(std::min(nx, ny))) + kOptTol);
    EXPECT_GE(r.upper_bound_bits + 1e-15, r.capacity_bits);
    EXPECT_LE(r.upper_bound_bits - r.capacity_bits, 1e-9);
  }
}

TEST(BlahutArimoto, Deterministic) {
  Matrix w(3, 3);
  w << 0.7, 0.2, 0.1, 0.1, 0.8, 0.1, 0.3, 0.3, 0.4;
  const auto a = blahut_arimoto(w), b = blahut_arimoto(w);
  EXPECT_EQ(a.capacity_bits, b.capacity_bits);
  EXPECT_EQ(a.optimal_prior, b.optimal_prior);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(BlahutArimoto, IterationCap) {
  Matrix w(3, 3);
  w << 0.7, 0.2, 0.1, 0.1, 0.8, 0.1, 0.3, 0.3, 0.4;
  const auto r = blahut_arimoto(w, {1e-15, 2});
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 2);
}

TEST(BlahutArimoto, LambdaTauChannel) {
  for (int n = 2; n <= 5; ++n) {
    const auto theory =
        variants::LambdaTauTheory::create(n, 1.0, variants::lt_product_upper_bound(n));
    const Channel ch = variants::lt_channel(theory);
    EXPECT_NEAR(blahut_arimoto(ch.conditional()).capacity_bits, variants::lt_optimal_info(n),
                kOptTol);
  }
  EXPECT_NEAR(variants::lt_optimal_info(3), 0.15356, 1e-5);
}

TEST(Bounds, Values) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(capacity::dimension_upper_bound(n), 2.0 * n);
  EXPECT_EQ(capacity::weak_threshold(0, 2), 1.0 / 3.0);
  EXPECT_EQ(capacity::weak_threshold(1, 2), 1.0);
  EXPECT_EQ(capacity::weak_threshold(1, 3), 3.0 / 7.0);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_DOUBLE_EQ(capacity::weak_entanglement_bound(capacity::weak_threshold(0, n), n), 1.0);
    EXPECT_DOUBLE_EQ(capacity::weak_entanglement_bound(capacity::weak_threshold(1, n), n), 2.0);
    EXPECT_DOUBLE_EQ(capacity::weak_entanglement_bound(1.0, n), n);
    EXPECT_DOUBLE_EQ(capacity::weak_entanglement_bound(-1.0, n), n);
  }
  EXPECT_THROW(capacity::weak_entanglement_bound(1.5, 2), std::domain_error);
}

TEST(Bounds, DenseCodingLowerBound) {
  for (int n = 1; n <= 6; ++n) {
    TheoryConfig c;
    c.n_bits = n;
    EXPECT_EQ(capacity::dc_capacity_lower_bound(c), n);
  }
}

TEST(Sandwich, HoldsForSmallN) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = capacity::bipartite_capacity_search(n, 50, 7);
    EXPECT_TRUE(r.ok()) << n;
    EXPECT_GE(r.best_observed + kOptTol, r.lower);
    EXPECT_LE(r.best_observed, r.upper + kOptTol);
  }
}

}  // namespace
}  // namespace gptlab
