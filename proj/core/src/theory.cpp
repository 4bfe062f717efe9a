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

#include "gptlab/theory.hpp"

#include <stdexcept>

#include "gptlab/core/random.hpp"
#include "gptlab/hadamard/hadamard.hpp"
#include "gptlab/variants/embedded.hpp"
#include "gptlab/variants/lambda_tau.hpp"
#include "gptlab/variants/weak.hpp"

namespace gptlab {

std::string to_string(TheoryKind kind) {
  switch (kind) {
    case TheoryKind::Base: return "base";
    case TheoryKind::LambdaTau: return "lambda-tau";
    case TheoryKind::Embedded: return "embedded";
    case TheoryKind::Weak: return "weak";
  }
  return "unknown";
}

TheoryKind parse_theory_kind(const std::string& name) {
  if (name == "base") return TheoryKind::Base;
  if (name == "lambda-tau") return TheoryKind::LambdaTau;
  if (name == "embedded") return TheoryKind::Embedded;
  if (name == "weak") return TheoryKind::Weak;
  throw std::invalid_argument("unknown theory '" + name + "'");
}

void check_config(const TheoryConfig& c) {
  switch (c.kind) {
    case TheoryKind::Base: hadamard::block_size(c.n_bits); break;
    case TheoryKind::LambdaTau: variants::LambdaTauTheory::create(c.n_bits, c.lambda, c.tau); break;
    case TheoryKind::Embedded: variants::EmbeddedTheory::create(c.n_bits, c.embed_dim); break;
    case TheoryKind::Weak: variants::WeakTheory::create(c.n_bits, c.lambda); break;
  }
}

LocalBall local_space(const TheoryConfig& c) {
  check_config(c);
  const Index n = hadamard::local_dim(c.n_bits);
  if (c.kind == TheoryKind::Embedded) return LocalBall{n, c.embed_dim};
  return LocalBall{0, n};
}

BipartiteStateSpace bipartite_space(const TheoryConfig& c, int product_samples, int rotations) {
  const LocalBall local = local_space(c);
  BipartiteStateSpace space{local, local, {}, product_samples, c.seed};
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(c.n_bits));
  auto add = [&](const std::string& label, BipartiteState phi) {
    space.generators.emplace_back(label, std::move(phi));
  };
  switch (c.kind) {
    case TheoryKind::Base:
      for (std::uint32_t mu = 0; mu < size; ++mu) {
        add("phi_" + std::to_string(mu), hadamard::entangled_state(mu, c.n_bits));
      }
      break;
    case TheoryKind::LambdaTau: {
      const auto t = variants::LambdaTauTheory::create(c.n_bits, c.lambda, c.tau);
      for (std::uint32_t mu = 0; mu < size; ++mu) add("phi_" + std::to_string(mu), t.state(mu));
      add("phi_0 T'", t.witness_state());
      Rng rng = make_rng(c.seed, 0xa11);
      for (int k = 0; k < rotations; ++k) {
        add("rotated #" + std::to_string(k),
            t.rotated_state(random_rotation(size - 1, rng), random_rotation(size - 1, rng)));
      }
      break;
    }
    case TheoryKind::Embedded: {
      const auto t = variants::EmbeddedTheory::create(c.n_bits, c.embed_dim);
      for (std::uint32_t mu = 0; mu < size; ++mu) add("Phi_" + std::to_string(mu), t.state(mu));
      break;
    }
    case TheoryKind::Weak: {
      const auto t = variants::WeakTheory::create(c.n_bits, c.lambda);
      for (std::uint32_t mu = 0; mu < size; ++mu) add("phi_" + std::to_string(mu), t.state(mu));
      break;
    }
  }
  return space;
}

ValidationReport validate_measurement(const Measurement& m, const TheoryConfig& c) {
  return validate_measurement(m, local_space(c));
}

ValidationReport validate_measurement(const BipartiteMeasurement& m, const TheoryConfig& c) {
  return validate_measurement(m, bipartite_space(c));
}

}  // namespace gptlab
