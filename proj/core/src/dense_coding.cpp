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

#include "gptlab/protocols/dense_coding.hpp"

#include <cmath>
#include <stdexcept>

#include "gptlab/core/algebra.hpp"
#include "gptlab/core/information.hpp"
#include "gptlab/core/tolerances.hpp"
#include "gptlab/hadamard/hadamard.hpp"
#include "gptlab/variants/embedded.hpp"
#include "gptlab/variants/lambda_tau.hpp"
#include "gptlab/variants/weak.hpp"

namespace gptlab::protocols {

namespace {

DenseCodingRun base_run(const TheoryConfig& c) {
  const int n = c.n_bits;
  const auto size = static_cast<std::uint32_t>(hadamard::block_size(n));
  const BipartiteState phi0 = hadamard::entangled_state(0, n);
  const BipartiteMeasurement bell = hadamard::bell_measurement(n);
  Matrix w(size, size);
  for (std::uint32_t x = 0; x < size; ++x) {
    const BipartiteState phi_x = apply_on_a(hadamard::local_transformation(x, n), phi0);
    for (std::uint32_t y = 0; y < size; ++y) w(x, y) = bipartite_contract(bell.effects[y], phi_x);
  }
  Channel ch = Channel::with_uniform_prior(w);
  const double info = mutual_information(ch);
  return DenseCodingRun{c, phi0, std::move(ch), info};
}

}  // namespace

DenseCodingRun dense_coding(const TheoryConfig& c) {
  check_config(c);
  switch (c.kind) {
    case TheoryKind::Base:
      return base_run(c);
    case TheoryKind::LambdaTau: {
      const auto t = variants::LambdaTauTheory::create(c.n_bits, c.lambda, c.tau);
      Channel ch = variants::lt_channel(t);
      const double info = mutual_information(ch);
      return DenseCodingRun{c, t.state(0), std::move(ch), info};
    }
    case TheoryKind::Embedded: {
      const auto t = variants::EmbeddedTheory::create(c.n_bits, c.embed_dim);
      auto run = variants::embedded_dense_coding(t, c.seed);
      return DenseCodingRun{c, t.state(0), std::move(run.channel), run.info_bits};
    }
    case TheoryKind::Weak: {
      const auto t = variants::WeakTheory::create(c.n_bits, c.lambda);
      Channel ch = variants::weak_dense_coding(t);
      const double info = mutual_information(ch);
      return DenseCodingRun{c, t.state(0), std::move(ch), info};
    }
  }
  throw std::logic_error("dense_coding: unhandled theory");
}

std::string to_string(ProtocolClass c) {
  switch (c) {
    case ProtocolClass::Ordinary: return "ORDINARY";
    case ProtocolClass::Superdense: return "SUPERDENSE";
    case ProtocolClass::Hyperdense: return "HYPERDENSE";
  }
  return "UNKNOWN";
}

Classification classify(double dc_info, double local_capacity) {
  if (dc_info < 0.0 || local_capacity < 0.0) {
    throw std::domain_error("classify: capacities must be non-negative");
  }
  Classification out{ProtocolClass::Ordinary, dc_info, local_capacity};
  const double lhs = dc_info - kOptTol;
  if (lhs > 2.0 * local_capacity) {
    out.cls = ProtocolClass::Hyperdense;
  } else if (lhs > local_capacity) {
    out.cls = ProtocolClass::Superdense;
  }
  return out;
}

}  // namespace gptlab::protocols
