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

#include <benchmark/benchmark.h>

#include "gptlab/core/random.hpp"
#include "gptlab/hadamard/hadamard.hpp"
#include "gptlab/hst/hst.hpp"
#include "gptlab/protocols/teleport.hpp"

namespace {

void BM_Teleport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gptlab::Rng rng = gptlab::make_rng(2);
  const auto input = gptlab::hst::make_state(
      gptlab::random_unit_vector(gptlab::hadamard::local_dim(n), rng));
  for (auto _ : state) benchmark::DoNotOptimize(gptlab::protocols::teleport(input, n, 0).max_residual);
}
BENCHMARK(BM_Teleport)->DenseRange(1, 4);

void BM_Swap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto phi = gptlab::hadamard::entangled_state(1, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(gptlab::protocols::entanglement_swap(phi, n, 0).max_residual);
}
BENCHMARK(BM_Swap)->DenseRange(1, 3);

}  // namespace
