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

#include "gptlab/capacity/blahut_arimoto.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/hst/hst.hpp"

namespace {

void BM_BlahutArimoto(benchmark::State& state) {
  const auto k = static_cast<gptlab::Index>(state.range(0));
  gptlab::Rng rng = gptlab::make_rng(1);
  gptlab::Matrix w(k, k);
  for (gptlab::Index x = 0; x < k; ++x) w.row(x) = gptlab::random_simplex(k, rng).transpose();
  for (auto _ : state) benchmark::DoNotOptimize(gptlab::blahut_arimoto(w).capacity_bits);
}
BENCHMARK(BM_BlahutArimoto)->RangeMultiplier(4)->Range(2, 64);

void BM_HstSearch(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gptlab::hst::random_capacity_search(state.range(0), 100, 3));
}
BENCHMARK(BM_HstSearch)->Arg(3)->Arg(15)->Unit(benchmark::kMillisecond);

}  // namespace
