// Copyright 2026 The ChannelForge Authors
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

// Serial reference vs OpenMP kernels for the two sampling workloads.

#include <benchmark/benchmark.h>

#include "channelforge/properties.hpp"
#include "channelforge/random.hpp"
#include "channelforge/sampling.hpp"
#include "channelforge/zoo.hpp"

namespace {

using namespace channelforge;

void BM_BlochImageSerial(benchmark::State& state) {
  const Channel ch = zoo::amplitude_damping(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bloch_image_sample_serial(ch, state.range(0), 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BlochImageParallel(benchmark::State& state) {
  const Channel ch = zoo::amplitude_damping(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bloch_image_sample(ch, state.range(0), 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ProbeSerial(benchmark::State& state) {
  Rng rng(3);
  const Channel ch = random_cptp(static_cast<std::size_t>(state.range(1)), 2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(probe_positivity_domain_serial(ch, state.range(0), 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ProbeParallel(benchmark::State& state) {
  Rng rng(3);
  const Channel ch = random_cptp(static_cast<std::size_t>(state.range(1)), 2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(probe_positivity_domain(ch, state.range(0), 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_BlochImageSerial)->Arg(2048)->Arg(10000);
BENCHMARK(BM_BlochImageParallel)->Arg(2048)->Arg(10000);
BENCHMARK(BM_ProbeSerial)->Args({10000, 2})->Args({1000, 4});
BENCHMARK(BM_ProbeParallel)->Args({10000, 2})->Args({1000, 4});

BENCHMARK_MAIN();
