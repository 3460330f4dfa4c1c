// Copyright 2026 The qrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference loop against the OpenMP shot loop on the same point. Both count
// the same failures; only wall time should differ.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "qrad/campaign/runner.hpp"

namespace {

using namespace qrad::campaign;

struct Fixture {
  explicit Fixture(const char* code, const char* arch) : cache(1) {
    const auto spec = qrad::codes::CodeSpec::parse(code);
    prepared = cache.get(spec, arch);
    point.code = spec;
    point.arch = arch;
    point.fault = FaultKind::RADIATION;
    point.root = 2;
    point.peak = 0.5;
    point.phys_error_rate = 0.01;
    point.assign_seed(1);
  }
  PreparedCache cache;
  std::shared_ptr<const PreparedCode> prepared;
  CampaignPoint point;
};

Fixture& fixture(int which) {
  static Fixture rep("rep:5,1", "mesh:5,2");
  static Fixture xxzz("xxzz:3,3", "mesh:5,4");
  return which == 0 ? rep : xxzz;
}

void BM_Serial(benchmark::State& state) {
  auto& f = fixture(static_cast<int>(state.range(0)));
  const auto noisy = instrument_point(f.point, *f.prepared);
  const auto shots = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_logical_errors_serial(noisy, f.prepared->decoder(), f.point.seed, 0, shots));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_OpenMP(benchmark::State& state) {
  auto& f = fixture(static_cast<int>(state.range(0)));
  const auto noisy = instrument_point(f.point, *f.prepared);
  const auto shots = static_cast<std::size_t>(state.range(1));
  const int threads = omp_get_max_threads();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        count_logical_errors_openmp(noisy, f.prepared->decoder(), f.point.seed, 0, shots, threads));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.counters["threads"] = threads;
}

BENCHMARK(BM_Serial)->Args({0, 2000})->Args({1, 2000})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OpenMP)->Args({0, 2000})->Args({1, 2000})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
