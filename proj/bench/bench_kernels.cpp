// Copyright 2026 The lenskit Authors
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


// Serial reference against the OpenMP kernels: digon census and the
// avoiding-pair scan.

#include <benchmark/benchmark.h>

#include <random>

#include "lenskit/census.hpp"
#include "lenskit/generators.hpp"
#include "lenskit/graphs.hpp"

namespace {

using namespace lenskit;

Family family(std::size_t n) {
  GenConfig cfg;
  cfg.n = n;
  cfg.seed = 17;
  cfg.radius_min = 2;
  cfg.radius_max = 4;
  return gen_random(cfg);
}

GeoGraph dense_graph(std::size_t v) {
  std::mt19937_64 rng(5);
  GeoGraph g;
  for (std::size_t t = 0; t < v; ++t) {
    g.vertices.push_back({static_cast<long>(rng() % 100000), static_cast<long>(rng() % 100000)});
  }
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      if (rng() % 3 == 0) g.edges.push_back({i, j, std::nullopt});
    }
  }
  return g;
}

void BM_CensusSerial(benchmark::State& state) {
  const Family f = family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(digon_census_serial(f));
}

void BM_CensusParallel(benchmark::State& state) {
  const Family f = family(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CensusEngine(f, threads).census_parallel(threads));
  }
}

void BM_AvoidingSerial(benchmark::State& state) {
  const GeoGraph g = dense_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_avoiding_pairs_serial(g));
  state.counters["edges"] = static_cast<double>(g.edges.size());
}

void BM_AvoidingParallel(benchmark::State& state) {
  const GeoGraph g = dense_graph(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(find_avoiding_pairs_parallel(g, threads));
  state.counters["edges"] = static_cast<double>(g.edges.size());
}

BENCHMARK(BM_CensusSerial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)
    ->ArgsProduct({{8, 16, 32}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_AvoidingSerial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AvoidingParallel)
    ->ArgsProduct({{30, 60}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
