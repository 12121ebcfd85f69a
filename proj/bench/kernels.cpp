// Copyright 2026 The Authors.
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


// Serial reference against the OpenMP path for each parallel kernel.
// The second benchmark argument selects the path: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "troplab/certifier.hpp"
#include "troplab/constructions.hpp"
#include "troplab/decomposition.hpp"
#include "troplab/generators.hpp"
#include "troplab/greedy.hpp"
#include "troplab/random.hpp"

namespace {

using namespace troplab;

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_KDense(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const SetFamily f = all_subsets_of_size(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_k_dense(f, n / 2 - 1, mode(state)));
}
BENCHMARK(BM_KDense)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EvaluateMany(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Circuit c = selection_circuit(n, n / 2);
  std::vector<Weighting> xs;
  for (std::uint64_t s = 0; s < 2000; ++s) xs.push_back(random_weighting(n, s));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_many(c, xs, mode(state)));
}
BENCHMARK(BM_EvaluateMany)->ArgsProduct({{10, 40}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_GreedyEstimate(benchmark::State& state) {
  const std::uint32_t m = static_cast<std::uint32_t>(state.range(0));
  const SetFamily f = hypergraph_matchings({m, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_factor_estimate(f, 500, 7, Sense::Max, mode(state)));
  }
}
BENCHMARK(BM_GreedyEstimate)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CertifyMax(benchmark::State& state) {
  const std::uint32_t m = static_cast<std::uint32_t>(state.range(0));
  const DesignSpec spec{m, 2};
  const Circuit c = design_approximator(spec);
  const VectorSet a = polynomial_design(spec).characteristic_vectors();
  CertifyOptions opt;
  opt.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(certify_max(c, a, Rational(m, 2), opt));
}
BENCHMARK(BM_CertifyMax)->ArgsProduct({{3, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Residues(benchmark::State& state) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(state.range(0)));
  RandomCircuitSpec spec;
  spec.semiring = Semiring::Minkowski;
  spec.num_vars = 6;
  spec.gates = static_cast<std::size_t>(state.range(0));
  spec.mul_percent = 50;
  const Circuit c = random_circuit(spec, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(residues(c, kDefaultProducedLimit, mode(state)));
  }
}
BENCHMARK(BM_Residues)->ArgsProduct({{10, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
