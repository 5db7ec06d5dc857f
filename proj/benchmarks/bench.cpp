// Copyright 2026 The qcss Authors.
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

#include <random>

#include "benchmark/benchmark.h"
#include "qcss/bounds.hpp"
#include "qcss/codec.hpp"
#include "qcss/codes.hpp"

using namespace qcss;

static void BM_RowReduce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  BinaryMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.append_row(BitWord(static_cast<std::uint32_t>(rng()) &
                             ((n == 32 ? 0 : (1u << n)) - 1),
                         n));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.row_reduce());
  }
}
BENCHMARK(BM_RowReduce)->Arg(8)->Arg(16)->Arg(24);

static void BM_SyndromeTable(benchmark::State& state) {
  const LinearCode h = zoo::hamming7();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_syndrome_table(h));
  }
}
BENCHMARK(BM_SyndromeTable);

static void BM_MinDistance(benchmark::State& state) {
  for (auto _ : state) {
    // Rebuilt each pass so the cached distance is not reused.
    LinearCode c = LinearCode::from_generator(zoo::simplex_generator());
    benchmark::DoNotOptimize(c.min_distance());
  }
}
BENCHMARK(BM_MinDistance);

static void BM_Encode(benchmark::State& state) {
  const CssTriple css = zoo::steane_triple();
  const std::vector<Amplitude> logical = {Amplitude(0.6), Amplitude(0.8)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(css, logical));
  }
}
BENCHMARK(BM_Encode);

static void BM_Hadamard(benchmark::State& state) {
  QuantumState s(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (int q = 0; q < s.system_qubits(); ++q) s.hadamard(q);
    benchmark::DoNotOptimize(s.amp(0));
  }
}
BENCHMARK(BM_Hadamard)->Arg(10)->Arg(16);

static void BM_Recovery(benchmark::State& state) {
  const CssTriple css = zoo::steane_triple();
  const std::vector<Amplitude> logical = {Amplitude(0.6), Amplitude(0.8)};
  const DefectionSpec defect = DefectionSpec::random({3}, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_theorem6_recovery(css, logical, defect));
  }
}
BENCHMARK(BM_Recovery);

static void BM_Survival(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(survival(10000, 0.04, 939, 10000));
  }
}
BENCHMARK(BM_Survival);

BENCHMARK_MAIN();
