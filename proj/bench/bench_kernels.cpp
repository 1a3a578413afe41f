// Copyright 2026 The seqmeas Authors
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

// Serial reference against the OpenMP kernels. Run with OMP_NUM_THREADS set
// to compare thread counts.

#include <benchmark/benchmark.h>

#include "seqmeas/kernels.hpp"
#include "seqmeas/random.hpp"

namespace {

using namespace seqmeas;

template <class F>
void gemm_case(benchmark::State& state, F gemm) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMatrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(gemm(a, b));
  state.SetComplexityN(state.range(0));
}

void BM_GemmSerial(benchmark::State& s) { gemm_case(s, kernels::serial::gemm); }
void BM_GemmParallel(benchmark::State& s) { gemm_case(s, kernels::parallel::gemm); }

struct Setup {
  WeylSystem ws;
  std::vector<CMatrix> shifted;
  std::vector<kernels::WeylAction> actions;

  explicit Setup(int d) : ws(Group({d})) {
    Rng rng(2);
    shifted = random_measure(rng, ws.group()).shifted(ws);
    for (std::size_t x = 0; x < ws.dim(); ++x)
      for (std::size_t chi = 0; chi < ws.dim(); ++chi) actions.push_back({x, ws.weyl_op(x, chi)});
  }
};

template <class F>
void choi_case(benchmark::State& state, F choi) {
  const Setup s(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(choi(s.shifted, s.ws.group().tables()));
}

void BM_CovariantChoiSerial(benchmark::State& s) { choi_case(s, kernels::serial::covariant_choi); }
void BM_CovariantChoiParallel(benchmark::State& s) { choi_case(s, kernels::parallel::covariant_choi); }

template <class F>
void residual_case(benchmark::State& state, F residual) {
  const Setup s(static_cast<int>(state.range(0)));
  const auto choi = kernels::serial::covariant_choi(s.shifted, s.ws.group().tables());
  for (auto _ : state) benchmark::DoNotOptimize(residual(choi, s.actions, s.ws.group().tables()));
}

void BM_CovarianceResidualSerial(benchmark::State& s) { residual_case(s, kernels::serial::covariance_residual); }
void BM_CovarianceResidualParallel(benchmark::State& s) { residual_case(s, kernels::parallel::covariance_residual); }

}  // namespace

BENCHMARK(BM_GemmSerial)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_GemmParallel)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_CovariantChoiSerial)->DenseRange(3, 9, 2);
BENCHMARK(BM_CovariantChoiParallel)->DenseRange(3, 9, 2);
BENCHMARK(BM_CovarianceResidualSerial)->DenseRange(3, 7, 2);
BENCHMARK(BM_CovarianceResidualParallel)->DenseRange(3, 7, 2);

BENCHMARK_MAIN();
