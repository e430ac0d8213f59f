// Copyright 2026 The qroof Authors
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

#include "qroof/bounds.hpp"
#include "qroof/entanglement.hpp"
#include "qroof/metrology.hpp"
#include "qroof/roofs.hpp"
#include "qroof/sampling.hpp"
#include "qroof/states_lab.hpp"

namespace {

using namespace qroof;

void BM_Qfi(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng = make_stream(1);
  const DensityMatrix rho = random_density_matrix({d, d, 7});
  const HermitianOperator b = random_hermitian(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qfi(rho, b));
}
BENCHMARK(BM_Qfi)->Arg(2)->Arg(4)->Arg(16)->Arg(64);

void BM_DensityMatrixConstruction(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Matrix m = random_density_matrix({d, d, 3}).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(DensityMatrix(m));
}
BENCHMARK(BM_DensityMatrixConstruction)->Arg(4)->Arg(64);

void BM_ConvexRoofVariance(benchmark::State& state) {
  const DensityMatrix rho = random_density_matrix({3, 3, 11});
  const SpinAlgebra s = make_spin_algebra(1.0);
  OptimizerConfig cfg;
  cfg.restarts = 2;
  cfg.local_steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convex_roof_variance(rho, s.jx, cfg).value);
}
BENCHMARK(BM_ConvexRoofVariance)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ConcaveRoofL(benchmark::State& state) {
  const DensityMatrix rho = random_density_matrix({3, 3, 12});
  const SpinAlgebra s = make_spin_algebra(1.0);
  const OptimizerConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(concave_roof_L(rho, s.jx, s.jy, cfg).value);
}
BENCHMARK(BM_ConcaveRoofL)->Unit(benchmark::kMillisecond);

void BM_EigenPartitionK(benchmark::State& state) {
  const DensityMatrix rho = random_density_matrix({3, 3, 13});
  const SpinAlgebra s = make_spin_algebra(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(eigen_partition_bound_K(rho, s.jx, s.jy));
}
BENCHMARK(BM_EigenPartitionK);

void BM_FjValue(benchmark::State& state) {
  const double j = static_cast<double>(state.range(0)) / 2;
  fj_value(j, 0.3);  // fills the lambda scan cache
  int k = 0;
  for (auto _ : state) {
    k = (k + 1) % 10;
    benchmark::DoNotOptimize(fj_value(j, 0.05 + 0.1 * k));
  }
}
BENCHMARK(BM_FjValue)->Arg(1)->Arg(4)->Arg(20);

void BM_SpinSqueezedJ50(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bfq_bound(State(spin_squeezed_state(50.0, 10.0))));
}
BENCHMARK(BM_SpinSqueezedJ50)->Unit(benchmark::kMillisecond);

void BM_PlanarSqueezed(benchmark::State& state) {
  const double j = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(planar_squeezed_state(j).c_j);
}
BENCHMARK(BM_PlanarSqueezed)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_DuanReport(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const FockAlgebra fock = make_fock_algebra(cutoff);
  const PureState psi = two_mode_squeezed_vacuum(0.3, cutoff);
  for (auto _ : state) benchmark::DoNotOptimize(duan_report(psi, fock));
}
BENCHMARK(BM_DuanReport)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
