// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/sampling.hpp"
#include "wignerkit/state_space.hpp"
#include "wignerkit/symmetry.hpp"
#include "wignerkit/wigner.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace wignerkit;

void BM_FsDistance(benchmark::State& state) {
  Rng rng(1);
  const Index dim = state.range(0);
  const Ray a = random_ray(dim, rng);
  const Ray b = random_ray(dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(fs_distance(a, b));
}
BENCHMARK(BM_FsDistance)->Arg(2)->Arg(16)->Arg(256);

void BM_MakeProbeTable(benchmark::State& state) {
  const SymmetryOp s = random_symmetry(state.range(0), Grading::antiunitary, 2);
  for (auto _ : state) benchmark::DoNotOptimize(make_probe_table(s));
}
BENCHMARK(BM_MakeProbeTable)->RangeMultiplier(2)->Range(2, 64);

void BM_WignerLift(benchmark::State& state) {
  const ProbeTable table = make_probe_table(random_symmetry(state.range(0), Grading::unitary, 3));
  for (auto _ : state) benchmark::DoNotOptimize(wigner_lift(table));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WignerLift)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_Curvature(benchmark::State& state) {
  Rng rng(4);
  const Ray base = random_ray(state.range(0), rng);
  const auto x = TangentVector::project(base, gaussian_vector(base.dim(), rng));
  const auto y = TangentVector::project(base, gaussian_vector(base.dim(), rng));
  const auto z = TangentVector::project(base, gaussian_vector(base.dim(), rng));
  for (auto _ : state) benchmark::DoNotOptimize(curvature(base, x, y, z));
}
BENCHMARK(BM_Curvature)->Arg(4)->Arg(8);

void BM_CurvatureOracle(benchmark::State& state) {
  Rng rng(5);
  const Ray base = random_ray(state.range(0), rng);
  const auto x = TangentVector::project(base, gaussian_vector(base.dim(), rng));
  const auto y = TangentVector::project(base, gaussian_vector(base.dim(), rng));
  const auto z = TangentVector::project(base, gaussian_vector(base.dim(), rng));
  for (auto _ : state) benchmark::DoNotOptimize(curvature_fd_oracle(base, x, y, z, 1e-3));
}
BENCHMARK(BM_CurvatureOracle)->Arg(4)->Arg(8);

void BM_HaarUnitary(benchmark::State& state) {
  Rng rng(6);
  for (auto _ : state) benchmark::DoNotOptimize(haar_unitary(state.range(0), rng));
}
BENCHMARK(BM_HaarUnitary)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
