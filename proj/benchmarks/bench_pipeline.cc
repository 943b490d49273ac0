// Copyright 2026 The angcov Authors
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

#include "angcov/coverage.h"
#include "angcov/generate.h"
#include "angcov/relax3r.h"
#include "angcov/suppliers.h"

namespace angcov {
namespace {

Instance Make(Variant v, int m, int n, double delta) {
  GenParams p;
  p.variant = v;
  p.kind = v == Variant::kArtAng ? GenKind::kPolygonCorridor : GenKind::kUniform;
  p.m = m;
  p.n = n;
  p.delta = delta;
  p.seed = 11;
  return Generate(p).instance;
}

void BM_IterateAng(benchmark::State& state) {
  const Instance inst = Make(Variant::kAng, 200, 100,
                             static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Iterate(inst));
}
BENCHMARK(BM_IterateAng)->Arg(2)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_IterateAngDist(benchmark::State& state) {
  const Instance inst = Make(Variant::kAngDist, 200, 100, 8);
  for (auto _ : state) benchmark::DoNotOptimize(Iterate(inst));
}
BENCHMARK(BM_IterateAngDist)->Unit(benchmark::kMillisecond);

void BM_IterateArtAng(benchmark::State& state) {
  const Instance inst = Make(Variant::kArtAng, 200, 100, 8);
  for (auto _ : state) benchmark::DoNotOptimize(Iterate(inst));
}
BENCHMARK(BM_IterateArtAng)->Unit(benchmark::kMillisecond);

void BM_Relax3R(benchmark::State& state) {
  const Instance inst = Make(Variant::kAngDist, 200, 100, 8);
  for (auto _ : state) benchmark::DoNotOptimize(SolveAngDist3R(inst));
}
BENCHMARK(BM_Relax3R)->Unit(benchmark::kMillisecond);

void BM_SuppliersRadiusSearch(benchmark::State& state) {
  const Instance inst = Make(Variant::kAng, 60, 40, 2);
  SupplierInstance si{inst.sensors, inst.targets, 2};
  for (auto _ : state) benchmark::DoNotOptimize(RadiusSearch(si, 20));
}
BENCHMARK(BM_SuppliersRadiusSearch)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace angcov
