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

#include <vector>

#include "angcov/generate.h"
#include "angcov/hitting.h"
#include "angcov/netlib.h"

namespace angcov {
namespace {

// Seed-round ranges for a uniform instance: every target gets the wedge of
// sensor 0 at level alpha / 2.
RangeSpace SeedRanges(int m, int n, std::optional<double> radius) {
  GenParams p;
  p.m = m;
  p.n = n;
  p.seed = 3;
  const Instance inst = Generate(p).instance;
  std::vector<TargetId> all(inst.targets.size());
  for (size_t t = 0; t < all.size(); ++t) all[t] = static_cast<int>(t);
  std::vector<SensorId> s = {0};
  Eligibility member;
  member.max_distance = radius;
  return BuildRanges(inst.sensors, inst.targets, s, all, kPi / 3, kPi / 6, {},
                     member);
}

void BM_FatWedgeNet(benchmark::State& state) {
  const RangeSpace rs = SeedRanges(static_cast<int>(state.range(0)), 100, {});
  for (auto _ : state) benchmark::DoNotOptimize(FatWedgeEpsilonNet(rs, 0.1));
}
BENCHMARK(BM_FatWedgeNet)->Arg(50)->Arg(200)->Arg(800);

void BM_SampleNet(benchmark::State& state) {
  const RangeSpace rs = SeedRanges(static_cast<int>(state.range(0)), 100, {});
  for (auto _ : state) benchmark::DoNotOptimize(SampleEpsilonNet(rs, 0.1, 2, 7));
}
BENCHMARK(BM_SampleNet)->Arg(50)->Arg(200)->Arg(800);

void BM_Sector3RNet(benchmark::State& state) {
  const RangeSpace rs =
      SeedRanges(static_cast<int>(state.range(0)), 100, 10.0 / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Sector3REpsilonNet(rs, 0.1, 10.0 / 3));
  }
}
BENCHMARK(BM_Sector3RNet)->Arg(50)->Arg(200)->Arg(800);

void BM_BgFatWedge(benchmark::State& state) {
  const RangeSpace rs = SeedRanges(static_cast<int>(state.range(0)), 100, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(BgHittingSet(rs, FatWedgeNetBuilder()));
  }
}
BENCHMARK(BM_BgFatWedge)->Arg(50)->Arg(200);

}  // namespace
}  // namespace angcov
