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

// Benchmark sweeps over generated instances, emitted as CSV.

#ifndef ANGCOV_BENCH_H_
#define ANGCOV_BENCH_H_

#include <string>
#include <vector>

#include "angcov/generate.h"

namespace angcov {

struct BenchRecord {
  int instance = 0;
  std::string variant;
  std::string kind;
  int m = 0;
  int n = 0;
  double alpha = 0.0;
  double delta = 0.0;
  std::string solver;
  int size = -1;
  int k_opt = -1;
  double beta_star = 0.0;
  double max_witness_distance = 0.0;
  double wall_ms = 0.0;
  std::string status;
};

struct BenchConfig {
  GenParams base;   // instance i uses seed base.seed + i
  int count = 10;
  bool relax3r = false;  // add the 3R solver (angdist only)
  bool oracle = false;   // fill k_opt when m is small enough
  bool timing = false;   // wall_ms stays 0 unless set
  int threads = 1;
};

// ANGCOV_THREADS if set and positive, else 1.
int ThreadsFromEnv();

// One record per (instance, solver), ordered by instance then solver.
std::vector<BenchRecord> RunBench(const BenchConfig& config);

std::string BenchCsv(const std::vector<BenchRecord>& records);

}  // namespace angcov

#endif  // ANGCOV_BENCH_H_
