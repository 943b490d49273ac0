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

#include "angcov/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <thread>

#include "angcov/error.h"
#include "angcov/oracle.h"
#include "angcov/relax3r.h"

namespace angcov {
namespace {

constexpr int kOracleLimit = 20;

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::vector<BenchRecord> BenchOne(const BenchConfig& config, int index) {
  GenParams params = config.base;
  params.seed = config.base.seed + static_cast<std::uint64_t>(index);
  const Instance inst = Generate(params).instance;

  int k_opt = -1;
  if (config.oracle && static_cast<int>(inst.sensors.size()) <= kOracleLimit) {
    try {
      k_opt = ExactMinCover(inst, kOracleLimit).k_opt;
    } catch (const Error&) {
      k_opt = -1;
    }
  }

  std::vector<std::string> solvers = {"framework"};
  if (config.relax3r && inst.variant == Variant::kAngDist) {
    solvers.push_back("relax3r");
  }
  std::vector<BenchRecord> out;
  for (const std::string& solver : solvers) {
    BenchRecord rec;
    rec.instance = index;
    rec.variant = std::string(VariantName(inst.variant));
    rec.kind = std::string(GenKindName(params.kind));
    rec.m = static_cast<int>(inst.sensors.size());
    rec.n = static_cast<int>(inst.targets.size());
    rec.alpha = inst.alpha;
    rec.delta = inst.delta;
    rec.solver = solver;
    rec.k_opt = k_opt;
    const auto start = std::chrono::steady_clock::now();
    try {
      SolveOptions options;
      options.seed = params.seed;
      const Solution sol = solver == "relax3r" ? SolveAngDist3R(inst, options)
                                               : Iterate(inst, options);
      rec.size = static_cast<int>(sol.selected.size());
      rec.beta_star = sol.achieved_level;
      for (const Witness& w : sol.witnesses) {
        rec.max_witness_distance =
            std::max({rec.max_witness_distance, w.d1, w.d2});
      }
      rec.status = "ok";
    } catch (const Error& e) {
      rec.status = std::string(ErrorCodeName(e.code()));
    } catch (const std::exception&) {
      rec.status = std::string(ErrorCodeName(ErrorCode::kInternal));
    }
    if (config.timing) {
      rec.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

int ThreadsFromEnv() {
  const char* env = std::getenv("ANGCOV_THREADS");
  if (env == nullptr) return 1;
  const int v = std::atoi(env);
  return v > 0 ? v : 1;
}

std::vector<BenchRecord> RunBench(const BenchConfig& config) {
  std::vector<std::vector<BenchRecord>> slots(std::max(0, config.count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < config.count; i = next++) {
      slots[i] = BenchOne(config, i);
    }
  };
  const int threads = std::clamp(config.threads, 1, std::max(1, config.count));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  std::vector<BenchRecord> records;
  for (auto& slot : slots) {
    for (BenchRecord& r : slot) records.push_back(std::move(r));
  }
  return records;
}

std::string BenchCsv(const std::vector<BenchRecord>& records) {
  std::string out =
      "instance,variant,kind,m,n,alpha,delta,solver,size,k_opt,beta_star,"
      "max_witness_distance,wall_ms,status\n";
  for (const BenchRecord& r : records) {
    out += std::to_string(r.instance) + "," + r.variant + "," + r.kind + "," +
           std::to_string(r.m) + "," + std::to_string(r.n) + "," +
           Num(r.alpha) + "," + Num(r.delta) + "," + r.solver + "," +
           std::to_string(r.size) + "," + std::to_string(r.k_opt) + "," +
           Num(r.beta_star) + "," + Num(r.max_witness_distance) + "," +
           Num(r.wall_ms) + "," + r.status + "\n";
  }
  return out;
}

}  // namespace angcov
