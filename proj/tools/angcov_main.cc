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

// angcov command line: gen | solve | verify | oracle | bench | render.
//
// Exit codes: 0 ok, 1 verification failure or internal fault, 2 infeasible,
// 3 bad input.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "angcov/bench.h"
#include "angcov/coverage.h"
#include "angcov/error.h"
#include "angcov/generate.h"
#include "angcov/instance_io.h"
#include "angcov/oracle.h"
#include "angcov/relax3r.h"
#include "angcov/render.h"
#include "angcov/suppliers.h"
#include "json.hpp"

namespace {

using angcov::Error;
using angcov::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitBadInput = 3;

struct Common {
  std::string in;
  std::string out;
  std::string variant;
  std::optional<double> alpha;
  std::optional<double> delta;
  std::optional<double> radius;
  std::uint64_t seed = 1;
};

void Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    angcov::WriteTextFile(path, text);
  }
}

angcov::InstanceFile LoadInstance(const Common& c) {
  angcov::InstanceFile file =
      angcov::ParseInstance(angcov::ReadTextFile(c.in));
  angcov::Instance& inst = file.instance;
  if (!c.variant.empty()) {
    const auto v = angcov::ParseVariant(c.variant);
    if (!v) throw Error(ErrorCode::kBadParams, "unknown variant " + c.variant);
    inst.variant = *v;
  }
  if (c.alpha) inst.alpha = *c.alpha;
  if (c.delta) inst.delta = *c.delta;
  if (c.radius) inst.radius = *c.radius;
  return file;
}

void AddGenOptions(CLI::App* cmd, angcov::GenParams* p, std::string* kind,
                   std::string* variant) {
  cmd->add_option("--kind", *kind, "uniform | grid | circle | polygon-corridor")
      ->capture_default_str();
  cmd->add_option("--variant", *variant, "ang | angdist | artang")
      ->capture_default_str();
  cmd->add_option("-m,--sensors", p->m, "number of sensors")->capture_default_str();
  cmd->add_option("-n,--targets", p->n, "number of targets")->capture_default_str();
  cmd->add_option("--alpha", p->alpha, "coverage angle (radians)");
  cmd->add_option("--delta", p->delta, "approximation parameter, > 1")
      ->capture_default_str();
  cmd->add_option("--radius", p->radius, "sensing radius (angdist)");
  cmd->add_option("--extent", p->extent, "side of the bounding square")
      ->capture_default_str();
  cmd->add_option("--seed", p->seed, "random seed")->capture_default_str();
}

void ResolveGen(angcov::GenParams* p, const std::string& kind,
                const std::string& variant) {
  const auto k = angcov::ParseGenKind(kind);
  if (!k) throw Error(ErrorCode::kBadParams, "unknown kind " + kind);
  p->kind = *k;
  const auto v = angcov::ParseVariant(variant);
  if (!v) throw Error(ErrorCode::kBadParams, "unknown variant " + variant);
  p->variant = *v;
}

int Run(int argc, char** argv) {
  CLI::App app{"Angular coverage sensor placement"};
  app.require_subcommand(1);

  // gen
  angcov::GenParams gen_params;
  std::string gen_kind = "uniform", gen_variant = "ang", gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  AddGenOptions(gen, &gen_params, &gen_kind, &gen_variant);
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // solve
  Common solve_c;
  bool relax3r = false, suppliers = false;
  int budget = 0;
  CLI::App* solve = app.add_subcommand("solve", "compute a sensor set");
  solve->add_option("--in", solve_c.in, "instance file")->required();
  solve->add_option("--out", solve_c.out, "solution file (default stdout)");
  solve->add_option("--variant", solve_c.variant, "override the variant");
  solve->add_option("--alpha", solve_c.alpha, "override alpha");
  solve->add_option("--delta", solve_c.delta,
                    "override delta (fault tolerance with --suppliers)");
  solve->add_option("--radius", solve_c.radius, "override the radius");
  solve->add_option("--seed", solve_c.seed, "solver seed")->capture_default_str();
  solve->add_flag("--relax3r", relax3r, "angdist with the 3R relaxation");
  solve->add_flag("--suppliers", suppliers,
                  "fault-tolerant k-suppliers (sensors supply targets)");
  solve->add_option("--budget", budget,
                    "with --suppliers: search the radius for k suppliers");

  // verify
  Common verify_c;
  std::string verify_solution;
  std::optional<double> verify_level;
  bool verify_relax3r = false;
  CLI::App* verify = app.add_subcommand("verify", "check a solution");
  verify->add_option("--in", verify_c.in, "instance file")->required();
  verify->add_option("--solution", verify_solution, "solution file")->required();
  verify->add_option("--level", verify_level,
                     "coverage level (default alpha (1 - 2^-rounds))");
  verify->add_option("--radius", verify_c.radius, "distance bound override");
  verify->add_flag("--relax3r", verify_relax3r, "use the 3R distance bound");
  verify->add_option("--out", verify_c.out, "report file (default stdout)");

  // oracle
  Common oracle_c;
  int oracle_limit = 20;
  CLI::App* oracle = app.add_subcommand("oracle", "exact minimum sensor set");
  oracle->add_option("--in", oracle_c.in, "instance file")->required();
  oracle->add_option("--limit", oracle_limit, "maximum number of sensors")
      ->capture_default_str();
  oracle->add_option("--out", oracle_c.out, "output file (default stdout)");

  // bench
  angcov::BenchConfig bench_cfg;
  std::string bench_kind = "uniform", bench_variant = "ang", bench_out;
  CLI::App* bench = app.add_subcommand("bench", "benchmark sweep as CSV");
  AddGenOptions(bench, &bench_cfg.base, &bench_kind, &bench_variant);
  bench->add_option("--count", bench_cfg.count, "number of instances")
      ->capture_default_str();
  bench->add_flag("--relax3r", bench_cfg.relax3r, "also run the 3R solver");
  bench->add_flag("--oracle", bench_cfg.oracle, "compute k_opt when m <= 20");
  bench->add_flag("--timing", bench_cfg.timing, "record wall time");
  bench->add_option("--out", bench_out, "CSV file (default stdout)");

  // render
  Common render_c;
  std::string render_solution;
  std::optional<int> render_target;
  CLI::App* render = app.add_subcommand("render", "draw an instance as SVG");
  render->add_option("--in", render_c.in, "instance file")->required();
  render->add_option("--solution", render_solution, "solution file");
  render->add_option("--target", render_target, "target whose witness is drawn");
  render->add_option("--out", render_c.out, "SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (*gen) {
    ResolveGen(&gen_params, gen_kind, gen_variant);
    Emit(gen_out, angcov::SerializeInstance(angcov::Generate(gen_params)));
    return kExitOk;
  }

  if (*solve) {
    const angcov::InstanceFile file = LoadInstance(solve_c);
    const angcov::Instance& inst = file.instance;
    if (suppliers) {
      const angcov::SupplierInstance si = angcov::ToSupplierInstance(inst);
      angcov::SuppliersResult res;
      double radius = 0.0;
      if (budget > 0) {
        const angcov::RadiusSearchResult rs = angcov::RadiusSearch(si, budget);
        res = rs.solution;
        radius = rs.radius;
      } else {
        if (!(inst.radius > 0.0)) {
          throw Error(ErrorCode::kBadParams, "--suppliers needs --radius or --budget");
        }
        radius = inst.radius;
        res = angcov::SolveFtSuppliers(si, radius);
      }
      if (!angcov::DeltaCovered(si, res.selected, res.cover_radius)) {
        throw Error(ErrorCode::kInternal, "supplier re-verification failed");
      }
      Emit(solve_c.out, angcov::SerializeSuppliers(si, res, radius, budget));
      return kExitOk;
    }
    angcov::SolveOptions options;
    options.seed = solve_c.seed;
    const angcov::Solution sol = relax3r ? angcov::SolveAngDist3R(inst, options)
                                         : angcov::Iterate(inst, options);
    Emit(solve_c.out, angcov::SerializeSolution(inst, sol));
    return kExitOk;
  }

  if (*verify) {
    const angcov::Instance inst = LoadInstance(verify_c).instance;
    angcov::ValidateInstance(inst);
    const std::vector<angcov::SensorId> selected =
        angcov::ParseSelected(angcov::ReadTextFile(verify_solution));
    for (angcov::SensorId s : selected) {
      if (s < 0 || s >= static_cast<int>(inst.sensors.size())) {
        throw Error(ErrorCode::kBadParams, "solution refers to unknown sensor");
      }
    }
    const double level = verify_level.value_or(
        inst.alpha * (1.0 - std::ldexp(1.0, -angcov::NumRounds(inst.delta))));
    std::optional<double> bound;
    if (inst.variant == angcov::Variant::kAngDist) {
      bound = verify_relax3r ? 3.0 * inst.radius : inst.radius;
    }
    const angcov::VerifyReport report =
        angcov::VerifySolution(inst, selected, level, bound);
    nlohmann::ordered_json j;
    j["pass"] = report.pass;
    j["level"] = level;
    if (bound) j["distance_bound"] = *bound;
    j["size"] = selected.size();
    j["min_level"] = inst.targets.empty() ? level : report.min_level;
    j["failures"] = report.failures;
    Emit(verify_c.out, j.dump(1) + "\n");
    return report.pass ? kExitOk : kExitVerifyFailed;
  }

  if (*oracle) {
    const angcov::Instance inst = LoadInstance(oracle_c).instance;
    angcov::ValidateInstance(inst);
    const angcov::ExactCover ec = angcov::ExactMinCover(inst, oracle_limit);
    nlohmann::ordered_json j;
    j["k_opt"] = ec.k_opt;
    j["selected"] = ec.ids;
    j["subsets_examined"] = ec.nodes;
    Emit(oracle_c.out, j.dump(1) + "\n");
    return kExitOk;
  }

  if (*bench) {
    ResolveGen(&bench_cfg.base, bench_kind, bench_variant);
    bench_cfg.threads = angcov::ThreadsFromEnv();
    Emit(bench_out, angcov::BenchCsv(angcov::RunBench(bench_cfg)));
    return kExitOk;
  }

  if (*render) {
    const angcov::Instance inst = LoadInstance(render_c).instance;
    std::vector<angcov::SensorId> selected;
    if (!render_solution.empty()) {
      selected = angcov::ParseSelected(angcov::ReadTextFile(render_solution));
    }
    angcov::RenderOptions opts;
    opts.focus = render_target;
    Emit(render_c.out, angcov::RenderSvg(inst, selected, opts));
    return kExitOk;
  }
  return kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const Error& e) {
    nlohmann::ordered_json j;
    j["error"] = std::string(angcov::ErrorCodeName(e.code()));
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    if (angcov::IsInfeasibility(e.code())) return kExitInfeasible;
    if (e.code() == ErrorCode::kInternal) return kExitVerifyFailed;
    return kExitBadInput;
  } catch (const std::exception& e) {
    nlohmann::ordered_json j;
    j["error"] = "Internal";
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return kExitVerifyFailed;
  }
}
