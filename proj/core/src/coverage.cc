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

#include "angcov/coverage.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "angcov/dudc.h"
#include "angcov/error.h"
#include "angcov/relax3r.h"

namespace angcov {
namespace {

bool Finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void SortUnique(std::vector<SensorId>* ids) {
  std::sort(ids->begin(), ids->end());
  ids->erase(std::unique(ids->begin(), ids->end()), ids->end());
}

std::optional<double> PolicyBound(const Instance& inst, DistancePolicy policy) {
  switch (policy) {
    case DistancePolicy::kNone:
      return std::nullopt;
    case DistancePolicy::kR:
      return inst.radius;
    case DistancePolicy::k3R:
      return 3.0 * inst.radius;
  }
  return std::nullopt;
}

int HoleScale(const Instance& inst) {
  const int h = inst.polygon ? inst.polygon->hole_count() : 0;
  return static_cast<int>(std::ceil(std::log2(h + 2.0) - 1e-12));
}

std::uint64_t RoundSeed(std::uint64_t seed, int round) {
  return seed * 0x100000001b3ULL + static_cast<std::uint64_t>(round) * 7919;
}

// Best witness plus whether any eligible pair passes the beta predicate.
Witness ScanPairs(const std::vector<Point2>& sensors,
                  std::span<const SensorId> selected, Point2 tp, TargetId t,
                  const Eligibility& rule, const CoveragePredicate* covers,
                  bool* covered) {
  std::vector<SensorId> eligible;
  for (SensorId s : selected) {
    if (rule.Allows(s, sensors[s], t, tp)) eligible.push_back(s);
  }
  Witness best;
  if (covered != nullptr) *covered = false;
  for (size_t i = 0; i < eligible.size(); ++i) {
    for (size_t j = i + 1; j < eligible.size(); ++j) {
      const Point2 a = sensors[eligible[i]];
      const Point2 b = sensors[eligible[j]];
      if (a == b) continue;
      if (covers != nullptr && covered != nullptr && !*covered &&
          (*covers)(a, b, tp)) {
        *covered = true;
      }
      const double angle = AngleAt(tp, a, b);
      const double level = std::min(angle, kPi - angle);
      if (level > best.level) {
        best = {eligible[i], eligible[j], level, angle, Dist(a, tp),
                Dist(b, tp)};
      }
    }
  }
  return best;
}

}  // namespace

std::string_view VariantName(Variant v) {
  switch (v) {
    case Variant::kAng:
      return "ang";
    case Variant::kAngDist:
      return "angdist";
    case Variant::kArtAng:
      return "artang";
  }
  return "?";
}

std::optional<Variant> ParseVariant(std::string_view name) {
  if (name == "ang") return Variant::kAng;
  if (name == "angdist") return Variant::kAngDist;
  if (name == "artang") return Variant::kArtAng;
  return std::nullopt;
}

void ValidateInstance(const Instance& inst) {
  if (!(inst.alpha >= 0.0 && inst.alpha <= kPi / 3 + kAngleTol)) {
    throw Error(ErrorCode::kBadParams, "alpha must lie in [0, pi/3]");
  }
  if (!(inst.delta > 1.0) || !std::isfinite(inst.delta)) {
    throw Error(ErrorCode::kBadParams, "delta must be a finite value > 1");
  }
  for (const auto* set : {&inst.sensors, &inst.targets}) {
    for (Point2 p : *set) {
      if (!Finite(p)) throw Error(ErrorCode::kBadParams, "non-finite point");
    }
  }
  if (inst.variant == Variant::kAngDist &&
      !(inst.radius > 0.0 && std::isfinite(inst.radius))) {
    throw Error(ErrorCode::kBadParams, "angdist needs a positive radius");
  }
  if (inst.variant == Variant::kArtAng) {
    if (!inst.polygon) {
      throw Error(ErrorCode::kBadParams, "artang needs a polygon");
    }
    const PolygonEnv& region = inst.region ? *inst.region : *inst.polygon;
    for (Point2 p : inst.sensors) {
      if (!PolygonContains(*inst.polygon, p)) {
        throw Error(ErrorCode::kOutsidePolygon, "sensor outside polygon");
      }
    }
    for (Point2 p : inst.targets) {
      if (!PolygonContains(region, p) || !PolygonContains(*inst.polygon, p)) {
        throw Error(ErrorCode::kOutsidePolygon, "target outside region");
      }
    }
  }
}

std::optional<VisibilityTable> MakeVisibility(const Instance& inst) {
  if (inst.variant != Variant::kArtAng || !inst.polygon) return std::nullopt;
  return VisibilityTable(inst.sensors, inst.targets, *inst.polygon);
}

Eligibility MakeEligibility(const Instance& inst,
                            std::optional<double> max_distance,
                            const VisibilityTable* visibility) {
  Eligibility e;
  if (inst.variant == Variant::kAngDist) e.max_distance = max_distance;
  if (inst.variant == Variant::kArtAng) e.visibility = visibility;
  return e;
}

Witness BestWitness(const std::vector<Point2>& sensors,
                    std::span<const SensorId> selected, Point2 target,
                    TargetId t, const Eligibility& rule) {
  return ScanPairs(sensors, selected, target, t, rule, nullptr, nullptr);
}

std::vector<TargetId> UncoveredTargets(const std::vector<Point2>& sensors,
                                       const std::vector<Point2>& targets,
                                       std::span<const SensorId> selected,
                                       double beta, const Eligibility& rule) {
  const CoveragePredicate covers(std::max(0.0, beta));
  std::vector<TargetId> out;
  std::vector<SensorId> eligible;
  for (TargetId t = 0; t < static_cast<TargetId>(targets.size()); ++t) {
    const Point2 tp = targets[t];
    eligible.clear();
    for (SensorId s : selected) {
      if (rule.Allows(s, sensors[s], t, tp)) eligible.push_back(s);
    }
    bool covered = false;
    for (size_t i = 0; i < eligible.size() && !covered; ++i) {
      for (size_t j = i + 1; j < eligible.size(); ++j) {
        const Point2 a = sensors[eligible[i]];
        const Point2 b = sensors[eligible[j]];
        if (a != b && covers(a, b, tp)) {
          covered = true;
          break;
        }
      }
    }
    if (!covered) out.push_back(t);
  }
  return out;
}

VerifyReport VerifySolution(const Instance& inst,
                            std::span<const SensorId> selected, double beta,
                            std::optional<double> distance_bound) {
  const std::optional<VisibilityTable> vis = MakeVisibility(inst);
  if (!distance_bound && inst.variant == Variant::kAngDist) {
    distance_bound = inst.radius;
  }
  const Eligibility rule =
      MakeEligibility(inst, distance_bound, vis ? &*vis : nullptr);
  const CoveragePredicate covers(std::max(0.0, beta));
  VerifyReport report;
  report.pass = true;
  report.min_level = std::numeric_limits<double>::infinity();
  for (TargetId t = 0; t < static_cast<TargetId>(inst.targets.size()); ++t) {
    bool covered = false;
    Witness w = ScanPairs(inst.sensors, selected, inst.targets[t], t, rule,
                          &covers, &covered);
    report.min_level = std::min(report.min_level, w.level);
    if (!covered) {
      report.pass = false;
      report.failures.push_back(t);
    }
    report.witnesses.push_back(w);
  }
  return report;
}

RefineResult Refine(const Instance& inst, std::span<const SensorId> selected,
                    double eps, DistancePolicy policy,
                    const SolveOptions& options,
                    const VisibilityTable* visibility, int round) {
  const double alpha = inst.alpha;
  const double level = std::max(0.0, alpha - eps);
  const Eligibility pair_rule =
      MakeEligibility(inst, PolicyBound(inst, policy), visibility);
  const Eligibility member_rule =
      MakeEligibility(inst, inst.radius, visibility);

  RefineResult out;
  out.selected.assign(selected.begin(), selected.end());
  SortUnique(&out.selected);
  out.log.round = round;
  out.log.eps = eps;
  out.log.level = level;

  const std::vector<TargetId> uncovered = UncoveredTargets(
      inst.sensors, inst.targets, out.selected, level, pair_rule);
  out.log.uncovered = static_cast<int>(uncovered.size());
  if (uncovered.empty()) return out;

  RangeSpace rs = BuildRanges(inst.sensors, inst.targets, out.selected,
                              uncovered, alpha, eps, pair_rule, member_rule);
  const bool relax = options.relax3r && inst.variant == Variant::kAngDist;
  if (relax) rs.extension_radius = 3.0 * inst.radius;
  std::erase_if(rs.ranges, [&](const Range& r) {
    for (SensorId s : out.selected) {
      if (rs.Hits(r, s)) return true;
    }
    return false;
  });
  out.log.ranges = static_cast<int>(rs.ranges.size());

  if (!rs.ranges.empty()) {
    BgOptions bg;
    bg.seed = RoundSeed(options.seed, round);
    bg.loop_constant = options.loop_constant;
    bg.prune = options.prune;
    std::vector<SensorId> hitting;
    if (relax) {
      hitting = ShiftedHitting3R(rs, inst.radius, options.shift_l, bg).ids;
    } else {
      NetBuilder builder;
      switch (inst.variant) {
        case Variant::kAng:
          builder = FatWedgeNetBuilder();
          break;
        case Variant::kAngDist:
          builder = SampleNetBuilder(options.vc_bound);
          break;
        case Variant::kArtAng:
          builder = SampleNetBuilder(options.vc_bound * HoleScale(inst));
          break;
      }
      HittingResult hr = BgHittingSet(rs, builder, bg);
      out.log.stats = hr.stats;
      hitting = std::move(hr.ids);
    }
    out.log.hitting_size = static_cast<int>(hitting.size());
    for (const Range& r : rs.ranges) {
      for (SensorId id : hitting) {
        if (rs.Hits(r, id)) {
          out.hits.push_back({round, r.target, id, r.generator1,
                              r.generator2, r.beta});
          break;
        }
      }
    }
    const size_t before = out.selected.size();
    out.selected.insert(out.selected.end(), hitting.begin(), hitting.end());
    SortUnique(&out.selected);
    out.log.added = static_cast<int>(out.selected.size() - before);
  }

  if (!UncoveredTargets(inst.sensors, inst.targets, out.selected, level,
                        pair_rule)
           .empty()) {
    throw Error(ErrorCode::kInternal,
                "refine postcondition failed at round " +
                    std::to_string(round));
  }
  return out;
}

std::vector<SensorId> Seed(const Instance& inst, const SolveOptions& options,
                           const VisibilityTable* visibility) {
  std::vector<SensorId> seed;
  if (inst.targets.empty()) return seed;
  if (inst.sensors.empty()) {
    throw Error(ErrorCode::kInfeasible, "no sensors");
  }
  const Eligibility rule = MakeEligibility(inst, inst.radius, visibility);
  switch (inst.variant) {
    case Variant::kAng:
      seed.push_back(0);
      break;
    case Variant::kAngDist:
      seed = GreedyDudc(inst.sensors, inst.targets, inst.radius);
      break;
    case Variant::kArtAng: {
      std::vector<TargetId> all(inst.targets.size());
      for (size_t t = 0; t < all.size(); ++t) all[t] = static_cast<int>(t);
      const RangeSpace rs =
          BuildEligibilityRanges(inst.sensors, inst.targets, all, rule);
      BgOptions bg;
      bg.seed = RoundSeed(options.seed, 0);
      bg.loop_constant = options.loop_constant;
      bg.prune = options.prune;
      seed = BgHittingSet(rs, SampleNetBuilder(options.vc_bound * HoleScale(inst)),
                          bg)
                 .ids;
      break;
    }
  }
  // A sensor sitting on a target cannot serve it; give such targets the
  // lowest-id eligible sensor.
  for (TargetId t = 0; t < static_cast<TargetId>(inst.targets.size()); ++t) {
    const Point2 tp = inst.targets[t];
    bool served = false;
    for (SensorId s : seed) served = served || rule.Allows(s, inst.sensors[s], t, tp);
    if (served) continue;
    SensorId pick = -1;
    for (SensorId s = 0; s < static_cast<SensorId>(inst.sensors.size()); ++s) {
      if (rule.Allows(s, inst.sensors[s], t, tp)) {
        pick = s;
        break;
      }
    }
    if (pick < 0) {
      throw Error(ErrorCode::kInfeasible,
                  "no eligible sensor for target " + std::to_string(t));
    }
    seed.push_back(pick);
  }
  SortUnique(&seed);
  return seed;
}

int NumRounds(double delta) {
  return std::max(1, static_cast<int>(std::ceil(std::log2(delta) - 1e-12)));
}

Solution Iterate(const Instance& inst, const SolveOptions& options) {
  ValidateInstance(inst);
  if (options.relax3r) {
    if (inst.variant != Variant::kAngDist) {
      throw Error(ErrorCode::kBadParams, "relax3r applies to angdist only");
    }
    if (!(inst.alpha > 0.0)) {
      throw Error(ErrorCode::kBadParams, "relax3r needs alpha > 0");
    }
    if (options.shift_l < 2) {
      throw Error(ErrorCode::kBadParams, "shifting parameter l must be >= 2");
    }
  }
  const std::optional<VisibilityTable> vis = MakeVisibility(inst);
  const VisibilityTable* vp = vis ? &*vis : nullptr;

  Solution sol;
  sol.selected = Seed(inst, options, vp);
  sol.seed_size = static_cast<int>(sol.selected.size());
  for (SensorId s : sol.selected) sol.provenance.emplace_back(s, 0);

  DistancePolicy policy = DistancePolicy::kNone;
  if (inst.variant == Variant::kAngDist) {
    policy = options.relax3r ? DistancePolicy::k3R : DistancePolicy::kR;
  }
  const int rounds = NumRounds(inst.delta);
  for (int i = 1; i <= rounds && !inst.targets.empty(); ++i) {
    const double eps = std::ldexp(inst.alpha, -i);
    RefineResult res = Refine(inst, sol.selected, eps, policy, options, vp, i);
    for (SensorId s : res.selected) {
      if (!std::binary_search(sol.selected.begin(), sol.selected.end(), s)) {
        sol.provenance.emplace_back(s, i);
      }
    }
    sol.selected = std::move(res.selected);
    sol.rounds.push_back(res.log);
    sol.hits.insert(sol.hits.end(), res.hits.begin(), res.hits.end());
  }
  std::sort(sol.provenance.begin(), sol.provenance.end());

  sol.target_level = inst.alpha * (1.0 - std::ldexp(1.0, -rounds));
  std::optional<double> bound;
  if (inst.variant == Variant::kAngDist) {
    bound = options.relax3r ? 3.0 * inst.radius : inst.radius;
    sol.distance_bound = *bound;
  }
  const VerifyReport report =
      VerifySolution(inst, sol.selected, sol.target_level, bound);
  if (!report.pass) {
    throw Error(ErrorCode::kInternal,
                "final verification failed for " +
                    std::to_string(report.failures.size()) + " targets");
  }
  sol.witnesses = report.witnesses;
  sol.achieved_level =
      inst.targets.empty() ? sol.target_level : report.min_level;
  return sol;
}

}  // namespace angcov
