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

// The refinement framework: starting from a seed set, each round halves the
// angular slack by hitting one double-wedge range per under-covered target.
// After ceil(log2 delta) rounds every target is (1 - 2^-rounds) alpha-covered.

#ifndef ANGCOV_COVERAGE_H_
#define ANGCOV_COVERAGE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "angcov/geom.h"
#include "angcov/hitting.h"
#include "angcov/netlib.h"

namespace angcov {

enum class Variant { kAng, kAngDist, kArtAng };

std::string_view VariantName(Variant v);
std::optional<Variant> ParseVariant(std::string_view name);

struct Instance {
  Variant variant = Variant::kAng;
  std::vector<Point2> sensors;
  std::vector<Point2> targets;
  double alpha = kPi / 3;
  double delta = 2.0;
  double radius = 0.0;                // kAngDist
  std::optional<PolygonEnv> polygon;  // kArtAng environment P
  std::optional<PolygonEnv> region;   // kArtAng target region Q (default P)
};

// Throws kBadParams for malformed parameters and kOutsidePolygon for points
// outside P (sensors) or Q (targets).
void ValidateInstance(const Instance& inst);

// Visibility table for kArtAng instances, nullptr-equivalent otherwise.
std::optional<VisibilityTable> MakeVisibility(const Instance& inst);

// Eligibility for the instance's side constraint with the given distance
// bound (ignored unless the variant is kAngDist).
Eligibility MakeEligibility(const Instance& inst,
                            std::optional<double> max_distance,
                            const VisibilityTable* visibility);

struct Witness {
  SensorId s1 = -1;
  SensorId s2 = -1;
  double level = -1.0;  // min(angle, pi - angle); -1 without a pair
  double angle = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// Best eligible pair of `selected` for target t (ties: lowest ids).
Witness BestWitness(const std::vector<Point2>& sensors,
                    std::span<const SensorId> selected, Point2 target,
                    TargetId t, const Eligibility& rule);

// Targets with no eligible pair of `selected` that beta-covers them.
std::vector<TargetId> UncoveredTargets(const std::vector<Point2>& sensors,
                                       const std::vector<Point2>& targets,
                                       std::span<const SensorId> selected,
                                       double beta, const Eligibility& rule);

struct VerifyReport {
  bool pass = false;
  double min_level = 0.0;  // over targets; +inf when there are none
  std::vector<Witness> witnesses;
  std::vector<TargetId> failures;
};

// Exhaustive check that `selected` beta-covers every target under the
// instance constraints. For kAngDist the distance bound defaults to R.
VerifyReport VerifySolution(const Instance& inst,
                            std::span<const SensorId> selected, double beta,
                            std::optional<double> distance_bound = {});

enum class DistancePolicy { kNone, kR, k3R };

struct SolveOptions {
  bool relax3r = false;
  std::uint64_t seed = 1;
  int vc_bound = 2;
  double loop_constant = 4.0;
  bool prune = true;
  int shift_l = 2;  // relax3r shifting parameter
};

struct RoundLog {
  int round = 0;
  double eps = 0.0;
  double level = 0.0;
  int uncovered = 0;
  int ranges = 0;
  int hitting_size = 0;
  int added = 0;
  BgStats stats;
};

// A sensor added by a refine round together with the range it hits.
struct HitRecord {
  int round = 0;
  TargetId target = -1;
  SensorId sensor = -1;
  SensorId generator1 = -1;
  SensorId generator2 = -1;
  double beta = 0.0;
};

struct RefineResult {
  std::vector<SensorId> selected;  // S u S', sorted
  RoundLog log;
  std::vector<HitRecord> hits;
};

// One refinement round at slack eps. Requires that `selected`
// (alpha - 2 eps)-covers the targets under the policy bound; guarantees
// (alpha - eps)-coverage afterwards (checked, kInternal otherwise).
RefineResult Refine(const Instance& inst, std::span<const SensorId> selected,
                    double eps, DistancePolicy policy,
                    const SolveOptions& options,
                    const VisibilityTable* visibility, int round = 1);

// Initial set: lowest-id sensor (kAng), greedy disk cover (kAngDist) or a
// hitting set of visibility ranges (kArtAng).
std::vector<SensorId> Seed(const Instance& inst, const SolveOptions& options,
                           const VisibilityTable* visibility);

struct Solution {
  std::vector<SensorId> selected;  // sorted
  std::vector<std::pair<SensorId, int>> provenance;  // (id, round); 0 = seed
  std::vector<Witness> witnesses;                   // per target
  std::vector<RoundLog> rounds;
  std::vector<HitRecord> hits;
  int seed_size = 0;
  double target_level = 0.0;    // alpha (1 - 2^-rounds)
  double achieved_level = 0.0;  // min witness level
  double distance_bound = 0.0;  // 0 when unconstrained
};

int NumRounds(double delta);

// Seed followed by ceil(log2 delta) refine rounds at eps = alpha / 2^i.
// The result is re-verified before returning.
Solution Iterate(const Instance& inst, const SolveOptions& options = {});

}  // namespace angcov

#endif  // ANGCOV_COVERAGE_H_
