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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "angcov/error.h"
#include "angcov/generate.h"
#include "angcov/netlib.h"
#include "test_util.h"

namespace angcov {
namespace {

using testing::PlantedInstance;
using testing::RefAngle;
using testing::RefCovers;
using testing::RefCoversAll;
using testing::Rng;

constexpr Variant kVariants[] = {Variant::kAng, Variant::kAngDist,
                                 Variant::kArtAng};

Instance Triangle() {
  Instance inst;
  inst.sensors = {{-1, 0}, {1, 0}, {0, 5}, {0, 1}};
  inst.targets = {{0, std::sqrt(3.0)}};
  return inst;
}

TEST(CoverageTest, NumRounds) {
  EXPECT_EQ(NumRounds(2), 1);
  EXPECT_EQ(NumRounds(1.5), 1);
  EXPECT_EQ(NumRounds(3), 2);
  EXPECT_EQ(NumRounds(8), 3);
  EXPECT_EQ(NumRounds(32), 5);
}

TEST(CoverageTest, VariantNames) {
  for (Variant v : kVariants) EXPECT_EQ(ParseVariant(VariantName(v)), v);
  EXPECT_FALSE(ParseVariant("other").has_value());
}

TEST(CoverageTest, ValidateRejectsBadParams) {
  Instance inst = Triangle();
  inst.alpha = 1.2;
  EXPECT_THROW(ValidateInstance(inst), Error);
  inst = Triangle();
  inst.delta = 1.0;
  EXPECT_THROW(ValidateInstance(inst), Error);
  inst = Triangle();
  inst.variant = Variant::kAngDist;
  EXPECT_THROW(ValidateInstance(inst), Error);
  inst = Triangle();
  inst.sensors[0].x = std::nan("");
  EXPECT_THROW(ValidateInstance(inst), Error);
  inst = Triangle();
  inst.variant = Variant::kArtAng;
  inst.polygon = MakePolygon({{-2, -1}, {2, -1}, {2, 3}, {-2, 3}});
  try {
    ValidateInstance(inst);  // sensor (0, 5) is outside
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutsidePolygon);
  }
}

TEST(CoverageTest, VerifyEquilateralBoundary) {
  // Target at the apex of an equilateral triangle: exactly pi/3.
  const Instance inst = Triangle();
  const std::vector<SensorId> sel = {0, 1};
  const VerifyReport r = VerifySolution(inst, sel, kPi / 3);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.min_level, kPi / 3, 1e-12);
  EXPECT_FALSE(VerifySolution(inst, sel, kPi / 3 + 1e-6).pass);
  const std::vector<SensorId> collinear = {2, 3};
  const VerifyReport bad = VerifySolution(inst, collinear, 0.1);
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.failures, std::vector<TargetId>{0});
}

TEST(CoverageTest, VerifyDistanceBound) {
  Instance inst = Triangle();
  inst.variant = Variant::kAngDist;
  inst.radius = 2.0;
  const std::vector<SensorId> sel = {0, 1};
  EXPECT_TRUE(VerifySolution(inst, sel, kPi / 3).pass);
  inst.radius = 1.99;
  EXPECT_FALSE(VerifySolution(inst, sel, kPi / 3).pass);
  EXPECT_TRUE(VerifySolution(inst, sel, kPi / 3, 6.0).pass);
}

TEST(CoverageTest, UncoveredMatchesBruteForce) {
  Rng rng(41);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<Point2> sensors, targets;
    for (int i = 0; i < 12; ++i) sensors.push_back(rng.GridPoint(10));
    for (int i = 0; i < 20; ++i) targets.push_back(rng.GridPoint(10));
    std::vector<SensorId> sel;
    for (int i = 0; i < 12; ++i) {
      if (rng.Int(0, 1)) sel.push_back(i);
    }
    const double beta = rng.Uniform(0.1, kPi / 3);
    const double radius = rng.Uniform(2, 8);
    Eligibility rule;
    rule.max_distance = radius;
    const std::vector<TargetId> got =
        UncoveredTargets(sensors, targets, sel, beta, rule);
    for (TargetId t = 0; t < 20; ++t) {
      bool strict = false, loose = false;
      for (size_t i = 0; i < sel.size(); ++i) {
        for (size_t j = i + 1; j < sel.size(); ++j) {
          const Point2 a = sensors[sel[i]], b = sensors[sel[j]];
          if (Dist(a, targets[t]) > radius + 1e-9 ||
              Dist(b, targets[t]) > radius + 1e-9) {
            continue;
          }
          strict = strict || RefCovers(a, b, targets[t], beta, -1e-7);
          loose = loose || RefCovers(a, b, targets[t], beta, 1e-7);
        }
      }
      const bool reported = std::binary_search(got.begin(), got.end(), t);
      if (strict) EXPECT_FALSE(reported);
      if (!loose) EXPECT_TRUE(reported);
    }
  }
}

TEST(CoverageTest, SeedPerVariant) {
  for (Variant v : kVariants) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto planted = PlantedInstance(v, 30, 30, kPi / 4, 4, seed);
      const Instance& inst = planted.inst;
      const auto vis = MakeVisibility(inst);
      const VisibilityTable* vt = vis ? &*vis : nullptr;
      const std::vector<SensorId> s = Seed(inst, {}, vt);
      const Eligibility rule = MakeEligibility(inst, inst.radius, vt);
      for (TargetId t = 0; t < static_cast<TargetId>(inst.targets.size()); ++t) {
        bool served = false;
        for (SensorId id : s) {
          served = served || rule.Allows(id, inst.sensors[id], t, inst.targets[t]);
        }
        EXPECT_TRUE(served) << VariantName(v) << " target " << t;
      }
      if (v == Variant::kAng && !inst.targets.empty()) {
        EXPECT_EQ(s.front(), 0);
      }
    }
  }
}

TEST(CoverageTest, SeedRepairsCoincidentTarget) {
  Instance inst;
  inst.sensors = {{0, 0}, {2, 0}, {1, 2}};
  inst.targets = {{0, 0}, {1, 1}};
  const std::vector<SensorId> s = Seed(inst, {}, nullptr);
  EXPECT_EQ(s, (std::vector<SensorId>{0, 1}));
}

TEST(CoverageTest, RefineRaisesLevel) {
  for (Variant v : kVariants) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const auto planted = PlantedInstance(v, 40, 30, kPi / 3, 8, seed);
      const Instance& inst = planted.inst;
      const auto vis = MakeVisibility(inst);
      const VisibilityTable* vt = vis ? &*vis : nullptr;
      const DistancePolicy policy =
          v == Variant::kAngDist ? DistancePolicy::kR : DistancePolicy::kNone;
      std::vector<SensorId> sel = Seed(inst, {}, vt);
      for (int round = 1; round <= 3; ++round) {
        const double eps = inst.alpha / std::pow(2.0, round);
        const RefineResult r = Refine(inst, sel, eps, policy, {}, vt, round);
        EXPECT_TRUE(std::includes(r.selected.begin(), r.selected.end(),
                                  sel.begin(), sel.end()));
        const std::optional<double> bound =
            v == Variant::kAngDist ? std::optional<double>(inst.radius)
                                   : std::nullopt;
        EXPECT_TRUE(RefCoversAll(inst, r.selected, inst.alpha - eps, bound));
        for (const HitRecord& h : r.hits) {
          EXPECT_EQ(h.round, round);
          EXPECT_TRUE(std::binary_search(r.selected.begin(), r.selected.end(),
                                         h.sensor));
        }
        sel = r.selected;
      }
    }
  }
}

TEST(CoverageTest, IterateSchedule) {
  for (Variant v : kVariants) {
    for (double delta : {2.0, 8.0}) {
      const auto planted = PlantedInstance(v, 50, 40, kPi / 3, delta, 7);
      const Solution sol = Iterate(planted.inst);
      const int rounds = delta == 2.0 ? 1 : 3;
      ASSERT_EQ(static_cast<int>(sol.rounds.size()), rounds);
      for (int i = 0; i < rounds; ++i) {
        EXPECT_EQ(sol.rounds[i].round, i + 1);
        EXPECT_NEAR(sol.rounds[i].eps, kPi / 3 / std::pow(2.0, i + 1), 1e-15);
      }
      EXPECT_NEAR(sol.target_level, kPi / 3 * (1 - 1 / delta), 1e-12);
      EXPECT_GE(sol.achieved_level, sol.target_level - 1e-9);
      const std::optional<double> bound =
          v == Variant::kAngDist ? std::optional<double>(planted.inst.radius)
                                 : std::nullopt;
      EXPECT_TRUE(RefCoversAll(planted.inst, sol.selected, sol.target_level, bound));
      EXPECT_EQ(sol.provenance.size(), sol.selected.size());
    }
  }
}

TEST(CoverageTest, IterateDeterministic) {
  const auto planted = PlantedInstance(Variant::kAngDist, 60, 40, kPi / 4, 32, 3);
  ASSERT_GT(planted.inst.targets.size(), 5u);
  SolveOptions opt;
  opt.seed = 9;
  const Solution a = Iterate(planted.inst, opt);
  const Solution b = Iterate(planted.inst, opt);
  EXPECT_EQ(a.selected, b.selected);
}

TEST(CoverageTest, InfeasibleClaimsAreTrue) {
  // Collinear sensors cannot cover anything on their line.
  Instance inst;
  inst.sensors = {{0, 0}, {1, 0}, {2, 0}};
  inst.targets = {{5, 0}};
  try {
    Iterate(inst);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

// Every range built during refinement contains a member of a known feasible
// solution (union of the two generator wedges, cut to the side constraint).
TEST(CoverageTest, RangesContainFeasibleSensor) {
  int instances = 0, checked = 0;
  for (std::uint64_t seed = 1; instances < 200; ++seed) {
    const Variant v = kVariants[seed % 3];
    const double alpha = std::vector<double>{kPi / 6, kPi / 4, kPi / 3}[seed % 4 % 3];
    const auto planted = PlantedInstance(v, 30, 30, alpha, 8, seed);
    const Instance& inst = planted.inst;
    if (inst.targets.empty()) continue;
    ++instances;
    const auto vis = MakeVisibility(inst);
    const VisibilityTable* vt = vis ? &*vis : nullptr;
    const std::optional<double> r =
        v == Variant::kAngDist ? std::optional<double>(inst.radius) : std::nullopt;
    const Eligibility rule = MakeEligibility(inst, r, vt);
    std::vector<SensorId> sel = Seed(inst, {}, vt);
    for (int round = 1; round <= 3; ++round) {
      const double eps = alpha / std::pow(2.0, round);
      const std::vector<TargetId> open =
          UncoveredTargets(inst.sensors, inst.targets, sel, alpha - eps, rule);
      const RangeSpace rs =
          BuildRanges(inst.sensors, inst.targets, sel, open, alpha, eps, rule, rule);
      for (const Range& range : rs.ranges) {
        ++checked;
        bool hit = false;
        for (SensorId f : planted.feasible) hit = hit || rs.IsMember(range, f);
        EXPECT_TRUE(hit) << "seed " << seed << " target " << range.target;
      }
      const DistancePolicy policy =
          v == Variant::kAngDist ? DistancePolicy::kR : DistancePolicy::kNone;
      sel = Refine(inst, sel, eps, policy, {}, vt, round).selected;
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(CoverageTest, WitnessesAreReal) {
  const auto planted = PlantedInstance(Variant::kAng, 40, 30, kPi / 3, 4, 5);
  const Solution sol = Iterate(planted.inst);
  ASSERT_EQ(sol.witnesses.size(), planted.inst.targets.size());
  for (size_t t = 0; t < sol.witnesses.size(); ++t) {
    const Witness& w = sol.witnesses[t];
    const double ang = RefAngle(planted.inst.targets[t], planted.inst.sensors[w.s1],
                                planted.inst.sensors[w.s2]);
    EXPECT_NEAR(w.angle, ang, 1e-7);
    EXPECT_NEAR(w.level, std::min(ang, kPi - ang), 1e-7);
  }
}

}  // namespace
}  // namespace angcov
