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

#include "angcov/dudc.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "angcov/error.h"
#include "test_util.h"

namespace angcov {
namespace {

using testing::Rng;

TEST(DudcTest, SingleSensorCoversAll) {
  const std::vector<Point2> sensors = {{0, 0}, {10, 10}};
  const std::vector<Point2> targets = {{1, 0}, {0, 1}, {-1, 0}};
  EXPECT_EQ(GreedyDudc(sensors, targets, 1.0), std::vector<SensorId>{0});
}

TEST(DudcTest, BoundaryIsInside) {
  const std::vector<Point2> sensors = {{0, 0}};
  const std::vector<Point2> targets = {{3, 4}};
  EXPECT_EQ(GreedyDudc(sensors, targets, 5.0), std::vector<SensorId>{0});
  EXPECT_TRUE(VerifyDudc(sensors, std::vector<SensorId>{0}, targets, 5.0).pass);
}

TEST(DudcTest, InfeasibleTarget) {
  const std::vector<Point2> sensors = {{0, 0}};
  const std::vector<Point2> targets = {{0, 2}};
  try {
    GreedyDudc(sensors, targets, 1.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(DudcTest, VerifyReportsFarthest) {
  const std::vector<Point2> sensors = {{0, 0}};
  const std::vector<Point2> targets = {{1, 0}, {0, 3}};
  const DudcReport r = VerifyDudc(sensors, std::vector<SensorId>{0}, targets, 2.0);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.farthest_target, 1);
  EXPECT_DOUBLE_EQ(r.farthest_distance, 3.0);
  const DudcReport none = VerifyDudc(sensors, {}, targets, 2.0);
  EXPECT_FALSE(none.pass);
  EXPECT_TRUE(std::isinf(none.farthest_distance));
  EXPECT_TRUE(VerifyDudc(sensors, {}, {}, 2.0).pass);
}

TEST(DudcTest, RandomCoverAndGreedyBound) {
  Rng rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = rng.Int(3, 12);
    std::vector<Point2> sensors, targets;
    for (int i = 0; i < m; ++i) sensors.push_back(rng.GridPoint(10));
    for (int i = 0; i < 15; ++i) targets.push_back(rng.GridPoint(10));
    const double radius = rng.Uniform(2, 8);
    bool feasible = true;
    for (const Point2& t : targets) {
      bool any = false;
      for (const Point2& s : sensors) any = any || Dist(s, t) <= radius;
      feasible = feasible && any;
    }
    if (!feasible) continue;
    const std::vector<SensorId> g = GreedyDudc(sensors, targets, radius);
    EXPECT_TRUE(VerifyDudc(sensors, g, targets, radius).pass);
    int opt = m + 1;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      bool ok = true;
      for (const Point2& t : targets) {
        bool any = false;
        for (int i = 0; i < m; ++i) {
          any = any || ((mask >> i & 1u) && Dist(sensors[i], t) <= radius);
        }
        ok = ok && any;
      }
      if (ok) opt = std::min(opt, __builtin_popcount(mask));
    }
    EXPECT_LE(g.size(), opt * (1.0 + std::log(15.0)));
  }
}

}  // namespace
}  // namespace angcov
