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

#include "angcov/hitting.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "angcov/error.h"
#include "test_util.h"

namespace angcov {
namespace {

using testing::Rng;

RangeSpace SetSystem(int n, const std::vector<std::vector<SensorId>>& sets) {
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) pts.push_back({static_cast<double>(i), 0.0});
  RangeSpace rs = MakeRangeSpace(pts);
  for (const auto& s : sets) {
    Range r;
    r.members = s;
    std::sort(r.members.begin(), r.members.end());
    rs.ranges.push_back(r);
  }
  return rs;
}

// Smallest hitting set size by plain enumeration of all subsets.
int BruteTau(const RangeSpace& rs) {
  const int n = static_cast<int>(rs.points.size());
  int best = n + 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool ok = true;
    for (const Range& r : rs.ranges) {
      bool hit = false;
      for (SensorId id : r.members) hit = hit || (mask >> id & 1u);
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

RangeSpace RandomSystem(Rng& rng, int n, int ranges) {
  std::vector<std::vector<SensorId>> sets;
  for (int k = 0; k < ranges; ++k) {
    std::vector<SensorId> s;
    for (int i = 0; i < n; ++i) {
      if (rng.Int(0, 3) == 0) s.push_back(i);
    }
    if (s.empty()) s.push_back(rng.Int(0, n - 1));
    sets.push_back(s);
  }
  return SetSystem(n, sets);
}

TEST(HittingTest, SingletonRanges) {
  const RangeSpace rs = SetSystem(6, {{1}, {4}, {1}});
  EXPECT_EQ(GreedyHittingSet(rs), (std::vector<SensorId>{1, 4}));
  EXPECT_EQ(ExactHittingSet(rs).tau, 2);
  const HittingResult bg = BgHittingSet(rs, SampleNetBuilder(2));
  EXPECT_TRUE(HitsAll(rs, bg.ids));
  EXPECT_EQ(bg.ids, (std::vector<SensorId>{1, 4}));
}

TEST(HittingTest, OneRangeNeedsOnePoint) {
  const RangeSpace rs = SetSystem(8, {{2, 5, 7}});
  EXPECT_EQ(ExactHittingSet(rs).tau, 1);
  EXPECT_EQ(GreedyHittingSet(rs), (std::vector<SensorId>{2}));
  const HittingResult bg = BgHittingSet(rs, SampleNetBuilder(2));
  EXPECT_EQ(bg.ids.size(), 1u);
  EXPECT_EQ(bg.stats.final_guess, 1);
}

TEST(HittingTest, NoRanges) {
  const RangeSpace rs = SetSystem(4, {});
  EXPECT_TRUE(GreedyHittingSet(rs).empty());
  EXPECT_EQ(ExactHittingSet(rs).tau, 0);
  EXPECT_TRUE(BgHittingSet(rs, SampleNetBuilder(2)).ids.empty());
}

TEST(HittingTest, EmptyRangeIsReported) {
  const RangeSpace rs = SetSystem(4, {{1}, {}});
  try {
    ExactHittingSet(rs);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoHittingSet);
  }
}

TEST(HittingTest, ExactRefusesLargeGround) {
  const RangeSpace rs = SetSystem(30, {{1}});
  try {
    ExactHittingSet(rs, 24);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(HittingTest, PruneKeepsHitting) {
  const RangeSpace rs = SetSystem(5, {{0, 1}, {1, 2}, {3}});
  const std::vector<SensorId> pruned = PruneRedundant(rs, {0, 1, 2, 3, 4});
  EXPECT_TRUE(HitsAll(rs, pruned));
  EXPECT_EQ(pruned, (std::vector<SensorId>{1, 3}));
}

TEST(HittingTest, AgainstEnumeration) {
  Rng rng(21);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = rng.Int(3, 14);
    const RangeSpace rs = RandomSystem(rng, n, rng.Int(1, 12));
    const int tau = BruteTau(rs);
    const ExactHitting exact = ExactHittingSet(rs);
    EXPECT_EQ(exact.tau, tau);
    EXPECT_EQ(static_cast<int>(exact.ids.size()), tau);
    EXPECT_TRUE(HitsAll(rs, exact.ids));

    const std::vector<SensorId> greedy = GreedyHittingSet(rs);
    EXPECT_TRUE(HitsAll(rs, greedy));
    // ln-n greedy bound: |G| <= tau * (1 + ln |ranges|).
    EXPECT_LE(greedy.size(),
              tau * (1.0 + std::log(static_cast<double>(rs.ranges.size()))) + 1e-9);

    BgOptions opt;
    opt.seed = rep;
    const HittingResult bg = BgHittingSet(rs, SampleNetBuilder(2), opt);
    EXPECT_TRUE(HitsAll(rs, bg.ids));
    EXPECT_GE(static_cast<int>(bg.ids.size()), tau);
    // The accepted guess never exceeds twice the optimum.
    EXPECT_LE(bg.stats.final_guess, 2 * std::max(1, tau));
  }
}

TEST(HittingTest, BgOnGeometricRanges) {
  Rng rng(22);
  double worst = 0;
  for (int rep = 0; rep < 60; ++rep) {
    std::vector<Point2> sensors, targets;
    const int m = rng.Int(8, 18);
    for (int i = 0; i < m; ++i) sensors.push_back(rng.GridPoint(10));
    for (int i = 0; i < 12; ++i) targets.push_back(rng.GridPoint(10));
    RangeSpace rs = MakeRangeSpace(sensors);
    for (TargetId t = 0; t < 12; ++t) {
      const std::vector<SensorId> s = {rng.Int(0, m - 1)};
      const std::vector<TargetId> one = {t};
      try {
        rs.ranges.push_back(
            BuildRanges(sensors, targets, s, one, kPi / 3, kPi / 6, {}, {})
                .ranges[0]);
      } catch (const Error&) {
      }
    }
    if (rs.ranges.empty()) continue;
    const int tau = ExactHittingSet(rs).tau;
    for (const NetBuilder& b : {SampleNetBuilder(2), FatWedgeNetBuilder()}) {
      const HittingResult bg = BgHittingSet(rs, b);
      ASSERT_TRUE(HitsAll(rs, bg.ids));
      EXPECT_LE(bg.stats.final_guess, 2 * tau);
      worst = std::max(worst, static_cast<double>(bg.ids.size()) / tau);
    }
  }
  RecordProperty("worst_ratio", std::to_string(worst));
}

TEST(HittingTest, BgDeterministicForSeed) {
  Rng rng(23);
  const RangeSpace rs = RandomSystem(rng, 40, 30);
  BgOptions opt;
  opt.seed = 77;
  const HittingResult a = BgHittingSet(rs, SampleNetBuilder(2), opt);
  const HittingResult b = BgHittingSet(rs, SampleNetBuilder(2), opt);
  EXPECT_EQ(a.ids, b.ids);
  EXPECT_EQ(a.stats.iterations, b.stats.iterations);
}

TEST(HittingTest, CallerWeightsUntouched) {
  Rng rng(24);
  RangeSpace rs = RandomSystem(rng, 20, 15);
  rs.weights[3] = 5.0;
  const std::vector<double> before = rs.weights;
  BgHittingSet(rs, SampleNetBuilder(2));
  EXPECT_EQ(rs.weights, before);
}

}  // namespace
}  // namespace angcov
