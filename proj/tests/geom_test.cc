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

#include "angcov/geom.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "angcov/error.h"
#include "test_util.h"

namespace angcov {
namespace {

using testing::RefAngle;
using testing::Rng;

const double kSqrt3 = std::sqrt(3.0);

void ExpectCode(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << ErrorCodeName(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(AngleAtTest, BasicAngles) {
  EXPECT_NEAR(AngleAt({0, 0}, {1, 0}, {0, 1}), kPi / 2, 1e-12);
  EXPECT_NEAR(AngleAt({0, 0}, {1, 0}, {2, 0}), 0.0, 1e-12);
  EXPECT_NEAR(AngleAt({0, 0}, {1, 0}, {-3, 0}), kPi, 1e-12);
}

TEST(AngleAtTest, CoincidentPointsRaise) {
  ExpectCode(ErrorCode::kCoincidentPoints, [] { AngleAt({0, 0}, {0, 0}, {1, 1}); });
  ExpectCode(ErrorCode::kCoincidentPoints, [] { AngleAt({0, 0}, {1, 1}, {1, 1}); });
  ExpectCode(ErrorCode::kCoincidentPoints,
             [] { AlphaCovers({1, 1}, {2, 2}, {1, 1}, 0.3); });
}

TEST(AlphaCoversTest, Examples) {
  EXPECT_TRUE(AlphaCovers({1, 0}, {0, 1}, {0, 0}, kPi / 3));
  EXPECT_FALSE(AlphaCovers({1, 0}, {2, 0}, {0, 0}, kPi / 3));
}

TEST(AlphaCoversTest, InscribedAngleBoundary) {
  // t lies on the circle of radius 2 centred (0, sqrt 3) through s and s'.
  const Point2 s{-1, 0}, sp{1, 0}, t{0, kSqrt3 + 2};
  EXPECT_NEAR(RefAngle(t, s, sp), kPi / 6, 1e-12);
  EXPECT_TRUE(AlphaCovers(s, sp, t, kPi / 6));
  EXPECT_FALSE(AlphaCovers(s, sp, t, kPi / 6 + 1e-6));
}

TEST(AlphaCoversTest, ZeroAlphaAcceptsAnyDistinctPair) {
  EXPECT_TRUE(AlphaCovers({1, 0}, {2, 0}, {0, 0}, 0.0));
  EXPECT_TRUE(AlphaCovers({1, 0}, {0, 1}, {0, 0}, 0.0));
}

TEST(AlphaCoversTest, AgreesWithReferenceAngle) {
  Rng rng(1);
  for (int i = 0; i < 20000; ++i) {
    const Point2 t = rng.Point(-5, 5), a = rng.Point(-5, 5), b = rng.Point(-5, 5);
    const double alpha = rng.Uniform(0.01, kPi / 2);
    const double th = RefAngle(t, a, b);
    const double margin = std::min(std::abs(th - alpha), std::abs(kPi - alpha - th));
    if (margin < 1e-7) continue;
    EXPECT_EQ(AlphaCovers(a, b, t, alpha), th >= alpha && th <= kPi - alpha);
  }
}

TEST(GeomPropertyTest, SymmetryMonotonicityAndInvariance) {
  Rng rng(2);
  for (int i = 0; i < 5000; ++i) {
    const Point2 t = rng.Point(-5, 5), a = rng.Point(-5, 5), b = rng.Point(-5, 5);
    const double alpha = rng.Uniform(0.0, kPi / 3);
    EXPECT_EQ(AlphaCovers(a, b, t, alpha), AlphaCovers(b, a, t, alpha));
    EXPECT_NEAR(AngleAt(t, a, b), AngleAt(t, b, a), 1e-12);
    if (AlphaCovers(a, b, t, alpha)) {
      EXPECT_TRUE(AlphaCovers(a, b, t, rng.Uniform(0.0, alpha)));
    }
    const double rot = rng.Uniform(-kPi, kPi), k = rng.Uniform(0.1, 10);
    const Point2 shift = rng.Point(-100, 100);
    auto map = [&](Point2 p) { return shift + k * Rotate(p, rot); };
    EXPECT_NEAR(AngleAt(map(t), map(a), map(b)), AngleAt(t, a, b), 1e-9);
  }
}

TEST(CoverageDisksTest, ThirtyDegrees) {
  const CoverageDisks d = MakeCoverageDisks({-1, 0}, {1, 0}, kPi / 6);
  EXPECT_NEAR(d.radius, 2.0, 1e-12);
  // Circle of radius 2 through (+-1, 0): centre (0, c) with 1 + c^2 = 4.
  EXPECT_NEAR(std::abs(d.center1.y), std::sqrt(4.0 - 1.0), 1e-12);
  EXPECT_NEAR(d.center1.y, -d.center2.y, 1e-12);
  EXPECT_NEAR(d.center1.x, 0.0, 1e-12);
  EXPECT_NEAR(d.center2.x, 0.0, 1e-12);
  for (Point2 c : {d.center1, d.center2}) {
    EXPECT_NEAR(Dist(c, {-1, 0}), 2.0, 1e-12);
    EXPECT_NEAR(Dist(c, {1, 0}), 2.0, 1e-12);
  }
}

TEST(CoverageDisksTest, RightAngleIsThalesCircle) {
  const CoverageDisks d = MakeCoverageDisks({-1, 0}, {1, 0}, kPi / 2);
  EXPECT_NEAR(d.radius, 1.0, 1e-12);
  EXPECT_NEAR(Norm(d.center1), 0.0, 1e-7);
  EXPECT_NEAR(Norm(d.center2), 0.0, 1e-7);
}

TEST(CoverageDisksTest, ZeroAngleRaises) {
  ExpectCode(ErrorCode::kZeroAngle, [] { MakeCoverageDisks({0, 0}, {1, 0}, 0.0); });
}

TEST(CoverageDisksTest, SymmetricDifferenceMatchesPredicate) {
  Rng rng(3);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const Point2 s = rng.Point(-3, 3), sp = rng.Point(-3, 3), p = rng.Point(-6, 6);
    const double alpha = rng.Uniform(0.05, kPi / 2 - 0.05);
    const CoverageDisks d = MakeCoverageDisks(s, sp, alpha);
    const double b1 = std::abs(Dist(p, d.center1) - d.radius);
    const double b2 = std::abs(Dist(p, d.center2) - d.radius);
    if (b1 < 1e-7 || b2 < 1e-7 || p == s || p == sp) continue;
    ++checked;
    EXPECT_EQ(InSymmetricDifference(d, p), AlphaCovers(s, sp, p, alpha));
  }
  EXPECT_GT(checked, 9900);
}

TEST(DoubleWedgeTest, Examples) {
  const DoubleWedge w = MakeDoubleWedge({0, 0}, {1, 0}, kPi / 4);
  EXPECT_NEAR(w.width(), kPi / 2, 1e-12);
  const DoubleWedge full = MakeDoubleWedge({0, 0}, {1, 0}, 0.0);
  EXPECT_NEAR(full.half_width, kPi / 2, 1e-12);
  EXPECT_TRUE(full.Contains({3, 1e-3}));
  const DoubleWedge w3 = MakeDoubleWedge({0, 0}, {1, 0}, kPi / 3);
  EXPECT_TRUE(w3.Contains({0, 5}));
  EXPECT_FALSE(w3.Contains({5, 1}));
  EXPECT_TRUE(AlphaCovers({1, 0}, {0, 5}, {0, 0}, kPi / 3));
  EXPECT_FALSE(AlphaCovers({1, 0}, {5, 1}, {0, 0}, kPi / 3));
}

TEST(DoubleWedgeTest, AxisInvariantModPi) {
  DoubleWedge w = MakeDoubleWedge({0, 0}, {1, 2}, 0.4);
  DoubleWedge flipped = w;
  flipped.axis = NormalizeModPi(w.axis + kPi);
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const Point2 p = rng.Point(-4, 4);
    EXPECT_EQ(w.Contains(p), flipped.Contains(p));
  }
}

TEST(DoubleWedgeTest, MembershipEqualsBetaCoverage) {
  Rng rng(5);
  for (int cfg = 0; cfg < 20; ++cfg) {
    const Point2 t = rng.Point(-2, 2), s = rng.Point(-2, 2);
    const double beta = rng.Uniform(0.0, kPi / 2);
    const DoubleWedge w = MakeDoubleWedge(t, s, beta);
    for (int i = 0; i < 10000; ++i) {
      const Point2 p = rng.Point(-5, 5);
      const double th = RefAngle(t, s, p);
      if (std::abs(th - beta) < 1e-7 || std::abs(kPi - beta - th) < 1e-7) continue;
      EXPECT_EQ(w.Contains(p), AlphaCovers(s, p, t, beta));
    }
  }
}

TEST(MergeTest, IdempotentAndMergedWidth) {
  const DoubleWedge d1 = MakeDoubleWedge({0, 0}, {1, 0}, kPi / 4);
  const DoubleWedge m = MergeDoubleWedges(d1, d1);
  EXPECT_NEAR(m.axis, d1.axis, 1e-12);
  EXPECT_NEAR(m.half_width, d1.half_width, 1e-12);

  // alpha = pi/3, eps = pi/12, axes pi/6 apart: width pi - pi/2 + pi/6.
  const double beta = kPi / 3 - kPi / 12;
  const DoubleWedge a = MakeDoubleWedge({0, 0}, {1, 0}, beta);
  const DoubleWedge b =
      MakeDoubleWedge({0, 0}, {std::cos(kPi / 6), std::sin(kPi / 6)}, beta);
  EXPECT_NEAR(MergeDoubleWedges(a, b).width(), 2 * kPi / 3, 1e-12);
}

TEST(MergeTest, DisjointRaises) {
  const DoubleWedge a = MakeDoubleWedge({0, 0}, {1, 0}, 1.4);
  const DoubleWedge b = MakeDoubleWedge({0, 0}, {0, 1}, 1.4);
  ExpectCode(ErrorCode::kDisjointWedges, [&] { MergeDoubleWedges(a, b); });
}

TEST(MergeTest, UnionAndCommutativity) {
  Rng rng(6);
  int done = 0;
  while (done < 200) {
    const Point2 t = rng.Point(-1, 1);
    const double alpha = rng.Uniform(0.05, kPi / 3);
    const double eps = alpha / std::pow(2.0, rng.Int(1, 4));
    const double beta = alpha - eps;
    const Point2 s1 = rng.Point(-3, 3), s2 = rng.Point(-3, 3);
    if (s1 == t || s2 == t) continue;
    const DoubleWedge a = MakeDoubleWedge(t, s1, beta);
    const DoubleWedge b = MakeDoubleWedge(t, s2, beta);
    if (AxialDistance(a.axis, b.axis) > a.half_width + b.half_width) continue;
    const DoubleWedge ab = MergeDoubleWedges(a, b);
    const DoubleWedge ba = MergeDoubleWedges(b, a);
    EXPECT_EQ(ab.IsFull(), ba.IsFull());
    if (!ab.IsFull()) {
      EXPECT_NEAR(AxialDistance(ab.axis, ba.axis), 0.0, 1e-9);
      EXPECT_NEAR(ab.half_width, ba.half_width, 1e-9);
    }
    for (int k = 0; k < 3600; ++k) {
      const double dir = 2 * kPi * k / 3600 + 1e-4;
      const Point2 p = t + Point2{std::cos(dir), std::sin(dir)};
      const double da = AxialDistance(dir, a.axis) - a.half_width;
      const double db = AxialDistance(dir, b.axis) - b.half_width;
      if (std::abs(da) < 1e-7 || std::abs(db) < 1e-7) continue;
      EXPECT_EQ(ab.Contains(p), a.Contains(p) || b.Contains(p));
    }
    ++done;
  }
}

TEST(DoubleSectorTest, DistanceConventions) {
  const DoubleWedge w = MakeDoubleWedge({0, 0}, {1, 0}, kPi / 6);
  EXPECT_TRUE(InDoubleSector(w, 2.0, {0, 0}));
  EXPECT_TRUE(InDoubleSector(w, 2.0, {0, 2}));
  EXPECT_FALSE(InDoubleSector(w, 2.0, {0, 3}));
}

PolygonEnv LHexagon() {
  return MakePolygon({{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}});
}

TEST(SeesTest, ConvexAlwaysVisible) {
  const PolygonEnv sq = MakePolygon({{0, 0}, {5, 0}, {5, 5}, {0, 5}});
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    EXPECT_TRUE(Sees(rng.Point(0, 5), rng.Point(0, 5), sq));
  }
}

TEST(SeesTest, LHexagon) {
  const PolygonEnv env = LHexagon();
  EXPECT_TRUE(Sees({1, 1}, {1, 3}, env));
  // The segment (3,1)-(1,3) only grazes the reflex corner (2,2); grazing is
  // visible under the closed convention.
  EXPECT_TRUE(Sees({3, 1}, {1, 3}, env));
  // Slightly further up it passes outside the polygon.
  EXPECT_FALSE(Sees({3, 1}, {1, 3.5}, env));
  EXPECT_FALSE(Sees({3.5, 1}, {1, 3.5}, env));
  // Running along the boundary is visible.
  EXPECT_TRUE(Sees({4, 2}, {2, 2}, env));
  EXPECT_TRUE(Sees({0, 0}, {0, 4}, env));
}

TEST(SeesTest, OutsideRaises) {
  ExpectCode(ErrorCode::kOutsidePolygon, [] { Sees({3, 3}, {1, 1}, LHexagon()); });
}

TEST(SeesTest, HolesBlock) {
  const PolygonEnv env = MakePolygon({{0, 0}, {10, 0}, {10, 10}, {0, 10}},
                                     {{{4, 4}, {6, 4}, {6, 6}, {4, 6}}});
  EXPECT_FALSE(Sees({1, 5}, {9, 5}, env));
  EXPECT_TRUE(Sees({1, 1}, {9, 1}, env));
  ExpectCode(ErrorCode::kOutsidePolygon, [&] { Sees({5, 5}, {1, 1}, env); });
}

TEST(SeesTest, Symmetric) {
  const PolygonEnv env = LHexagon();
  Rng rng(8);
  int n = 0;
  while (n < 2000) {
    const Point2 a = rng.Point(0, 4), b = rng.Point(0, 4);
    if (!PolygonContains(env, a) || !PolygonContains(env, b)) continue;
    EXPECT_EQ(Sees(a, b, env), Sees(b, a, env));
    ++n;
  }
}

TEST(GdopTest, Examples) {
  EXPECT_NEAR(Gdop({1, 0}, {0, 1}, {0, 0}, GdopMode::kDistance), 1.0, 1e-12);
  EXPECT_EQ(Gdop({1, 0}, {2, 0}, {0, 0}, GdopMode::kDistance),
            std::numeric_limits<double>::infinity());
  // d1 = 2, d2 = 3, angle pi/6: 6 / (1/2).
  const Point2 s2 = 3.0 * Point2{std::cos(kPi / 6), std::sin(kPi / 6)};
  EXPECT_NEAR(Gdop({2, 0}, s2, {0, 0}, GdopMode::kBearing), 12.0, 1e-9);
}

TEST(HullTest, SquareWithInteriorAndCollinear) {
  const std::vector<Point2> pts = {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 0}};
  const std::vector<int> hull = ConvexHull(pts, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(hull.size(), 4u);
  std::vector<Point2> ring;
  for (int i : hull) ring.push_back(pts[i]);
  EXPECT_GT(SignedArea(ring), 0.0);
}

TEST(MecTest, ContainsAllAndTouchesDiameter) {
  Rng rng(9);
  std::vector<Point2> pts;
  for (int i = 0; i < 300; ++i) pts.push_back(rng.Point(-3, 3));
  const Circle c = MinimumEnclosingCircle(pts);
  double far = 0;
  for (Point2 p : pts) {
    EXPECT_LE(Dist(p, c.center), c.radius + 1e-9);
    far = std::max(far, Dist(p, c.center));
  }
  EXPECT_NEAR(far, c.radius, 1e-9);
  const Circle two = MinimumEnclosingCircle({{0, 0}, {2, 0}});
  EXPECT_NEAR(two.radius, 1.0, 1e-12);
}

}  // namespace
}  // namespace angcov
