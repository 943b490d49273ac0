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

// Planar primitives for angular coverage: the pair-angle predicate, the
// two-disk region a sensor pair covers, double-wedges (angular intervals
// taken modulo pi around an apex), polygon visibility and GDOP.
//
// All closed-interval angle comparisons use kAngleTol; all distance bounds
// use kLengthTol. Boundary points count as covered.

#ifndef ANGCOV_GEOM_H_
#define ANGCOV_GEOM_H_

#include <cmath>
#include <numbers>
#include <vector>

namespace angcov {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kAngleTol = 1e-9;
inline constexpr double kLengthTol = 1e-9;

using SensorId = int;
using TargetId = int;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double k, Point2 a) { return {k * a.x, k * a.y}; }
inline double Dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double Cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double Norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double Dist(Point2 a, Point2 b) { return Norm(a - b); }
inline double Dist2(Point2 a, Point2 b) { return Dot(a - b, a - b); }

// Rotates p counter-clockwise by `angle` about the origin.
Point2 Rotate(Point2 p, double angle);

// True when d <= bound up to kLengthTol (closed distance convention).
inline bool WithinDistance(double d, double bound) {
  return d <= bound + kLengthTol;
}

// Angle s1-t-s2 in [0, pi]. Throws kCoincidentPoints if t coincides with a
// sensor or the sensors coincide.
double AngleAt(Point2 t, Point2 s1, Point2 s2);

// Folded coverage level min(theta, pi - theta) of the angle s1-t-s2; the pair
// alpha-covers t exactly when this is >= alpha.
double CoverageLevel(Point2 s1, Point2 s2, Point2 t);

// Whether the pair (s1, s2) alpha-covers t, i.e. angle s1-t-s2 lies in
// [alpha, pi - alpha] (with kAngleTol slack). Decided without inverse trig:
// (u.v)^2 <= cos^2(alpha - tol) |u|^2 |v|^2. alpha = 0 accepts every pair.
bool AlphaCovers(Point2 s1, Point2 s2, Point2 t, double alpha);

// Precomputed form of AlphaCovers for hot loops that test many points at a
// single level.
class CoveragePredicate {
 public:
  explicit CoveragePredicate(double alpha);
  bool operator()(Point2 s1, Point2 s2, Point2 t) const;
  double alpha() const { return alpha_; }

 private:
  double alpha_;
  double cos2_;
  bool accept_all_;
};

// The two disks of radius d(s, s') / (2 sin alpha) through s and s'. A point
// is alpha-covered by (s, s') iff it lies in exactly one of them.
struct CoverageDisks {
  Point2 center1;
  Point2 center2;
  double radius = 0.0;
};

// Throws kZeroAngle for alpha == 0 (the radius diverges), kCoincidentPoints
// for s == s', kBadParams for alpha outside (0, pi/2].
CoverageDisks MakeCoverageDisks(Point2 s, Point2 s_prime, double alpha);

// Membership in (D1 u D2) \ (D1 n D2), closed disks.
bool InSymmetricDifference(const CoverageDisks& disks, Point2 p);

// Reduces an angle to [0, pi).
double NormalizeModPi(double angle);

// Distance between two directions taken modulo pi, in [0, pi/2].
double AxialDistance(double a, double b);

// Union of two opposite wedges at `apex`: the directions within `half_width`
// of `axis`, both taken modulo pi.
struct DoubleWedge {
  Point2 apex;
  double axis = 0.0;        // [0, pi)
  double half_width = 0.0;  // [0, pi/2]

  double width() const { return 2.0 * half_width; }
  bool IsFull() const { return half_width >= kPi / 2 - kAngleTol; }
  // The apex itself is a member by convention.
  bool Contains(Point2 p) const;
};

// The double-wedge R_t(s, beta) of partners p such that (s, p) beta-covers t:
// apex t, axis perpendicular to t->s, half-width pi/2 - beta.
DoubleWedge MakeDoubleWedge(Point2 t, Point2 s, double beta);

// Smallest double-wedge containing both inputs. Requires a common apex and
// overlapping angular intervals; throws kDisjointWedges otherwise. Under
// that precondition membership is exactly the union of the inputs.
DoubleWedge MergeDoubleWedges(const DoubleWedge& a, const DoubleWedge& b);

// Double-sector: member of `wedge` and within `radius` of the apex.
bool InDoubleSector(const DoubleWedge& wedge, double radius, Point2 p);

// Polygonal environment: outer ring counter-clockwise, holes clockwise.
struct PolygonEnv {
  std::vector<Point2> outer;
  std::vector<std::vector<Point2>> holes;

  int hole_count() const { return static_cast<int>(holes.size()); }
};

// Validates and orients the rings. Throws kBadParams for rings with fewer
// than three vertices, self-intersections, or holes not strictly inside.
PolygonEnv MakePolygon(std::vector<Point2> outer,
                       std::vector<std::vector<Point2>> holes = {});

double SignedArea(const std::vector<Point2>& ring);

// Closed point-in-polygon test (outer minus open holes).
bool PolygonContains(const PolygonEnv& env, Point2 p);

// Closed visibility: the segment s-t stays inside the closed polygon. Grazing
// a vertex or running along an edge counts as visible. Throws
// kOutsidePolygon if s or t is outside.
bool Sees(Point2 s, Point2 t, const PolygonEnv& env);

enum class GdopMode { kDistance, kBearing };

// 1/|sin theta| (distance-based) or d1 d2 / |sin theta| (bearing-based);
// +infinity for collinear configurations.
double Gdop(Point2 s1, Point2 s2, Point2 t, GdopMode mode);

// Smallest enclosing circle of the points (randomized incremental with a
// fixed shuffle, so the result is deterministic).
struct Circle {
  Point2 center;
  double radius = 0.0;
};
Circle MinimumEnclosingCircle(std::vector<Point2> points);

// Counter-clockwise convex hull without collinear vertices; returns indices
// into `points`. Ties are resolved by index so results are reproducible.
std::vector<int> ConvexHull(const std::vector<Point2>& points,
                            const std::vector<int>& subset);

}  // namespace angcov

#endif  // ANGCOV_GEOM_H_
