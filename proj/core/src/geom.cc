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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "angcov/error.h"

namespace angcov {
namespace {

void RequireDistinct(Point2 a, Point2 b, const char* what) {
  if (a == b) throw Error(ErrorCode::kCoincidentPoints, what);
}

// Exact for integer-grid inputs; otherwise an ordinary double predicate.
double Orient(Point2 a, Point2 b, Point2 c) { return Cross(b - a, c - a); }

int Sign(double v) { return (v > 0) - (v < 0); }

bool InBox(Point2 p, Point2 a, Point2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool OnSegmentExact(Point2 p, Point2 a, Point2 b) {
  return Orient(a, b, p) == 0.0 && InBox(p, a, b);
}

double PointSegmentDistance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = Dot(ab, ab);
  if (len2 == 0.0) return Dist(p, a);
  const double u = std::clamp(Dot(p - a, ab) / len2, 0.0, 1.0);
  return Dist(p, a + u * ab);
}

bool SegmentsIntersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = Sign(Orient(a, b, c));
  const int o2 = Sign(Orient(a, b, d));
  const int o3 = Sign(Orient(c, d, a));
  const int o4 = Sign(Orient(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && InBox(c, a, b)) return true;
  if (o2 == 0 && InBox(d, a, b)) return true;
  if (o3 == 0 && InBox(a, c, d)) return true;
  if (o4 == 0 && InBox(b, c, d)) return true;
  return false;
}

bool ProperlyCross(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = Sign(Orient(a, b, c));
  const int o2 = Sign(Orient(a, b, d));
  const int o3 = Sign(Orient(c, d, a));
  const int o4 = Sign(Orient(c, d, b));
  return o1 * o2 < 0 && o3 * o4 < 0;
}

template <typename Fn>
void ForEachEdge(const PolygonEnv& env, Fn&& fn) {
  auto ring_edges = [&](const std::vector<Point2>& ring) {
    for (size_t i = 0; i < ring.size(); ++i) {
      fn(ring[i], ring[(i + 1) % ring.size()]);
    }
  };
  ring_edges(env.outer);
  for (const auto& hole : env.holes) ring_edges(hole);
}

// Even-odd ray casting; boundary handling is left to the caller.
bool RingContainsStrict(const std::vector<Point2>& ring, Point2 p) {
  bool inside = false;
  for (size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Point2 a = ring[i];
    const Point2 b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

bool RingBoundaryContains(const std::vector<Point2>& ring, Point2 p) {
  double scale = 1.0;
  for (const auto& v : ring) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
  const double tol = kLengthTol * scale;
  for (size_t i = 0; i < ring.size(); ++i) {
    if (PointSegmentDistance(p, ring[i], ring[(i + 1) % ring.size()]) <= tol) {
      return true;
    }
  }
  return false;
}

void CheckRingSimple(const std::vector<Point2>& ring) {
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    if (ring[i] == ring[(i + 1) % n]) {
      throw Error(ErrorCode::kBadParams, "polygon ring has a repeated vertex");
    }
    for (size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      Point2 a = ring[i], b = ring[(i + 1) % n];
      Point2 c = ring[j], d = ring[(j + 1) % n];
      if (adjacent) {
        // Adjacent edges may only share their common vertex.
        const Point2 shared = (j == i + 1) ? b : a;
        const Point2 far_ij = (j == i + 1) ? a : b;
        const Point2 far_other = (j == i + 1) ? d : c;
        if (Orient(far_ij, shared, far_other) == 0.0 &&
            Dot(far_ij - shared, far_other - shared) > 0.0) {
          throw Error(ErrorCode::kBadParams, "polygon ring folds back on itself");
        }
        continue;
      }
      if (SegmentsIntersect(a, b, c, d)) {
        throw Error(ErrorCode::kBadParams, "polygon ring self-intersects");
      }
    }
  }
}

}  // namespace

Point2 Rotate(Point2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double AngleAt(Point2 t, Point2 s1, Point2 s2) {
  RequireDistinct(s1, t, "sensor coincides with target");
  RequireDistinct(s2, t, "sensor coincides with target");
  RequireDistinct(s1, s2, "sensor pair coincides");
  const Point2 u = s1 - t;
  const Point2 v = s2 - t;
  return std::atan2(std::abs(Cross(u, v)), Dot(u, v));
}

double CoverageLevel(Point2 s1, Point2 s2, Point2 t) {
  const double theta = AngleAt(t, s1, s2);
  return std::min(theta, kPi - theta);
}

CoveragePredicate::CoveragePredicate(double alpha) : alpha_(alpha) {
  const double relaxed = alpha - kAngleTol;
  accept_all_ = relaxed <= 0.0;
  const double c = std::cos(std::max(relaxed, 0.0));
  cos2_ = c * c;
}

bool CoveragePredicate::operator()(Point2 s1, Point2 s2, Point2 t) const {
  RequireDistinct(s1, t, "sensor coincides with target");
  RequireDistinct(s2, t, "sensor coincides with target");
  RequireDistinct(s1, s2, "sensor pair coincides");
  if (accept_all_) return true;
  const Point2 u = s1 - t;
  const Point2 v = s2 - t;
  const double d = Dot(u, v);
  return d * d <= cos2_ * Dot(u, u) * Dot(v, v);
}

bool AlphaCovers(Point2 s1, Point2 s2, Point2 t, double alpha) {
  return CoveragePredicate(alpha)(s1, s2, t);
}

CoverageDisks MakeCoverageDisks(Point2 s, Point2 s_prime, double alpha) {
  if (alpha == 0.0) {
    throw Error(ErrorCode::kZeroAngle,
                "alpha = 0: covered region is the plane minus the line s-s'");
  }
  if (!(alpha > 0.0 && alpha <= kPi / 2)) {
    throw Error(ErrorCode::kBadParams, "alpha must lie in (0, pi/2]");
  }
  RequireDistinct(s, s_prime, "sensor pair coincides");
  const double d = Dist(s, s_prime);
  const double radius = d / (2.0 * std::sin(alpha));
  const double half = d / 2.0;
  const double offset = std::sqrt(std::max(0.0, radius * radius - half * half));
  const Point2 mid = 0.5 * (s + s_prime);
  const Point2 dir = (1.0 / d) * (s_prime - s);
  const Point2 normal{-dir.y, dir.x};
  return {mid + offset * normal, mid - offset * normal, radius};
}

bool InSymmetricDifference(const CoverageDisks& disks, Point2 p) {
  const bool in1 = Dist(p, disks.center1) <= disks.radius;
  const bool in2 = Dist(p, disks.center2) <= disks.radius;
  return in1 != in2;
}

double NormalizeModPi(double angle) {
  double r = std::fmod(angle, kPi);
  if (r < 0) r += kPi;
  if (r >= kPi) r -= kPi;
  return r;
}

double AxialDistance(double a, double b) {
  const double d = NormalizeModPi(a - b);
  return std::min(d, kPi - d);
}

bool DoubleWedge::Contains(Point2 p) const {
  if (p == apex) return true;
  if (IsFull()) return true;
  const Point2 v = p - apex;
  const double dir = std::atan2(v.y, v.x);
  return AxialDistance(dir, axis) <= half_width + kAngleTol;
}

DoubleWedge MakeDoubleWedge(Point2 t, Point2 s, double beta) {
  RequireDistinct(s, t, "sensor coincides with target");
  if (!(beta >= 0.0 && beta <= kPi / 2 + kAngleTol)) {
    throw Error(ErrorCode::kBadParams, "beta must lie in [0, pi/2]");
  }
  const Point2 v = s - t;
  DoubleWedge w;
  w.apex = t;
  w.axis = NormalizeModPi(std::atan2(v.y, v.x) + kPi / 2);
  w.half_width = std::max(0.0, kPi / 2 - beta);
  return w;
}

DoubleWedge MergeDoubleWedges(const DoubleWedge& a, const DoubleWedge& b) {
  if (!(a.apex == b.apex)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "double-wedges must share their apex");
  }
  if (a.IsFull()) return a;
  if (b.IsFull()) return b;
  // Signed offset of b's axis from a's, in (-pi/2, pi/2].
  double d = NormalizeModPi(b.axis - a.axis);
  if (d > kPi / 2) d -= kPi;
  if (std::abs(d) > a.half_width + b.half_width + kAngleTol) {
    throw Error(ErrorCode::kDisjointWedges,
                "angular intervals do not overlap modulo pi");
  }
  const double lo = std::min(-a.half_width, d - b.half_width);
  const double hi = std::max(a.half_width, d + b.half_width);
  DoubleWedge m;
  m.apex = a.apex;
  if (hi - lo >= kPi - kAngleTol) {
    m.axis = a.axis;
    m.half_width = kPi / 2;
    return m;
  }
  m.axis = NormalizeModPi(a.axis + 0.5 * (lo + hi));
  m.half_width = 0.5 * (hi - lo);
  return m;
}

bool InDoubleSector(const DoubleWedge& wedge, double radius, Point2 p) {
  return WithinDistance(Dist(p, wedge.apex), radius) && wedge.Contains(p);
}

double SignedArea(const std::vector<Point2>& ring) {
  double area = 0.0;
  for (size_t i = 0; i < ring.size(); ++i) {
    area += Cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return 0.5 * area;
}

PolygonEnv MakePolygon(std::vector<Point2> outer,
                       std::vector<std::vector<Point2>> holes) {
  auto check_ring = [](const std::vector<Point2>& ring) {
    if (ring.size() < 3) {
      throw Error(ErrorCode::kBadParams, "polygon ring needs >= 3 vertices");
    }
    for (const auto& p : ring) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw Error(ErrorCode::kBadParams, "polygon vertex is not finite");
      }
    }
    CheckRingSimple(ring);
    if (SignedArea(ring) == 0.0) {
      throw Error(ErrorCode::kBadParams, "polygon ring has zero area");
    }
  };
  check_ring(outer);
  if (SignedArea(outer) < 0) std::reverse(outer.begin(), outer.end());
  for (auto& hole : holes) {
    check_ring(hole);
    if (SignedArea(hole) > 0) std::reverse(hole.begin(), hole.end());
    for (const auto& v : hole) {
      if (RingBoundaryContains(outer, v) || !RingContainsStrict(outer, v)) {
        throw Error(ErrorCode::kBadParams, "hole is not strictly inside");
      }
    }
  }
  // Rings must not touch one another.
  std::vector<const std::vector<Point2>*> rings{&outer};
  for (const auto& h : holes) rings.push_back(&h);
  for (size_t r1 = 0; r1 < rings.size(); ++r1) {
    for (size_t r2 = r1 + 1; r2 < rings.size(); ++r2) {
      const auto& a = *rings[r1];
      const auto& b = *rings[r2];
      for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
          if (SegmentsIntersect(a[i], a[(i + 1) % a.size()], b[j],
                                b[(j + 1) % b.size()])) {
            throw Error(ErrorCode::kBadParams, "polygon rings intersect");
          }
        }
      }
      if (r1 > 0 && RingContainsStrict(a, b.front())) {
        throw Error(ErrorCode::kBadParams, "holes are nested");
      }
      if (r1 > 0 && RingContainsStrict(b, a.front())) {
        throw Error(ErrorCode::kBadParams, "holes are nested");
      }
    }
  }
  return PolygonEnv{std::move(outer), std::move(holes)};
}

bool PolygonContains(const PolygonEnv& env, Point2 p) {
  if (RingBoundaryContains(env.outer, p)) return true;
  for (const auto& hole : env.holes) {
    if (RingBoundaryContains(hole, p)) return true;
  }
  if (!RingContainsStrict(env.outer, p)) return false;
  for (const auto& hole : env.holes) {
    if (RingContainsStrict(hole, p)) return false;
  }
  return true;
}

bool Sees(Point2 s, Point2 t, const PolygonEnv& env) {
  if (!PolygonContains(env, s) || !PolygonContains(env, t)) {
    throw Error(ErrorCode::kOutsidePolygon, "visibility endpoint outside P");
  }
  if (s == t) return true;
  const Point2 st = t - s;
  const double len2 = Dot(st, st);
  std::vector<double> touches{0.0, 1.0};
  bool blocked = false;
  ForEachEdge(env, [&](Point2 a, Point2 b) {
    if (blocked) return;
    if (ProperlyCross(s, t, a, b)) {
      blocked = true;
      return;
    }
    if (!SegmentsIntersect(s, t, a, b)) return;
    for (Point2 v : {a, b}) {
      if (OnSegmentExact(v, s, t)) touches.push_back(Dot(v - s, st) / len2);
    }
  });
  if (blocked) return false;
  // The segment can only leave P through boundary contact points; check each
  // piece between consecutive contacts.
  std::sort(touches.begin(), touches.end());
  for (size_t i = 0; i + 1 < touches.size(); ++i) {
    if (touches[i + 1] - touches[i] <= 1e-12) continue;
    const double mid = 0.5 * (touches[i] + touches[i + 1]);
    if (!PolygonContains(env, s + mid * st)) return false;
  }
  return true;
}

double Gdop(Point2 s1, Point2 s2, Point2 t, GdopMode mode) {
  RequireDistinct(s1, t, "sensor coincides with target");
  RequireDistinct(s2, t, "sensor coincides with target");
  RequireDistinct(s1, s2, "sensor pair coincides");
  const Point2 u = s1 - t;
  const Point2 v = s2 - t;
  const double cross = std::abs(Cross(u, v));
  if (cross == 0.0) return std::numeric_limits<double>::infinity();
  const double d1 = Norm(u);
  const double d2 = Norm(v);
  const double sin_theta = cross / (d1 * d2);
  return mode == GdopMode::kDistance ? 1.0 / sin_theta : d1 * d2 / sin_theta;
}

namespace {

Circle CircleFrom2(Point2 a, Point2 b) {
  return {0.5 * (a + b), 0.5 * Dist(a, b)};
}

Circle CircleFrom3(Point2 a, Point2 b, Point2 c) {
  const Point2 ab = b - a;
  const Point2 ac = c - a;
  const double d = 2.0 * Cross(ab, ac);
  if (d == 0.0) {
    Circle best = CircleFrom2(a, b);
    for (const Circle& cand : {CircleFrom2(a, c), CircleFrom2(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const double ab2 = Dot(ab, ab);
  const double ac2 = Dot(ac, ac);
  const Point2 center{a.x + (ac.y * ab2 - ab.y * ac2) / d,
                      a.y + (ab.x * ac2 - ac.x * ab2) / d};
  return {center, Dist(center, a)};
}

bool InCircle(const Circle& c, Point2 p) {
  return Dist(c.center, p) <= c.radius * (1.0 + 1e-12) + 1e-12;
}

}  // namespace

Circle MinimumEnclosingCircle(std::vector<Point2> points) {
  if (points.empty()) return {};
  std::mt19937_64 rng(0x5eed);
  std::shuffle(points.begin(), points.end(), rng);
  Circle c{points[0], 0.0};
  for (size_t i = 1; i < points.size(); ++i) {
    if (InCircle(c, points[i])) continue;
    c = {points[i], 0.0};
    for (size_t j = 0; j < i; ++j) {
      if (InCircle(c, points[j])) continue;
      c = CircleFrom2(points[i], points[j]);
      for (size_t k = 0; k < j; ++k) {
        if (!InCircle(c, points[k])) c = CircleFrom3(points[i], points[j], points[k]);
      }
    }
  }
  return c;
}

std::vector<int> ConvexHull(const std::vector<Point2>& points,
                            const std::vector<int>& subset) {
  std::vector<int> idx = subset;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const Point2 p = points[a];
    const Point2 q = points[b];
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return a < b;
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](int a, int b) { return points[a] == points[b]; }),
            idx.end());
  if (idx.size() <= 2) return idx;
  std::vector<int> hull(2 * idx.size());
  size_t k = 0;
  for (size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && Orient(points[hull[k - 2]], points[hull[k - 1]],
                            points[idx[i]]) <= 0) {
      --k;
    }
    hull[k++] = idx[i];
  }
  for (size_t i = idx.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && Orient(points[hull[k - 2]], points[hull[k - 1]],
                                points[idx[i]]) <= 0) {
      --k;
    }
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace angcov
