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

// Weighted range spaces over sensor ground sets and the three epsilon-net
// constructions used by the hitting-set solvers:
//
//   * SampleEpsilonNet   - weighted random sample, verified, with fallback.
//   * FatWedgeEpsilonNet - deterministic slice rule for fat double-wedges.
//   * Sector3REpsilonNet - slice x strip rule for radius-R double-sectors in
//                          three rotated frames; it guarantees a hit inside
//                          the 3R extension of every heavy range.
//
// Every constructor verifies its output and patches any unhit heavy range,
// so the returned set always satisfies the net property.

#ifndef ANGCOV_NETLIB_H_
#define ANGCOV_NETLIB_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "angcov/geom.h"

namespace angcov {

// Precomputed sensor/target visibility inside a polygon.
class VisibilityTable {
 public:
  VisibilityTable() = default;
  VisibilityTable(const std::vector<Point2>& sensors,
                  const std::vector<Point2>& targets, const PolygonEnv& env);

  bool Visible(SensorId s, TargetId t) const {
    return bits_[static_cast<size_t>(s) * num_targets_ + t] != 0;
  }
  int num_sensors() const { return num_sensors_; }
  int num_targets() const { return num_targets_; }

 private:
  int num_sensors_ = 0;
  int num_targets_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Side constraint deciding whether sensor s may serve target t: optional
// distance bound and optional visibility.
struct Eligibility {
  std::optional<double> max_distance;
  const VisibilityTable* visibility = nullptr;

  bool Allows(SensorId s, Point2 sp, TargetId t, Point2 tp) const {
    if (sp == tp) return false;
    if (max_distance && !WithinDistance(Dist(sp, tp), *max_distance)) {
      return false;
    }
    return visibility == nullptr || visibility->Visible(s, t);
  }
};

// One range D_t n X (possibly filtered by distance and visibility), with the
// geometry that produced it so membership can be re-evaluated.
struct Range {
  TargetId target = -1;
  Point2 apex;
  // Sensors of S whose beta-wedges generate the range. generator2 is -1 for
  // a single wedge; generator1 is -1 for a pure visibility range.
  SensorId generator1 = -1;
  SensorId generator2 = -1;
  double beta = 0.0;
  DoubleWedge wedge;
  std::optional<double> radius;
  bool visibility_filtered = false;
  std::vector<SensorId> members;  // sorted, duplicate free
};

struct RangeSpace {
  std::vector<Point2> points;    // indexed by sensor id
  std::vector<SensorId> ground;  // sorted subset of ids the nets draw from
  std::vector<double> weights;   // indexed by sensor id
  std::vector<Range> ranges;
  // When set, a range counts as hit by any sensor in its extension of this
  // radius (same angular region) instead of by its members.
  std::optional<double> extension_radius;

  double GroundWeight() const;
  double RangeWeight(const Range& r) const;
  bool IsMember(const Range& r, SensorId id) const;
  // Angular part of the range: some generator's beta-wedge contains the
  // sensor (always true for pure visibility ranges).
  bool InAngularRegion(const Range& r, SensorId id) const;
  bool InExtension(const Range& r, SensorId id, double radius) const;
  // Hit test honoring extension_radius.
  bool Hits(const Range& r, SensorId id) const;
};

// Builds a range space over all of `sensors` with unit weights.
RangeSpace MakeRangeSpace(const std::vector<Point2>& sensors);

// Ranges for the refinement step. For each uncovered target, the first
// eligible pair of `current` that (alpha - 2 eps)-covers it generates
// D_t = merge(R_t(s1, alpha - eps), R_t(s2, alpha - eps)); in the seed round
// (alpha - 2 eps == 0) a single eligible sensor generates R_t(s1, alpha - eps).
// Members are the sensors in D_t admitted by `member_rule`.
//
// Throws kPreconditionViolated if a target has no qualifying generator and
// kInfeasible if a range is empty.
RangeSpace BuildRanges(const std::vector<Point2>& sensors,
                       const std::vector<Point2>& targets,
                       std::span<const SensorId> current,
                       std::span<const TargetId> uncovered, double alpha,
                       double eps, const Eligibility& pair_rule,
                       const Eligibility& member_rule);

// Ranges {V_t n X} of sensors eligible for each target (seed for ArtAng).
// Throws kInfeasible if some target has no eligible sensor.
RangeSpace BuildEligibilityRanges(const std::vector<Point2>& sensors,
                                  const std::vector<Point2>& targets,
                                  std::span<const TargetId> which,
                                  const Eligibility& rule);

enum class NetKind { kSample, kFatWedge, kSector3R };

struct Net {
  std::vector<SensorId> ids;  // sorted
  double eps = 0.0;
  NetKind kind = NetKind::kSample;
  int pre_fallback_size = 0;
  int unhit_before_fallback = 0;  // heavy ranges missed by the raw rule
  int fallback_added = 0;
  int attempts = 1;
  // Sector3R only: (range index, net id inside its 3R extension) for every
  // heavy range.
  std::vector<std::pair<int, SensorId>> evidence;
};

// Indices of eps-heavy ranges not hit by `net`. With `extension_radius`, a
// range is hit by any net id in its extension of that radius.
std::vector<int> VerifyNet(const RangeSpace& rs, double eps,
                           std::span<const SensorId> net,
                           std::optional<double> extension_radius = {});

int SampleSize(double eps, int vc_bound);

// Weighted sample of SampleSize(eps, vc_bound) draws with replacement;
// up to 10 reseeded retries, then deterministic patching.
Net SampleEpsilonNet(const RangeSpace& rs, double eps, int vc_bound,
                     std::uint64_t seed);

// Slice rule: ceil(4/eps) weight slices by y; per slice p_i and N(p_i) on
// the hull of the points in or above (and, mirrored, in or below) it.
Net FatWedgeEpsilonNet(const RangeSpace& rs, double eps);

// Frame rotations used by the sector construction.
inline constexpr double kFrameRotations[3] = {0.0, kPi / 3, -kPi / 3};

// Angles of the axis-parallel pieces one wedge of `w` splits into in frame
// `frame` (cuts along the frame axes).
std::vector<double> AxisParallelPieces(const DoubleWedge& w, int frame);

// Lowest frame in which every piece is <= piece_limit or exactly pi/2;
// -1 if none.
int ChooseSectorFrame(const DoubleWedge& w, double piece_limit = kPi / 3);

// Number of slices ceil(4/eps), robust to eps values like 0.1.
int NumSlices(double eps);

// Per frame: weight slices x vertical strips of width `radius`; per block
// p_ij, N(p_ij), leftmost and rightmost. The union over the three frames is
// verified against 3R extensions and patched.
Net Sector3REpsilonNet(const RangeSpace& rs, double eps, double radius);

// Upper bound on the pre-fallback size of Sector3REpsilonNet for this
// ground set: sum over frames of 4 * ceil(4/eps) * max(1, ceil(W_f / R)).
int Sector3RSizeBound(const RangeSpace& rs, double eps, double radius);

}  // namespace angcov

#endif  // ANGCOV_NETLIB_H_
