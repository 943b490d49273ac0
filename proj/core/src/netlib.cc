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

#include "angcov/netlib.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "angcov/error.h"

namespace angcov {
namespace {

bool IsHeavy(double weight, double total, double eps) {
  return weight > 0.0 && weight >= eps * total * (1.0 - 1e-12);
}

void CheckEps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::kBadParams, "net parameter eps must lie in (0, 1]");
  }
}

void CheckGroundWeight(const RangeSpace& rs) {
  if (!(rs.GroundWeight() > 0.0)) {
    throw Error(ErrorCode::kBadParams, "ground set has zero total weight");
  }
}

void Normalize(std::vector<SensorId>* ids) {
  std::sort(ids->begin(), ids->end());
  ids->erase(std::unique(ids->begin(), ids->end()), ids->end());
}

// Adds one heavy-enough witness per unhit heavy range and re-verifies.
void PatchNet(const RangeSpace& rs, double eps,
              std::optional<double> extension_radius, Net* net) {
  Normalize(&net->ids);
  net->pre_fallback_size = static_cast<int>(net->ids.size());
  const std::vector<int> unhit =
      VerifyNet(rs, eps, net->ids, extension_radius);
  net->unhit_before_fallback = static_cast<int>(unhit.size());
  for (int index : unhit) {
    const Range& r = rs.ranges[index];
    SensorId best = -1;
    auto consider = [&](SensorId id) {
      if (best < 0 || rs.weights[id] > rs.weights[best]) best = id;
    };
    if (extension_radius) {
      for (SensorId id : rs.ground) {
        if (rs.InExtension(r, id, *extension_radius)) consider(id);
      }
      if (best < 0) {
        throw Error(ErrorCode::kInfeasibleExtension,
                    "extension of range for target " +
                        std::to_string(r.target) + " holds no sensor");
      }
    } else {
      for (SensorId id : r.members) consider(id);
    }
    net->ids.push_back(best);
  }
  Normalize(&net->ids);
  net->fallback_added =
      static_cast<int>(net->ids.size()) - net->pre_fallback_size;
  if (!VerifyNet(rs, eps, net->ids, extension_radius).empty()) {
    throw Error(ErrorCode::kInternal, "net verification failed after patch");
  }
}

// Ground ids in a frame, sorted by (y, x, id), with weight-quantile slices.
struct Slicing {
  std::vector<SensorId> order;
  std::vector<int> slice_of;  // indexed by sensor id
};

Slicing SliceByWeight(const RangeSpace& rs, const std::vector<Point2>& q,
                      double eps) {
  Slicing s;
  s.order = rs.ground;
  std::sort(s.order.begin(), s.order.end(), [&](SensorId a, SensorId b) {
    if (q[a].y != q[b].y) return q[a].y < q[b].y;
    if (q[a].x != q[b].x) return q[a].x < q[b].x;
    return a < b;
  });
  const int k = NumSlices(eps);
  const double quantum = eps * rs.GroundWeight() / 4.0;
  s.slice_of.assign(rs.points.size(), -1);
  double before = 0.0;
  for (SensorId id : s.order) {
    const int slice = static_cast<int>(std::floor(before / quantum));
    s.slice_of[id] = std::clamp(slice, 0, k - 1);
    before += rs.weights[id];
  }
  return s;
}

// For each slice i present in `order` (ascending in the frame), appends the
// last point p_i of slice i on the counter-clockwise hull of the points in
// slice >= i (traversal starting at the topmost, rightmost vertex) and its
// successor N(p_i).
//
// Scanning from the top, the right hull chain of every suffix is maintained
// with a monotone-chain stack; the slice-i points form the tail of that
// chain, so each snapshot is read in time proportional to its tail.
void AddSlicePicks(const std::vector<Point2>& q,
                   const std::vector<SensorId>& order,
                   const std::vector<int>& slice_of,
                   std::vector<SensorId>* out) {
  if (order.empty()) return;
  std::vector<SensorId> chain;  // top (index 0) down the right side
  const int top_slice = slice_of[order.back()];
  for (int pos = static_cast<int>(order.size()) - 1; pos >= 0; --pos) {
    const SensorId id = order[pos];
    while (chain.size() >= 2) {
      const Point2 a = q[chain[chain.size() - 2]];
      const Point2 b = q[chain.back()];
      if (Cross(b - a, q[id] - b) < 0.0) break;
      chain.pop_back();
    }
    chain.push_back(id);
    const int slice = slice_of[id];
    if (pos > 0 && slice_of[order[pos - 1]] == slice) continue;
    if (slice == top_slice) {
      out->push_back(chain.size() >= 2 ? chain[1] : chain[0]);
      out->push_back(chain[0]);
      continue;
    }
    size_t j = chain.size() - 1;
    while (j >= 1 && slice_of[chain[j - 1]] == slice) --j;
    out->push_back(chain[j]);
    out->push_back(chain[j - 1]);
  }
}

std::vector<Point2> FramePoints(const RangeSpace& rs, double rotation,
                                bool mirror) {
  std::vector<Point2> q(rs.points.size());
  for (SensorId id : rs.ground) {
    Point2 p = rotation == 0.0 ? rs.points[id] : Rotate(rs.points[id], -rotation);
    if (mirror) p.y = -p.y;
    q[id] = p;
  }
  return q;
}

int StripCount(double width, double radius) {
  const double n = std::ceil(width / radius - 1e-9);
  return std::max(1, static_cast<int>(n));
}

double FrameWidth(const RangeSpace& rs, const std::vector<Point2>& q,
                  double* min_x) {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (SensorId id : rs.ground) {
    if (first || q[id].x < lo) lo = q[id].x;
    if (first || q[id].x > hi) hi = q[id].x;
    first = false;
  }
  if (min_x != nullptr) *min_x = lo;
  return hi - lo;
}

}  // namespace

VisibilityTable::VisibilityTable(const std::vector<Point2>& sensors,
                                 const std::vector<Point2>& targets,
                                 const PolygonEnv& env)
    : num_sensors_(static_cast<int>(sensors.size())),
      num_targets_(static_cast<int>(targets.size())),
      bits_(sensors.size() * targets.size(), 0) {
  for (int s = 0; s < num_sensors_; ++s) {
    for (int t = 0; t < num_targets_; ++t) {
      bits_[static_cast<size_t>(s) * num_targets_ + t] =
          Sees(sensors[s], targets[t], env) ? 1 : 0;
    }
  }
}

double RangeSpace::GroundWeight() const {
  double total = 0.0;
  for (SensorId id : ground) total += weights[id];
  return total;
}

double RangeSpace::RangeWeight(const Range& r) const {
  double total = 0.0;
  for (SensorId id : r.members) total += weights[id];
  return total;
}

bool RangeSpace::IsMember(const Range& r, SensorId id) const {
  return std::binary_search(r.members.begin(), r.members.end(), id);
}

bool RangeSpace::InAngularRegion(const Range& r, SensorId id) const {
  const Point2 p = points[id];
  if (p == r.apex) return false;
  if (r.generator1 < 0) return true;
  auto covers = [&](SensorId g) {
    const Point2 gp = points[g];
    return gp != p && AlphaCovers(gp, p, r.apex, r.beta);
  };
  return covers(r.generator1) || (r.generator2 >= 0 && covers(r.generator2));
}

bool RangeSpace::InExtension(const Range& r, SensorId id, double radius) const {
  return WithinDistance(Dist(points[id], r.apex), radius) &&
         InAngularRegion(r, id);
}

bool RangeSpace::Hits(const Range& r, SensorId id) const {
  return extension_radius ? InExtension(r, id, *extension_radius)
                          : IsMember(r, id);
}

RangeSpace MakeRangeSpace(const std::vector<Point2>& sensors) {
  RangeSpace rs;
  rs.points = sensors;
  rs.ground.resize(sensors.size());
  for (size_t i = 0; i < sensors.size(); ++i) rs.ground[i] = static_cast<int>(i);
  rs.weights.assign(sensors.size(), 1.0);
  return rs;
}

RangeSpace BuildRanges(const std::vector<Point2>& sensors,
                       const std::vector<Point2>& targets,
                       std::span<const SensorId> current,
                       std::span<const TargetId> uncovered, double alpha,
                       double eps, const Eligibility& pair_rule,
                       const Eligibility& member_rule) {
  RangeSpace rs = MakeRangeSpace(sensors);
  const double beta = std::max(0.0, alpha - eps);
  const double gamma = alpha - 2.0 * eps;
  const bool seed_round = gamma <= kAngleTol;
  const CoveragePredicate covers_gamma(std::max(0.0, gamma));
  const CoveragePredicate covers_beta(beta);
  std::vector<SensorId> sorted_current(current.begin(), current.end());
  Normalize(&sorted_current);

  for (TargetId t : uncovered) {
    const Point2 tp = targets[t];
    std::vector<SensorId> eligible;
    for (SensorId s : sorted_current) {
      if (pair_rule.Allows(s, sensors[s], t, tp)) eligible.push_back(s);
    }
    Range r;
    r.target = t;
    r.apex = tp;
    r.beta = beta;
    r.radius = member_rule.max_distance;
    r.visibility_filtered = member_rule.visibility != nullptr;
    if (seed_round) {
      if (eligible.empty()) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "no eligible sensor for target " + std::to_string(t));
      }
      r.generator1 = eligible[0];
      r.wedge = MakeDoubleWedge(tp, sensors[r.generator1], beta);
    } else {
      for (size_t i = 0; i < eligible.size() && r.generator1 < 0; ++i) {
        for (size_t j = i + 1; j < eligible.size(); ++j) {
          const Point2 a = sensors[eligible[i]];
          const Point2 b = sensors[eligible[j]];
          if (a == b) continue;
          if (covers_gamma(a, b, tp) && !covers_beta(a, b, tp)) {
            r.generator1 = eligible[i];
            r.generator2 = eligible[j];
            break;
          }
        }
      }
      if (r.generator1 < 0) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "no qualifying sensor pair for target " +
                        std::to_string(t));
      }
      r.wedge = MergeDoubleWedges(
          MakeDoubleWedge(tp, sensors[r.generator1], beta),
          MakeDoubleWedge(tp, sensors[r.generator2], beta));
    }
    for (SensorId x = 0; x < static_cast<SensorId>(sensors.size()); ++x) {
      if (member_rule.Allows(x, sensors[x], t, tp) && rs.InAngularRegion(r, x)) {
        r.members.push_back(x);
      }
    }
    if (r.members.empty()) {
      throw Error(ErrorCode::kInfeasible,
                  "no sensor can complete a pair for target " +
                      std::to_string(t));
    }
    rs.ranges.push_back(std::move(r));
  }
  return rs;
}

RangeSpace BuildEligibilityRanges(const std::vector<Point2>& sensors,
                                  const std::vector<Point2>& targets,
                                  std::span<const TargetId> which,
                                  const Eligibility& rule) {
  RangeSpace rs = MakeRangeSpace(sensors);
  for (TargetId t : which) {
    Range r;
    r.target = t;
    r.apex = targets[t];
    r.wedge = {targets[t], 0.0, kPi / 2};
    r.radius = rule.max_distance;
    r.visibility_filtered = rule.visibility != nullptr;
    for (SensorId x = 0; x < static_cast<SensorId>(sensors.size()); ++x) {
      if (rule.Allows(x, sensors[x], t, targets[t])) r.members.push_back(x);
    }
    if (r.members.empty()) {
      throw Error(ErrorCode::kInfeasible,
                  "no eligible sensor for target " + std::to_string(t));
    }
    rs.ranges.push_back(std::move(r));
  }
  return rs;
}

std::vector<int> VerifyNet(const RangeSpace& rs, double eps,
                           std::span<const SensorId> net,
                           std::optional<double> extension_radius) {
  std::vector<char> in_net(rs.points.size(), 0);
  for (SensorId id : net) in_net[id] = 1;
  const double total = rs.GroundWeight();
  std::vector<int> unhit;
  for (int i = 0; i < static_cast<int>(rs.ranges.size()); ++i) {
    const Range& r = rs.ranges[i];
    if (!IsHeavy(rs.RangeWeight(r), total, eps)) continue;
    bool hit = false;
    if (extension_radius) {
      for (SensorId id : net) {
        if (rs.InExtension(r, id, *extension_radius)) {
          hit = true;
          break;
        }
      }
    } else {
      for (SensorId id : r.members) {
        if (in_net[id]) {
          hit = true;
          break;
        }
      }
    }
    if (!hit) unhit.push_back(i);
  }
  return unhit;
}

int SampleSize(double eps, int vc_bound) {
  return static_cast<int>(
      std::ceil((8.0 * vc_bound / eps) * std::log(8.0 / eps)));
}

Net SampleEpsilonNet(const RangeSpace& rs, double eps, int vc_bound,
                     std::uint64_t seed) {
  CheckEps(eps);
  CheckGroundWeight(rs);
  std::vector<double> prefix;
  prefix.reserve(rs.ground.size());
  double total = 0.0;
  for (SensorId id : rs.ground) {
    total += rs.weights[id];
    prefix.push_back(total);
  }
  const int draws = SampleSize(eps, vc_bound);
  constexpr int kRetries = 10;
  Net net;
  net.eps = eps;
  net.kind = NetKind::kSample;
  for (int attempt = 0; attempt <= kRetries; ++attempt) {
    std::mt19937_64 gen(seed + 0x9e3779b97f4a7c15ULL * attempt);
    std::vector<char> picked(rs.points.size(), 0);
    for (int k = 0; k < draws; ++k) {
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * total;
      size_t pos = std::upper_bound(prefix.begin(), prefix.end(), u) -
                   prefix.begin();
      pos = std::min(pos, prefix.size() - 1);
      picked[rs.ground[pos]] = 1;
    }
    net.ids.clear();
    for (SensorId id : rs.ground) {
      if (picked[id]) net.ids.push_back(id);
    }
    net.attempts = attempt + 1;
    if (VerifyNet(rs, eps, net.ids).empty()) break;
  }
  PatchNet(rs, eps, std::nullopt, &net);
  return net;
}

int NumSlices(double eps) {
  return std::max(1, static_cast<int>(std::ceil(4.0 / eps - 1e-9)));
}

Net FatWedgeEpsilonNet(const RangeSpace& rs, double eps) {
  CheckEps(eps);
  CheckGroundWeight(rs);
  for (const Range& r : rs.ranges) {
    if (r.radius || r.visibility_filtered) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "fat-wedge nets need unfiltered double-wedge ranges");
    }
  }
  Net net;
  net.eps = eps;
  net.kind = NetKind::kFatWedge;
  for (bool mirror : {false, true}) {
    const std::vector<Point2> q = FramePoints(rs, 0.0, mirror);
    const Slicing s = SliceByWeight(rs, q, eps);
    AddSlicePicks(q, s.order, s.slice_of, &net.ids);
  }
  PatchNet(rs, eps, std::nullopt, &net);
  return net;
}

std::vector<double> AxisParallelPieces(const DoubleWedge& w, int frame) {
  const double lo = w.axis - w.half_width;
  const double hi = w.axis + w.half_width;
  const double base = kFrameRotations[frame];
  const double step = kPi / 2;
  double cut = base + std::ceil((lo - base) / step) * step;
  std::vector<double> pieces;
  double prev = lo;
  for (; cut < hi - kAngleTol; cut += step) {
    if (cut > prev + kAngleTol) {
      pieces.push_back(cut - prev);
      prev = cut;
    }
  }
  pieces.push_back(hi - prev);
  return pieces;
}

int ChooseSectorFrame(const DoubleWedge& w, double piece_limit) {
  for (int f = 0; f < 3; ++f) {
    bool ok = true;
    for (double piece : AxisParallelPieces(w, f)) {
      if (!(piece <= piece_limit + kAngleTol ||
            std::abs(piece - kPi / 2) <= kAngleTol)) {
        ok = false;
        break;
      }
    }
    if (ok) return f;
  }
  return -1;
}

Net Sector3REpsilonNet(const RangeSpace& rs, double eps, double radius) {
  CheckEps(eps);
  CheckGroundWeight(rs);
  if (!(radius > 0.0)) {
    throw Error(ErrorCode::kBadParams, "sector radius must be positive");
  }
  Net net;
  net.eps = eps;
  net.kind = NetKind::kSector3R;
  for (double rotation : kFrameRotations) {
    const std::vector<Point2> q = FramePoints(rs, rotation, false);
    const Slicing s = SliceByWeight(rs, q, eps);
    double min_x = 0.0;
    const int strips = StripCount(FrameWidth(rs, q, &min_x), radius);
    std::vector<std::vector<SensorId>> by_strip(strips);
    for (SensorId id : s.order) {
      const int j = std::clamp(
          static_cast<int>(std::floor((q[id].x - min_x) / radius)), 0,
          strips - 1);
      by_strip[j].push_back(id);
    }
    for (const std::vector<SensorId>& strip : by_strip) {
      AddSlicePicks(q, strip, s.slice_of, &net.ids);
      // Leftmost and rightmost of each block; the strip is in slice order.
      for (size_t a = 0; a < strip.size();) {
        size_t b = a;
        SensorId left = strip[a], right = strip[a];
        for (; b < strip.size() && s.slice_of[strip[b]] == s.slice_of[strip[a]];
             ++b) {
          const SensorId id = strip[b];
          if (q[id].x < q[left].x || (q[id].x == q[left].x && id < left)) {
            left = id;
          }
          if (q[id].x > q[right].x || (q[id].x == q[right].x && id < right)) {
            right = id;
          }
        }
        net.ids.push_back(left);
        net.ids.push_back(right);
        a = b;
      }
    }
  }
  PatchNet(rs, eps, 3.0 * radius, &net);
  const double total = rs.GroundWeight();
  for (int i = 0; i < static_cast<int>(rs.ranges.size()); ++i) {
    const Range& r = rs.ranges[i];
    if (!IsHeavy(rs.RangeWeight(r), total, eps)) continue;
    for (SensorId id : net.ids) {
      if (rs.InExtension(r, id, 3.0 * radius)) {
        net.evidence.emplace_back(i, id);
        break;
      }
    }
  }
  return net;
}

int Sector3RSizeBound(const RangeSpace& rs, double eps, double radius) {
  int bound = 0;
  for (double rotation : kFrameRotations) {
    const std::vector<Point2> q = FramePoints(rs, rotation, false);
    bound += 4 * NumSlices(eps) * StripCount(FrameWidth(rs, q, nullptr), radius);
  }
  return bound;
}

}  // namespace angcov
