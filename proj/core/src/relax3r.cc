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

#include "angcov/relax3r.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "angcov/error.h"

namespace angcov {
namespace {

double Coord(Point2 p, Axis axis) { return axis == Axis::kX ? p.x : p.y; }

}  // namespace

std::vector<Strip> MakeStrips(const RangeSpace& rs,
                              std::span<const int> range_subset,
                              std::span<const SensorId> ground_subset, int l,
                              double radius, int shift, Axis axis) {
  if (l < 1 || shift < 0 || shift >= l || !(radius > 0.0)) {
    throw Error(ErrorCode::kBadParams, "invalid strip parameters");
  }
  const double unit = 6.0 * radius;
  const double width = l * unit;
  const double offset = shift * unit;
  std::map<long long, Strip> strips;
  for (int r : range_subset) {
    const double c = Coord(rs.ranges[r].apex, axis);
    const auto index = static_cast<long long>(std::floor((c - offset) / width));
    Strip& s = strips[index];
    s.index = index;
    s.lo = offset + static_cast<double>(index) * width;
    s.hi = s.lo + width;
    s.ranges.push_back(r);
  }
  const double pad = 3.0 * radius + kLengthTol;
  std::vector<Strip> out;
  for (auto& [index, s] : strips) {
    for (SensorId id : ground_subset) {
      const double c = Coord(rs.points[id], axis);
      if (c >= s.lo - pad && c <= s.hi + pad) s.ground.push_back(id);
    }
    out.push_back(std::move(s));
  }
  return out;
}

ShiftedHitting ShiftedHitting3R(const RangeSpace& rs, double radius, int l,
                                const BgOptions& options) {
  if (l < 1) throw Error(ErrorCode::kBadParams, "l must be >= 1");
  RangeSpace extended = rs;
  extended.extension_radius = 3.0 * radius;
  std::vector<int> all(rs.ranges.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  const NetBuilder builder = Sector3RNetBuilder(radius);

  ShiftedHitting best;
  bool have_best = false;
  for (int sx = 0; sx < l; ++sx) {
    for (int sy = 0; sy < l; ++sy) {
      std::vector<SensorId> ids;
      int cells = 0;
      for (const Strip& vs : MakeStrips(rs, all, rs.ground, l, radius, sx, Axis::kX)) {
        for (const Strip& hs :
             MakeStrips(rs, vs.ranges, vs.ground, l, radius, sy, Axis::kY)) {
          RangeSpace cell;
          cell.points = rs.points;
          cell.weights = rs.weights;
          cell.ground = hs.ground;
          cell.extension_radius = 3.0 * radius;
          std::vector<char> in_cell(rs.points.size(), 0);
          for (SensorId id : hs.ground) in_cell[id] = 1;
          for (int r : hs.ranges) {
            Range range = rs.ranges[r];
            std::erase_if(range.members,
                          [&](SensorId id) { return !in_cell[id]; });
            cell.ranges.push_back(std::move(range));
          }
          const HittingResult hr = BgHittingSet(cell, builder, options);
          ids.insert(ids.end(), hr.ids.begin(), hr.ids.end());
          ++cells;
        }
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      best.combo_sizes.push_back(static_cast<int>(ids.size()));
      if (!have_best || ids.size() < best.ids.size()) {
        have_best = true;
        best.ids = std::move(ids);
        best.best_shift_x = sx;
        best.best_shift_y = sy;
        best.cells = cells;
      }
    }
  }
  if (!HitsAll(extended, best.ids)) {
    throw Error(ErrorCode::kInternal, "shifted hitting set misses a range");
  }
  return best;
}

Solution SolveAngDist3R(const Instance& inst, SolveOptions options) {
  if (inst.variant != Variant::kAngDist) {
    throw Error(ErrorCode::kBadParams, "the 3R pipeline needs an angdist instance");
  }
  options.relax3r = true;
  return Iterate(inst, options);
}

}  // namespace angcov
