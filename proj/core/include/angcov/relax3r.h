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

// Shifting over strips combined with radius-R sector nets. The result hits
// the 3R extension of every range, which yields coverage within distance 3R
// without ever leaving a target's double-wedge.

#ifndef ANGCOV_RELAX3R_H_
#define ANGCOV_RELAX3R_H_

#include <span>
#include <vector>

#include "angcov/coverage.h"
#include "angcov/hitting.h"
#include "angcov/netlib.h"

namespace angcov {

enum class Axis { kX, kY };

struct Strip {
  long long index = 0;
  double lo = 0.0;  // strip extent along the axis, [lo, hi)
  double hi = 0.0;
  std::vector<int> ranges;         // indices into rs.ranges
  std::vector<SensorId> ground;    // sensors within [lo - 3R, hi + 3R]
};

// Strips of width l * 6R offset by shift * 6R along `axis`. Each range of
// `range_subset` goes to the strip containing its apex; only strips with
// ranges are returned, ordered by index.
std::vector<Strip> MakeStrips(const RangeSpace& rs,
                              std::span<const int> range_subset,
                              std::span<const SensorId> ground_subset, int l,
                              double radius, int shift, Axis axis);

struct ShiftedHitting {
  std::vector<SensorId> ids;  // sorted
  int best_shift_x = 0;
  int best_shift_y = 0;
  std::vector<int> combo_sizes;  // indexed by shift_x * l + shift_y
  int cells = 0;                 // cells solved for the winning combination
};

// Two-level shifting: vertical strips, then horizontal strips inside each;
// every cell is solved by reweighting with Sector3R nets. Returns the
// smallest union over the l * l shift combinations (first on ties).
ShiftedHitting ShiftedHitting3R(const RangeSpace& rs, double radius, int l = 2,
                                const BgOptions& options = {});

// Full pipeline for kAngDist with the 3R relaxation. Requires alpha > 0.
Solution SolveAngDist3R(const Instance& inst, SolveOptions options = {});

}  // namespace angcov

#endif  // ANGCOV_RELAX3R_H_
