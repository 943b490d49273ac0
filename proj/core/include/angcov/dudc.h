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

// Discrete unit disk cover: choose sensors so every target lies within
// distance R of one of them.

#ifndef ANGCOV_DUDC_H_
#define ANGCOV_DUDC_H_

#include <span>
#include <vector>

#include "angcov/geom.h"

namespace angcov {

// Greedy max coverage (ties: lowest id). Throws kInfeasible if a target has
// no sensor within R.
std::vector<SensorId> GreedyDudc(const std::vector<Point2>& sensors,
                                 const std::vector<Point2>& targets,
                                 double radius);

struct DudcReport {
  bool pass = false;
  TargetId farthest_target = -1;  // -1 when there are no targets
  double farthest_distance = 0.0;  // +inf when `selected` is empty
};

DudcReport VerifyDudc(const std::vector<Point2>& sensors,
                      std::span<const SensorId> selected,
                      const std::vector<Point2>& targets, double radius);

}  // namespace angcov

#endif  // ANGCOV_DUDC_H_
