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

#include <algorithm>
#include <limits>

#include "angcov/error.h"

namespace angcov {

std::vector<SensorId> GreedyDudc(const std::vector<Point2>& sensors,
                                 const std::vector<Point2>& targets,
                                 double radius) {
  const int m = static_cast<int>(sensors.size());
  const int n = static_cast<int>(targets.size());
  std::vector<std::vector<TargetId>> reach(m);
  std::vector<char> reachable(n, 0);
  for (SensorId s = 0; s < m; ++s) {
    for (TargetId t = 0; t < n; ++t) {
      if (WithinDistance(Dist(sensors[s], targets[t]), radius)) {
        reach[s].push_back(t);
        reachable[t] = 1;
      }
    }
  }
  for (TargetId t = 0; t < n; ++t) {
    if (!reachable[t]) {
      throw Error(ErrorCode::kInfeasible,
                  "target " + std::to_string(t) + " has no sensor within R");
    }
  }
  std::vector<char> covered(n, 0);
  int remaining = n;
  std::vector<SensorId> chosen;
  while (remaining > 0) {
    SensorId best = -1;
    int best_gain = 0;
    for (SensorId s = 0; s < m; ++s) {
      int gain = 0;
      for (TargetId t : reach[s]) gain += covered[t] ? 0 : 1;
      if (gain > best_gain) {
        best = s;
        best_gain = gain;
      }
    }
    chosen.push_back(best);
    for (TargetId t : reach[best]) {
      if (!covered[t]) {
        covered[t] = 1;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

DudcReport VerifyDudc(const std::vector<Point2>& sensors,
                      std::span<const SensorId> selected,
                      const std::vector<Point2>& targets, double radius) {
  DudcReport report;
  report.pass = true;
  for (TargetId t = 0; t < static_cast<TargetId>(targets.size()); ++t) {
    double nearest = std::numeric_limits<double>::infinity();
    for (SensorId s : selected) nearest = std::min(nearest, Dist(sensors[s], targets[t]));
    if (report.farthest_target < 0 || nearest > report.farthest_distance) {
      report.farthest_target = t;
      report.farthest_distance = nearest;
    }
    if (!WithinDistance(nearest, radius)) report.pass = false;
  }
  return report;
}

}  // namespace angcov
