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

// Exact minimum sensor set for small instances, used as the k_OPT oracle.

#ifndef ANGCOV_ORACLE_H_
#define ANGCOV_ORACLE_H_

#include <optional>
#include <vector>

#include "angcov/coverage.h"

namespace angcov {

struct ExactCover {
  std::vector<SensorId> ids;  // sorted
  int k_opt = 0;
  long long nodes = 0;  // subsets examined
};

// Smallest subset of sensors that `level`-covers every target under the
// instance constraints (distance bound defaults to R for kAngDist; level
// defaults to alpha). Enumerates subsets by size, checking them against
// per-target partner bitmasks. Throws kTooLarge if m > limit, kInfeasible if some target
// has no covering pair at all.
ExactCover ExactMinCover(const Instance& inst, int limit = 20,
                         std::optional<double> level = {},
                         std::optional<double> distance_bound = {});

}  // namespace angcov

#endif  // ANGCOV_ORACLE_H_
