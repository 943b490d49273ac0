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

#include "angcov/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "angcov/error.h"

namespace angcov {
namespace {

// partners[t][a]: sensors b such that (a, b) covers target t.
bool CoversAll(const std::vector<std::vector<std::uint32_t>>& partners,
               std::uint32_t chosen) {
  for (const auto& row : partners) {
    bool covered = false;
    for (std::uint32_t rest = chosen; rest != 0 && !covered; rest &= rest - 1) {
      covered = (row[std::countr_zero(rest)] & chosen) != 0;
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

ExactCover ExactMinCover(const Instance& inst, int limit,
                         std::optional<double> level,
                         std::optional<double> distance_bound) {
  const int m = static_cast<int>(inst.sensors.size());
  if (m > limit || m > 31) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(m) + " sensors exceed the oracle limit " +
                    std::to_string(std::min(limit, 31)));
  }
  const std::optional<VisibilityTable> vis = MakeVisibility(inst);
  if (!distance_bound && inst.variant == Variant::kAngDist) {
    distance_bound = inst.radius;
  }
  const Eligibility rule =
      MakeEligibility(inst, distance_bound, vis ? &*vis : nullptr);
  const CoveragePredicate covers(std::max(0.0, level.value_or(inst.alpha)));

  std::vector<std::vector<std::uint32_t>> partners;
  for (TargetId t = 0; t < static_cast<TargetId>(inst.targets.size()); ++t) {
    const Point2 tp = inst.targets[t];
    std::vector<std::uint32_t> row(m, 0);
    bool any = false;
    for (SensorId a = 0; a < m; ++a) {
      if (!rule.Allows(a, inst.sensors[a], t, tp)) continue;
      for (SensorId b = a + 1; b < m; ++b) {
        if (!rule.Allows(b, inst.sensors[b], t, tp)) continue;
        if (inst.sensors[a] == inst.sensors[b]) continue;
        if (covers(inst.sensors[a], inst.sensors[b], tp)) {
          row[a] |= 1u << b;
          row[b] |= 1u << a;
          any = true;
        }
      }
    }
    if (!any) {
      throw Error(ErrorCode::kInfeasible,
                  "target " + std::to_string(t) + " has no covering pair");
    }
    partners.push_back(std::move(row));
  }
  // Subsets by increasing size, each size in increasing mask order; the
  // first feasible one is a minimum cover.
  ExactCover out;
  const std::uint64_t full = std::uint64_t{1} << m;
  for (int k = 0; k <= m; ++k) {
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask < full) {
      ++out.nodes;
      if (CoversAll(partners, static_cast<std::uint32_t>(mask))) {
        for (SensorId s = 0; s < m; ++s) {
          if (mask & (std::uint64_t{1} << s)) out.ids.push_back(s);
        }
        out.k_opt = k;
        return out;
      }
      if (mask == 0) break;
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  throw Error(ErrorCode::kInternal, "oracle found no cover although X covers");
}

}  // namespace angcov
