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

#include "angcov/hitting.h"

#include <algorithm>
#include <cmath>

#include "angcov/error.h"

namespace angcov {
namespace {

void RequireNonEmpty(const RangeSpace& rs) {
  for (const Range& r : rs.ranges) {
    if (r.members.empty()) {
      throw Error(ErrorCode::kNoHittingSet,
                  "range for target " + std::to_string(r.target) +
                      " is empty");
    }
  }
}

int FirstUnhit(const RangeSpace& rs, std::span<const SensorId> ids) {
  std::vector<char> in(rs.points.size(), 0);
  for (SensorId id : ids) in[id] = 1;
  for (int i = 0; i < static_cast<int>(rs.ranges.size()); ++i) {
    const Range& r = rs.ranges[i];
    bool hit = false;
    if (rs.extension_radius) {
      for (SensorId id : ids) {
        if (rs.InExtension(r, id, *rs.extension_radius)) {
          hit = true;
          break;
        }
      }
    } else {
      for (SensorId m : r.members) {
        if (in[m]) {
          hit = true;
          break;
        }
      }
    }
    if (!hit) return i;
  }
  return -1;
}

// Branch and bound state for the exact solver.
struct Search {
  const std::vector<std::vector<int>>* ranges;  // members as local indices
  std::vector<int> hit_count;                   // per range
  std::vector<int> chosen;
  std::vector<int> best;
  std::vector<std::vector<int>> ranges_of;      // local id -> ranges

  void Run() {
    if (!best.empty() && chosen.size() + 1 >= best.size()) {
      // Even one more pick cannot beat the incumbent; only finish if done.
      if (FirstOpen() < 0 && chosen.size() < best.size()) best = chosen;
      return;
    }
    const int open = FirstOpen();
    if (open < 0) {
      best = chosen;
      return;
    }
    for (int x : (*ranges)[open]) {
      chosen.push_back(x);
      for (int r : ranges_of[x]) ++hit_count[r];
      Run();
      for (int r : ranges_of[x]) --hit_count[r];
      chosen.pop_back();
    }
  }

  int FirstOpen() const {
    for (int i = 0; i < static_cast<int>(hit_count.size()); ++i) {
      if (hit_count[i] == 0) return i;
    }
    return -1;
  }
};

}  // namespace

NetBuilder SampleNetBuilder(int vc_bound) {
  return [vc_bound](const RangeSpace& rs, double eps, std::uint64_t seed) {
    return SampleEpsilonNet(rs, eps, vc_bound, seed);
  };
}

NetBuilder FatWedgeNetBuilder() {
  return [](const RangeSpace& rs, double eps, std::uint64_t) {
    return FatWedgeEpsilonNet(rs, eps);
  };
}

NetBuilder Sector3RNetBuilder(double radius) {
  return [radius](const RangeSpace& rs, double eps, std::uint64_t) {
    return Sector3REpsilonNet(rs, eps, radius);
  };
}

bool HitsAll(const RangeSpace& rs, std::span<const SensorId> ids) {
  return FirstUnhit(rs, ids) < 0;
}

HittingResult BgHittingSet(const RangeSpace& rs, const NetBuilder& builder,
                           const BgOptions& options) {
  RequireNonEmpty(rs);
  HittingResult result;
  if (rs.ranges.empty()) return result;
  RangeSpace work = rs;
  const int ground = static_cast<int>(rs.ground.size());
  std::uint64_t seed = options.seed;
  for (int guess = 1;; guess *= 2) {
    const int tau = std::min(guess, ground);
    for (SensorId id : work.ground) work.weights[id] = 1.0;
    const double ratio = std::max(2.0, static_cast<double>(ground) / tau);
    const int cap = static_cast<int>(
                        std::ceil(options.loop_constant * tau * std::log2(ratio))) +
                    1;
    const double eps = 1.0 / (2.0 * tau);
    result.stats.final_guess = tau;
    for (int it = 0; it < cap; ++it) {
      Net net = builder(work, eps, seed++);
      ++result.stats.iterations;
      ++result.stats.nets_built;
      if (net.fallback_added > 0) ++result.stats.net_fallbacks;
      const int unhit = FirstUnhit(work, net.ids);
      if (unhit < 0) {
        result.ids = std::move(net.ids);
        if (options.prune) {
          const size_t before = result.ids.size();
          result.ids = PruneRedundant(rs, std::move(result.ids));
          result.stats.pruned = static_cast<int>(before - result.ids.size());
        }
        return result;
      }
      for (SensorId m : work.ranges[unhit].members) work.weights[m] *= 2.0;
      ++result.stats.doublings;
    }
    if (tau >= ground) break;
  }
  // With tau' = |ground| every range is heavy, so the net hits all of them;
  // reaching this point means a net constructor broke its contract.
  throw Error(ErrorCode::kInternal, "reweighting did not converge");
}

std::vector<SensorId> PruneRedundant(const RangeSpace& rs,
                                     std::vector<SensorId> ids) {
  std::sort(ids.begin(), ids.end());
  for (int i = static_cast<int>(ids.size()) - 1; i >= 0; --i) {
    std::vector<SensorId> trial = ids;
    trial.erase(trial.begin() + i);
    if (HitsAll(rs, trial)) ids = std::move(trial);
  }
  return ids;
}

std::vector<SensorId> GreedyHittingSet(const RangeSpace& rs) {
  RequireNonEmpty(rs);
  std::vector<char> hit(rs.ranges.size(), 0);
  size_t remaining = rs.ranges.size();
  std::vector<SensorId> chosen;
  std::vector<int> count(rs.points.size());
  while (remaining > 0) {
    std::fill(count.begin(), count.end(), 0);
    for (size_t i = 0; i < rs.ranges.size(); ++i) {
      if (hit[i]) continue;
      for (SensorId m : rs.ranges[i].members) ++count[m];
    }
    SensorId best = 0;
    for (SensorId id = 1; id < static_cast<SensorId>(count.size()); ++id) {
      if (count[id] > count[best]) best = id;
    }
    chosen.push_back(best);
    for (size_t i = 0; i < rs.ranges.size(); ++i) {
      if (!hit[i] && rs.IsMember(rs.ranges[i], best)) {
        hit[i] = 1;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

ExactHitting ExactHittingSet(const RangeSpace& rs, int limit) {
  if (static_cast<int>(rs.ground.size()) > limit) {
    throw Error(ErrorCode::kTooLarge,
                "ground set of " + std::to_string(rs.ground.size()) +
                    " exceeds the exact solver limit " +
                    std::to_string(limit));
  }
  RequireNonEmpty(rs);
  std::vector<int> local(rs.points.size(), -1);
  for (size_t i = 0; i < rs.ground.size(); ++i) {
    local[rs.ground[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> ranges;
  Search search;
  search.ranges_of.resize(rs.ground.size());
  for (const Range& r : rs.ranges) {
    std::vector<int> members;
    for (SensorId m : r.members) {
      if (local[m] >= 0) members.push_back(local[m]);
    }
    if (members.empty()) {
      throw Error(ErrorCode::kNoHittingSet,
                  "range for target " + std::to_string(r.target) +
                      " has no member in the ground set");
    }
    for (int x : members) {
      search.ranges_of[x].push_back(static_cast<int>(ranges.size()));
    }
    ranges.push_back(std::move(members));
  }
  search.ranges = &ranges;
  search.hit_count.assign(ranges.size(), 0);
  search.Run();
  ExactHitting out;
  for (int x : search.best) out.ids.push_back(rs.ground[x]);
  std::sort(out.ids.begin(), out.ids.end());
  out.tau = static_cast<int>(out.ids.size());
  return out;
}

}  // namespace angcov
