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

// Hitting-set solvers over a RangeSpace: iterative reweighting driven by an
// epsilon-net constructor (the main solver), the ln-n greedy baseline and an
// exact branch-and-bound used as an oracle on small ground sets.

#ifndef ANGCOV_HITTING_H_
#define ANGCOV_HITTING_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "angcov/netlib.h"

namespace angcov {

using NetBuilder =
    std::function<Net(const RangeSpace& rs, double eps, std::uint64_t seed)>;

NetBuilder SampleNetBuilder(int vc_bound);
NetBuilder FatWedgeNetBuilder();
NetBuilder Sector3RNetBuilder(double radius);

struct BgOptions {
  std::uint64_t seed = 1;
  double loop_constant = 4.0;
  // Drop redundant picks afterwards, highest id first.
  bool prune = true;
};

struct BgStats {
  int final_guess = 0;
  int iterations = 0;
  int doublings = 0;
  int nets_built = 0;
  int net_fallbacks = 0;  // nets that needed patching
  int pruned = 0;
};

struct HittingResult {
  std::vector<SensorId> ids;  // sorted
  BgStats stats;
};

// True iff every range is hit (RangeSpace::Hits semantics).
bool HitsAll(const RangeSpace& rs, std::span<const SensorId> ids);

// Reweighting loop: for tau' = 1, 2, 4, ... reset weights, then repeatedly
// build a 1/(2 tau')-net and return it once it hits every range, doubling
// the weights of the first unhit range otherwise. The caller's weights are
// not modified.
HittingResult BgHittingSet(const RangeSpace& rs, const NetBuilder& builder,
                           const BgOptions& options = {});

// Removes ids whose removal keeps every range hit, scanning from the
// highest id down.
std::vector<SensorId> PruneRedundant(const RangeSpace& rs,
                                     std::vector<SensorId> ids);

// Picks the id in the most unhit ranges (ties: lowest id) until all are hit.
// Uses member lists.
std::vector<SensorId> GreedyHittingSet(const RangeSpace& rs);

struct ExactHitting {
  std::vector<SensorId> ids;
  int tau = 0;
};

// Minimum-cardinality hitting set (member lists) by branching on the
// lowest-index unhit range. Throws kTooLarge when the ground set exceeds
// `limit`.
ExactHitting ExactHittingSet(const RangeSpace& rs, int limit = 24);

}  // namespace angcov

#endif  // ANGCOV_HITTING_H_
