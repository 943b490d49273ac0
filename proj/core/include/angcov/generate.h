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

// Deterministic random instance generators. Coordinates (except on circles)
// are multiples of 1e-3 so orientation tests stay well conditioned.

#ifndef ANGCOV_GENERATE_H_
#define ANGCOV_GENERATE_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "angcov/coverage.h"
#include "angcov/instance_io.h"

namespace angcov {

enum class GenKind { kUniform, kGrid, kCircle, kPolygonCorridor };

std::string_view GenKindName(GenKind kind);
std::optional<GenKind> ParseGenKind(std::string_view name);

struct GenParams {
  GenKind kind = GenKind::kUniform;
  Variant variant = Variant::kAng;
  int m = 50;
  int n = 25;
  double alpha = kPi / 3;
  double delta = 2.0;
  double radius = 0.0;  // angdist; 0 picks extent / 3
  double extent = 10.0;
  std::uint64_t seed = 1;
};

// The corridor used by kPolygonCorridor, scaled to `extent`.
PolygonEnv CorridorPolygon(double extent);

// Sensors are pairwise distinct and no target coincides with a sensor.
// Throws kBadParams for invalid parameters.
InstanceFile Generate(const GenParams& params);

}  // namespace angcov

#endif  // ANGCOV_GENERATE_H_
