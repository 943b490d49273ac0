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

// SVG rendering of an instance and a selected sensor set.

#ifndef ANGCOV_RENDER_H_
#define ANGCOV_RENDER_H_

#include <optional>
#include <span>
#include <string>

#include "angcov/coverage.h"

namespace angcov {

struct RenderOptions {
  double width_px = 800.0;
  // Target whose best witness pair and double-wedge are drawn.
  std::optional<TargetId> focus;
  // Coverage level used for the focus wedge; defaults to alpha.
  std::optional<double> level;
};

std::string RenderSvg(const Instance& inst, std::span<const SensorId> selected,
                      const RenderOptions& options = {});

}  // namespace angcov

#endif  // ANGCOV_RENDER_H_
