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

#include "angcov/generate.h"

#include <cmath>
#include <random>
#include <set>
#include <utility>

#include "angcov/error.h"

namespace angcov {
namespace {

constexpr double kGridStep = 1e-3;

class PointSampler {
 public:
  PointSampler(std::uint64_t seed, double extent)
      : gen_(seed), cells_(static_cast<std::uint64_t>(
                        std::llround(extent / kGridStep)) + 1) {}

  Point2 Next() {
    const auto ix = static_cast<long long>(gen_() % cells_);
    const auto iy = static_cast<long long>(gen_() % cells_);
    return {static_cast<double>(ix) * kGridStep,
            static_cast<double>(iy) * kGridStep};
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t cells_;
};

using Key = std::pair<double, double>;

// Draws points until `count` accepted ones are distinct from `taken`.
template <typename Accept>
std::vector<Point2> Draw(PointSampler& sampler, int count, std::set<Key>& taken,
                         Accept&& accept) {
  std::vector<Point2> out;
  for (long long tries = 0; static_cast<int>(out.size()) < count; ++tries) {
    if (tries > 1000LL * (count + 10)) {
      throw Error(ErrorCode::kBadParams, "could not place distinct points");
    }
    const Point2 p = sampler.Next();
    if (!accept(p) || !taken.insert({p.x, p.y}).second) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace

std::string_view GenKindName(GenKind kind) {
  switch (kind) {
    case GenKind::kUniform:
      return "uniform";
    case GenKind::kGrid:
      return "grid";
    case GenKind::kCircle:
      return "circle";
    case GenKind::kPolygonCorridor:
      return "polygon-corridor";
  }
  return "?";
}

std::optional<GenKind> ParseGenKind(std::string_view name) {
  for (GenKind k : {GenKind::kUniform, GenKind::kGrid, GenKind::kCircle,
                    GenKind::kPolygonCorridor}) {
    if (GenKindName(k) == name) return k;
  }
  return std::nullopt;
}

PolygonEnv CorridorPolygon(double extent) {
  const double s = extent / 10.0;
  std::vector<Point2> outer = {{0, 0},  {10, 0}, {10, 10}, {7, 10},
                               {7, 3},  {3, 3},  {3, 10},  {0, 10}};
  for (Point2& p : outer) p = s * p;
  return MakePolygon(std::move(outer));
}

InstanceFile Generate(const GenParams& params) {
  if (params.m < 0 || params.n < 0 || !(params.extent > 0.0)) {
    throw Error(ErrorCode::kBadParams, "counts must be >= 0, extent > 0");
  }
  InstanceFile file;
  file.seed = params.seed;
  file.generator = std::string(GenKindName(params.kind));
  Instance& inst = file.instance;
  inst.variant = params.variant;
  inst.alpha = params.alpha;
  inst.delta = params.delta;
  if (params.variant == Variant::kAngDist) {
    inst.radius = params.radius > 0.0 ? params.radius : params.extent / 3.0;
  }
  const double e = params.extent;
  if (params.kind == GenKind::kPolygonCorridor) {
    inst.polygon = CorridorPolygon(e);
  } else if (params.variant == Variant::kArtAng) {
    inst.polygon = MakePolygon({{0, 0}, {e, 0}, {e, e}, {0, e}});
  }

  PointSampler sampler(params.seed, e);
  std::set<Key> taken;
  auto anywhere = [](Point2) { return true; };
  switch (params.kind) {
    case GenKind::kUniform:
      inst.sensors = Draw(sampler, params.m, taken, anywhere);
      break;
    case GenKind::kGrid: {
      const int cols = std::max(1, static_cast<int>(std::ceil(std::sqrt(params.m))));
      const double step = e / cols;
      for (int i = 0; static_cast<int>(inst.sensors.size()) < params.m; ++i) {
        const double x = std::round((i % cols + 0.5) * step / kGridStep) * kGridStep;
        const double y = std::round((i / cols + 0.5) * step / kGridStep) * kGridStep;
        inst.sensors.push_back({x, y});
        taken.insert({x, y});
      }
      break;
    }
    case GenKind::kCircle: {
      const Point2 c{e / 2, e / 2};
      for (int i = 0; i < params.m; ++i) {
        const double a = 2.0 * kPi * i / params.m;
        const Point2 p = c + 0.45 * e * Point2{std::cos(a), std::sin(a)};
        inst.sensors.push_back(p);
        taken.insert({p.x, p.y});
      }
      break;
    }
    case GenKind::kPolygonCorridor: {
      const PolygonEnv env = *inst.polygon;
      inst.sensors = Draw(sampler, params.m, taken,
                          [&](Point2 p) { return PolygonContains(env, p); });
      break;
    }
  }
  if (params.kind == GenKind::kCircle) {
    const Point2 c{e / 2, e / 2};
    inst.targets = Draw(sampler, params.n, taken, [&](Point2 p) {
      return Dist(p, c) <= 0.4 * e;
    });
  } else if (inst.polygon) {
    const PolygonEnv env = *inst.polygon;
    inst.targets = Draw(sampler, params.n, taken,
                        [&](Point2 p) { return PolygonContains(env, p); });
  } else {
    inst.targets = Draw(sampler, params.n, taken, anywhere);
  }
  return file;
}

}  // namespace angcov
