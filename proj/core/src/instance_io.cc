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

#include "angcov/instance_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "angcov/error.h"
#include "json.hpp"

namespace angcov {
namespace {

using nlohmann::ordered_json;

ordered_json PointsJson(const std::vector<Point2>& pts) {
  ordered_json a = ordered_json::array();
  for (Point2 p : pts) a.push_back({p.x, p.y});
  return a;
}

ordered_json PolygonJson(const PolygonEnv& env) {
  ordered_json holes = ordered_json::array();
  for (const auto& h : env.holes) holes.push_back(PointsJson(h));
  return {{"outer", PointsJson(env.outer)}, {"holes", holes}};
}

std::vector<Point2> PointsFrom(const ordered_json& j, const char* what) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kBadParams, std::string(what) + " must be an array");
  }
  std::vector<Point2> pts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number()) {
      throw Error(ErrorCode::kBadParams,
                  std::string(what) + " entries must be [x, y]");
    }
    const Point2 q{p[0].get<double>(), p[1].get<double>()};
    if (!std::isfinite(q.x) || !std::isfinite(q.y)) {
      throw Error(ErrorCode::kBadParams, "non-finite coordinate");
    }
    pts.push_back(q);
  }
  return pts;
}

PolygonEnv PolygonFrom(const ordered_json& j) {
  if (!j.is_object() || !j.contains("outer")) {
    throw Error(ErrorCode::kBadParams, "polygon needs an outer ring");
  }
  std::vector<std::vector<Point2>> holes;
  if (j.contains("holes")) {
    for (const auto& h : j.at("holes")) holes.push_back(PointsFrom(h, "hole"));
  }
  return MakePolygon(PointsFrom(j.at("outer"), "outer"), std::move(holes));
}

double NumberFrom(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw Error(ErrorCode::kBadParams, std::string("missing number: ") + key);
  }
  return j.at(key).get<double>();
}

}  // namespace

std::string SerializeInstance(const InstanceFile& file) {
  const Instance& inst = file.instance;
  ordered_json j;
  j["format"] = "angcov-instance";
  j["version"] = kFormatVersion;
  j["variant"] = std::string(VariantName(inst.variant));
  j["alpha"] = inst.alpha;
  j["delta"] = inst.delta;
  if (inst.radius > 0.0) j["radius"] = inst.radius;
  j["sensors"] = PointsJson(inst.sensors);
  j["targets"] = PointsJson(inst.targets);
  if (inst.polygon) j["polygon"] = PolygonJson(*inst.polygon);
  if (inst.region) j["region"] = PolygonJson(*inst.region);
  j["seed"] = file.seed;
  if (!file.generator.empty()) j["generator"] = file.generator;
  return j.dump(1) + "\n";
}

InstanceFile ParseInstance(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kBadParams, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "angcov-instance") {
    throw Error(ErrorCode::kBadParams, "not an angcov instance file");
  }
  if (j.value("version", 0) != kFormatVersion) {
    throw Error(ErrorCode::kBadParams, "unsupported format version");
  }
  InstanceFile file;
  Instance& inst = file.instance;
  const auto variant = ParseVariant(j.value("variant", ""));
  if (!variant) throw Error(ErrorCode::kBadParams, "unknown variant");
  inst.variant = *variant;
  inst.alpha = NumberFrom(j, "alpha");
  inst.delta = NumberFrom(j, "delta");
  if (j.contains("radius")) inst.radius = NumberFrom(j, "radius");
  if (!j.contains("sensors") || !j.contains("targets")) {
    throw Error(ErrorCode::kBadParams, "sensors and targets are required");
  }
  inst.sensors = PointsFrom(j.at("sensors"), "sensors");
  inst.targets = PointsFrom(j.at("targets"), "targets");
  if (j.contains("polygon")) inst.polygon = PolygonFrom(j.at("polygon"));
  if (j.contains("region")) inst.region = PolygonFrom(j.at("region"));
  if (j.contains("seed")) file.seed = j.at("seed").get<std::uint64_t>();
  file.generator = j.value("generator", "");
  return file;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kBadParams, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kBadParams, "cannot write " + path);
  out << text;
}

std::string SerializeSolution(const Instance& inst, const Solution& sol) {
  ordered_json j;
  j["format"] = "angcov-solution";
  j["version"] = kFormatVersion;
  j["variant"] = std::string(VariantName(inst.variant));
  j["size"] = sol.selected.size();
  j["selected"] = sol.selected;
  j["seed_size"] = sol.seed_size;
  j["target_level"] = sol.target_level;
  j["achieved_level"] = sol.achieved_level;
  if (sol.distance_bound > 0.0) j["distance_bound"] = sol.distance_bound;
  ordered_json prov = ordered_json::array();
  for (const auto& [id, round] : sol.provenance) prov.push_back({id, round});
  j["provenance"] = prov;
  ordered_json rounds = ordered_json::array();
  for (const RoundLog& r : sol.rounds) {
    rounds.push_back({{"round", r.round},
                      {"eps", r.eps},
                      {"level", r.level},
                      {"uncovered", r.uncovered},
                      {"ranges", r.ranges},
                      {"hitting_size", r.hitting_size},
                      {"added", r.added}});
  }
  j["rounds"] = rounds;
  ordered_json wit = ordered_json::array();
  for (size_t t = 0; t < sol.witnesses.size(); ++t) {
    const Witness& w = sol.witnesses[t];
    wit.push_back({{"target", t},
                   {"pair", {w.s1, w.s2}},
                   {"angle", w.angle},
                   {"level", w.level},
                   {"distances", {w.d1, w.d2}}});
  }
  j["witnesses"] = wit;
  return j.dump(1) + "\n";
}

std::string SerializeSuppliers(const SupplierInstance& inst,
                               const SuppliersResult& result,
                               double search_radius, int budget) {
  ordered_json j;
  j["format"] = "angcov-suppliers";
  j["version"] = kFormatVersion;
  j["delta"] = inst.delta;
  if (budget > 0) j["budget"] = budget;
  j["radius"] = search_radius;
  j["cover_radius"] = result.cover_radius;
  j["size"] = result.selected.size();
  j["selected"] = result.selected;
  j["separated_clients"] = result.members;
  ordered_json dist = ordered_json::array();
  for (int v = 0; v < static_cast<int>(inst.clients.size()); ++v) {
    dist.push_back(DeltaDistance(inst, result.selected, v));
  }
  j["delta_distances"] = dist;
  return j.dump(1) + "\n";
}

std::vector<SensorId> ParseSelected(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    return j.at("selected").get<std::vector<SensorId>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kBadParams,
                std::string("invalid solution file: ") + e.what());
  }
}

SupplierInstance ToSupplierInstance(const Instance& inst) {
  SupplierInstance s;
  s.suppliers = inst.sensors;
  s.clients = inst.targets;
  s.delta = static_cast<int>(std::lround(inst.delta));
  return s;
}

}  // namespace angcov
