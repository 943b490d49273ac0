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

#include "angcov/render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "angcov/error.h"

namespace angcov {
namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

class Canvas {
 public:
  Canvas(double min_x, double min_y, double max_x, double max_y, double width)
      : min_x_(min_x), max_y_(max_y) {
    const double w = std::max(max_x - min_x, 1e-9);
    scale_ = width / w;
    width_ = width;
    height_ = std::max(max_y - min_y, 1e-9) * scale_;
  }

  double X(double x) const { return (x - min_x_) * scale_; }
  double Y(double y) const { return (max_y_ - y) * scale_; }
  double width() const { return width_; }
  double height() const { return height_; }

  std::string Points(const std::vector<Point2>& pts) const {
    std::string s;
    for (Point2 p : pts) {
      if (!s.empty()) s += ' ';
      s += Num(X(p.x)) + "," + Num(Y(p.y));
    }
    return s;
  }

 private:
  double min_x_, max_y_, scale_, width_, height_;
};

}  // namespace

std::string RenderSvg(const Instance& inst, std::span<const SensorId> selected,
                      const RenderOptions& options) {
  std::vector<Point2> all = inst.sensors;
  all.insert(all.end(), inst.targets.begin(), inst.targets.end());
  if (inst.polygon) {
    all.insert(all.end(), inst.polygon->outer.begin(), inst.polygon->outer.end());
  }
  if (all.empty()) all.push_back({0, 0});
  double min_x = all[0].x, max_x = all[0].x, min_y = all[0].y, max_y = all[0].y;
  for (Point2 p : all) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double pad = 0.05 * std::max({max_x - min_x, max_y - min_y, 1.0});
  const Canvas c(min_x - pad, min_y - pad, max_x + pad, max_y + pad,
                 options.width_px);
  const double dot = std::max(2.0, options.width_px / 250.0);

  std::string svg =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
      Num(c.width()) + "\" height=\"" + Num(c.height()) + "\" viewBox=\"0 0 " +
      Num(c.width()) + " " + Num(c.height()) + "\">\n";
  svg += "<title>angcov " + std::string(VariantName(inst.variant)) +
         " instance</title>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + Num(c.width()) + "\" height=\"" +
         Num(c.height()) + "\" fill=\"white\"/>\n";
  if (inst.polygon) {
    svg += "<g id=\"polygon\">\n<polygon points=\"" +
           c.Points(inst.polygon->outer) +
           "\" fill=\"#eef2f5\" stroke=\"#445\" stroke-width=\"1\"/>\n";
    for (const auto& hole : inst.polygon->holes) {
      svg += "<polygon points=\"" + c.Points(hole) +
             "\" fill=\"white\" stroke=\"#445\" stroke-width=\"1\"/>\n";
    }
    svg += "</g>\n";
  }

  if (options.focus) {
    const TargetId t = *options.focus;
    if (t < 0 || t >= static_cast<TargetId>(inst.targets.size())) {
      throw Error(ErrorCode::kBadParams, "focus target out of range");
    }
    const std::optional<VisibilityTable> vis = MakeVisibility(inst);
    const Eligibility rule =
        MakeEligibility(inst, inst.radius, vis ? &*vis : nullptr);
    const Witness w =
        BestWitness(inst.sensors, selected, inst.targets[t], t, rule);
    svg += "<g id=\"witness\">\n";
    if (w.s1 >= 0) {
      const Point2 tp = inst.targets[t];
      const DoubleWedge dw = MakeDoubleWedge(
          tp, inst.sensors[w.s1], std::max(0.0, options.level.value_or(inst.alpha)));
      const double reach = 2.0 * std::max(max_x - min_x, max_y - min_y) + 1.0;
      for (double side : {0.0, kPi}) {
        std::vector<Point2> fan = {tp};
        for (int k = 0; k <= 24; ++k) {
          const double a = dw.axis + side - dw.half_width + dw.width() * k / 24;
          fan.push_back(tp + reach * Point2{std::cos(a), std::sin(a)});
        }
        svg += "<polygon points=\"" + c.Points(fan) +
               "\" fill=\"#f5c542\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
      }
      for (SensorId s : {w.s1, w.s2}) {
        svg += "<line x1=\"" + Num(c.X(tp.x)) + "\" y1=\"" + Num(c.Y(tp.y)) +
               "\" x2=\"" + Num(c.X(inst.sensors[s].x)) + "\" y2=\"" +
               Num(c.Y(inst.sensors[s].y)) +
               "\" stroke=\"#c77d00\" stroke-width=\"1.5\"/>\n";
      }
    }
    svg += "</g>\n";
  }

  std::vector<char> chosen(inst.sensors.size(), 0);
  for (SensorId s : selected) {
    if (s >= 0 && s < static_cast<SensorId>(chosen.size())) chosen[s] = 1;
  }
  svg += "<g id=\"sensors\">\n";
  for (SensorId s = 0; s < static_cast<SensorId>(inst.sensors.size()); ++s) {
    const Point2 p = inst.sensors[s];
    svg += "<circle cx=\"" + Num(c.X(p.x)) + "\" cy=\"" + Num(c.Y(p.y)) +
           "\" r=\"" + Num(chosen[s] ? 1.8 * dot : dot) + "\" fill=\"" +
           (chosen[s] ? "#1f5fbf" : "#9aa3ad") + "\"/>\n";
  }
  svg += "</g>\n<g id=\"targets\">\n";
  for (Point2 p : inst.targets) {
    svg += "<rect x=\"" + Num(c.X(p.x) - dot) + "\" y=\"" + Num(c.Y(p.y) - dot) +
           "\" width=\"" + Num(2 * dot) + "\" height=\"" + Num(2 * dot) +
           "\" fill=\"#c0392b\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace angcov
