// Copyright 2026 The Anglekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anglekit/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace anglekit {

void RenderOptions::validate() const {
  if (!(canvas_size > 0.0)) {
    throw std::invalid_argument("canvas size must be positive");
  }
  if (!(arc_radii[0] < arc_radii[1] && arc_radii[1] < arc_radii[2])) {
    throw std::invalid_argument("arc radii must be strictly increasing");
  }
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Direction of v in [0, 2*pi).
double direction(FloatVec2 v) {
  double d = std::atan2(v.y, v.x);
  if (d < 0.0) d += kTwoPi;
  if (d >= kTwoPi) d = 0.0;
  return d;
}

// Canvas coordinates: y grows downward, so flip the mathematical y.
struct Canvas {
  double center;

  double px(double x) const { return center + x; }
  double py(double y) const { return center - y; }
  double arc_x(double radius, double angle) const {
    return px(radius * std::cos(angle));
  }
  double arc_y(double radius, double angle) const {
    return py(radius * std::sin(angle));
  }
};

// Shared sweep of two circular arcs [s1, s1+t1) and [s2, s2+t2).
double arc_overlap(double s1, double t1, double s2, double t2) {
  double overlap = 0.0;
  for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
    const double lo = std::max(s1, s2 + shift);
    const double hi = std::min(s1 + t1, s2 + shift + t2);
    overlap += std::max(0.0, hi - lo);
  }
  return overlap;
}

}  // namespace

std::string render_triple_svg(FloatVec2 a, FloatVec2 b, FloatVec2 c,
                              const RenderOptions& opts) {
  opts.validate();

  // Oriented angles and directions; this also validates the vectors.
  const double sweep[3] = {oriented_angle(a, b).rad(),
                           oriented_angle(b, c).rad(),
                           oriented_angle(c, a).rad()};
  const double from[3] = {direction(a), direction(b), direction(c)};
  static const char* const kLabels[3] = {"\xCE\xB8(a,b)", "\xCE\xB8(b,c)",
                                         "\xCE\xB8(c,a)"};

  const Canvas canvas{opts.canvas_size / 2.0};

  const FloatVec2 vectors[3] = {a, b, c};
  const double longest = std::max({std::hypot(a.x, a.y), std::hypot(b.x, b.y),
                                   std::hypot(c.x, c.y)});
  const double scale = 0.40 * opts.canvas_size / longest;

  bool show_labels = opts.labels == ArcLabels::Always;
  if (opts.labels == ArcLabels::Auto) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        worst = std::max(worst, arc_overlap(from[i], sweep[i], from[j], sweep[j]));
      }
    }
    show_labels = worst <= opts.label_overlap_threshold;
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fmt(opts.canvas_size) << "\" height=\"" << fmt(opts.canvas_size)
      << "\" viewBox=\"0 0 " << fmt(opts.canvas_size) << " "
      << fmt(opts.canvas_size) << "\">\n";

  for (const FloatVec2& v : vectors) {
    out << "<line x1=\"" << fmt(canvas.px(0.0)) << "\" y1=\""
        << fmt(canvas.py(0.0)) << "\" x2=\"" << fmt(canvas.px(v.x * scale))
        << "\" y2=\"" << fmt(canvas.py(v.y * scale))
        << "\" stroke=\"black\" stroke-width=\""
        << fmt(opts.vector_stroke_width) << "\"/>\n";
  }

  for (int i = 0; i < 3; ++i) {
    const double r = opts.arc_radii[static_cast<std::size_t>(i)];
    const double end = from[i] + sweep[i];
    // Counterclockwise in mathematical coordinates is the 0 sweep direction
    // once y is flipped; the large-arc flag encodes sweep > pi.
    const int large_arc = sweep[i] > kPi ? 1 : 0;
    out << "<path d=\"M " << fmt(canvas.arc_x(r, from[i])) << " "
        << fmt(canvas.arc_y(r, from[i])) << " A " << fmt(r) << " " << fmt(r)
        << " 0 " << large_arc << " 0 " << fmt(canvas.arc_x(r, end)) << " "
        << fmt(canvas.arc_y(r, end)) << "\" fill=\"none\" stroke=\""
        << opts.arc_colors[static_cast<std::size_t>(i)]
        << "\" stroke-width=\"" << fmt(opts.arc_stroke_width) << "\"/>\n";
  }

  if (show_labels) {
    for (int i = 0; i < 3; ++i) {
      const double r = opts.arc_radii[static_cast<std::size_t>(i)] + 14.0;
      const double mid = from[i] + sweep[i] / 2.0;
      out << "<text x=\"" << fmt(canvas.arc_x(r, mid)) << "\" y=\""
          << fmt(canvas.arc_y(r, mid)) << "\" fill=\""
          << opts.arc_colors[static_cast<std::size_t>(i)]
          << "\" font-family=\"sans-serif\" font-size=\"14\" "
             "text-anchor=\"middle\">"
          << kLabels[i] << "</text>\n";
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace anglekit
