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

#pragma once

#include <array>
#include <string>

#include "anglekit/angles.hpp"

namespace anglekit {

enum class ArcLabels { Auto, Always, Never };

struct RenderOptions {
  double canvas_size = 480.0;  // square canvas, pixels
  // Three distinct radii keep overlapping arcs readable.
  std::array<double, 3> arc_radii{70.0, 95.0, 120.0};
  std::array<std::string, 3> arc_colors{"red", "green", "blue"};
  double vector_stroke_width = 2.0;
  double arc_stroke_width = 2.5;
  ArcLabels labels = ArcLabels::Auto;
  // In Auto mode labels are dropped once two arcs share more than this much
  // sweep, in radians.
  double label_overlap_threshold = 0.5;

  void validate() const;  // throws std::invalid_argument
};

/// A standalone SVG 1.1 document: the three vectors as line segments from a
/// common origin (scaled to fit the canvas), then one counterclockwise arc
/// per oriented angle, in pair order (a,b), (b,c), (c,a), optionally
/// labelled. All numbers use fixed 6-decimal formatting; identical inputs
/// produce identical bytes.
std::string render_triple_svg(FloatVec2 a, FloatVec2 b, FloatVec2 c,
                              const RenderOptions& opts = {});

}  // namespace anglekit
