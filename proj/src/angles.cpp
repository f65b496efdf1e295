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

#include "anglekit/angles.hpp"

#include <algorithm>
#include <cmath>

namespace anglekit {

namespace {

void require_valid(FloatVec2 v) {
  if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
    throw NonFiniteError("vector coordinate is not finite");
  }
  if (v.x == 0.0 && v.y == 0.0) {
    throw ZeroVectorError("zero vector passed to angle operation");
  }
}

// Rescale so max(|x|, |y|) lands in [1, 2). Power-of-two scaling is exact,
// so collinearity, signs, and the angle itself are preserved bit-for-bit
// while products of coordinates can no longer overflow or underflow.
FloatVec2 rescaled(FloatVec2 v) {
  const int e = std::ilogb(std::max(std::fabs(v.x), std::fabs(v.y)));
  return {std::ldexp(v.x, -e), std::ldexp(v.y, -e)};
}

bool lex_less(FloatVec2 u, FloatVec2 v) {
  if (u.x != v.x) return u.x < v.x;
  return u.y < v.y;
}

}  // namespace

Radians oriented_angle(FloatVec2 a, FloatVec2 b) {
  require_valid(a);
  require_valid(b);
  const FloatVec2 u = rescaled(a);
  const FloatVec2 v = rescaled(b);
  // b/a = (dot + i*cross) / |a|^2, so atan2(cross, dot) is the argument of
  // b/a in (-pi, pi]. For exactly collinear inputs cross is exactly +-0.0
  // (the two products round identically), which atan2 maps to 0 or pi.
  const double cross = u.x * v.y - u.y * v.x;
  const double dot = u.x * v.x + u.y * v.y;
  double t = std::atan2(cross, dot);
  if (t < 0.0) t += kTwoPi;
  if (t == 0.0) t = 0.0;     // collapse -0.0
  if (t >= kTwoPi) t = 0.0;  // t + 2*pi can round up to exactly 2*pi
  return Radians{t};
}

Radians turning_angle(FloatVec2 a, FloatVec2 b) {
  // One canonical evaluation order makes turning_angle(a,b) and
  // turning_angle(b,a) the same float computation.
  const double t = lex_less(b, a) ? oriented_angle(b, a).rad()
                                  : oriented_angle(a, b).rad();
  return Radians{std::min(t, kTwoPi - t)};
}

Radians usual_angle(FloatVec2 a, FloatVec2 b) {
  require_valid(a);
  require_valid(b);
  const FloatVec2 u = rescaled(a);
  const FloatVec2 v = rescaled(b);
  const double cross = u.x * v.y - u.y * v.x;
  const double dot = u.x * v.x + u.y * v.y;
  if (cross == 0.0) {
    // Exactly collinear. arccos of the rounded ratio would be off by up to
    // ~sqrt(ulp) here; the boundary value itself is exact.
    return Radians{dot > 0.0 ? 0.0 : kPi};
  }
  const double ratio = dot / (std::hypot(u.x, u.y) * std::hypot(v.x, v.y));
  return Radians{std::acos(std::clamp(ratio, -1.0, 1.0))};
}

Radians turning_sum(FloatVec2 a, FloatVec2 b, FloatVec2 c) {
  return turning_angle(a, b) + turning_angle(b, c) + turning_angle(c, a);
}

Radians oriented_sum(FloatVec2 a, FloatVec2 b, FloatVec2 c) {
  return oriented_angle(a, b) + oriented_angle(b, c) + oriented_angle(c, a);
}

int oriented_sum_multiple(FloatVec2 a, FloatVec2 b, FloatVec2 c,
                          double residual_tol) {
  const double s = oriented_sum(a, b, c).rad();
  const long k = std::lround(s / kTwoPi);
  const double residual = std::fabs(s - static_cast<double>(k) * kTwoPi);
  if (k < 0 || k > 2 || residual > residual_tol) {
    throw ResidualError("oriented-angle sum is not near a multiple of 2*pi");
  }
  return static_cast<int>(k);
}

}  // namespace anglekit
