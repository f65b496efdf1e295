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

/// \file
/// Double-precision angle measures between nonzero planar vectors.
///
/// Three measures are provided:
///   - oriented_angle: counterclockwise angle from a to b, in [0, 2*pi)
///   - turning_angle:  min(oriented, 2*pi - oriented), in [0, pi]
///   - usual_angle:    arccos of the normalized dot product, in [0, pi]
/// The turning and usual angles agree mathematically; computing both gives a
/// cheap internal consistency check.

#pragma once

#include <numbers>

#include "anglekit/errors.hpp"

namespace anglekit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default tolerance for comparing float angle values, in radians.
inline constexpr double kAngleTol = 1e-9;
/// Tolerance for the residual of the cyclic oriented-angle sum against the
/// nearest multiple of 2*pi.
inline constexpr double kResidualTol = 1e-6;

struct FloatVec2 {
  double x{0.0};
  double y{0.0};
};

/// Angle value in radians. Producers guarantee the range: [0, 2*pi) for
/// oriented angles, [0, pi] for turning and usual angles.
struct Radians {
  double value{0.0};

  constexpr Radians() = default;
  constexpr explicit Radians(double radians) : value(radians) {}

  constexpr double rad() const noexcept { return value; }

  friend constexpr auto operator<=>(Radians, Radians) = default;
  friend constexpr Radians operator+(Radians l, Radians r) {
    return Radians{l.value + r.value};
  }
  friend constexpr Radians operator-(Radians l, Radians r) {
    return Radians{l.value - r.value};
  }
};

/// Counterclockwise angle from a to b, normalized into [0, 2*pi).
/// Exactly 0.0 for positively parallel inputs and exactly pi (its nearest
/// double) for antiparallel inputs; never returns 2*pi.
/// Throws ZeroVectorError / NonFiniteError on invalid input.
Radians oriented_angle(FloatVec2 a, FloatVec2 b);

/// min(oriented_angle(a, b), 2*pi - oriented_angle(a, b)), in [0, pi].
/// Symmetric in its arguments bit-for-bit: the oriented angle is evaluated
/// once, for the lexicographically smaller argument order.
Radians turning_angle(FloatVec2 a, FloatVec2 b);

/// arccos(a.b / (|a| |b|)), in [0, pi]. The cosine is clamped to [-1, 1]
/// before arccos; exactly collinear inputs short-circuit to 0 or pi.
Radians usual_angle(FloatVec2 a, FloatVec2 b);

/// turning_angle(a,b) + turning_angle(b,c) + turning_angle(c,a), in [0, 3*pi].
Radians turning_sum(FloatVec2 a, FloatVec2 b, FloatVec2 c);

/// oriented_angle(a,b) + oriented_angle(b,c) + oriented_angle(c,a).
/// The exact value of this cyclic sum is always 0, 2*pi, or 4*pi.
Radians oriented_sum(FloatVec2 a, FloatVec2 b, FloatVec2 c);

/// The integer k in {0, 1, 2} with oriented_sum ~= 2*pi*k. Throws
/// ResidualError if the sum is farther than residual_tol from every multiple.
int oriented_sum_multiple(FloatVec2 a, FloatVec2 b, FloatVec2 c,
                          double residual_tol = kResidualTol);

}  // namespace anglekit
