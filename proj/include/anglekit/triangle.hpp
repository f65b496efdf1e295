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
/// Triangle machinery: side vectors, interior angles, and the exact
/// equal-cross identity for closed triples.
///
/// Collinear-but-distinct vertices are accepted; they yield the degenerate
/// interior angles (0, pi, 0), whose sum is still pi.

#pragma once

#include "anglekit/angles.hpp"
#include "anglekit/exact.hpp"

namespace anglekit {

struct Point2 {
  double x{0.0};
  double y{0.0};
};

struct RationalPoint2 {
  Rational x;
  Rational y;
};

/// Interior angles at vertices p0, p1, p2, each in [0, pi].
struct TriangleAngles {
  Radians alpha0;
  Radians alpha1;
  Radians alpha2;

  Radians sum() const { return alpha0 + alpha1 + alpha2; }
};

struct SideVectors {
  FloatVec2 a;  // p1 - p0
  FloatVec2 b;  // p2 - p1
  FloatVec2 c;  // p0 - p2
};

struct RationalSideVectors {
  RationalVec2 a;
  RationalVec2 b;
  RationalVec2 c;
};

/// (p1-p0, p2-p1, p0-p2). Throws DuplicatePointsError if two points
/// coincide; each returned vector is then nonzero. On the rational overload
/// the three results sum to the zero vector exactly.
SideVectors side_vectors(Point2 p0, Point2 p1, Point2 p2);
RationalSideVectors side_vectors(const RationalPoint2& p0,
                                 const RationalPoint2& p1,
                                 const RationalPoint2& p2);

/// The usual angle at each vertex: alpha_i is measured at p_i between the
/// two other vertices (indices cyclic mod 3).
TriangleAngles interior_angles(Point2 p0, Point2 p1, Point2 p2);

/// alpha0 + alpha1 + alpha2. Equals pi for every valid input, degenerate
/// collinear triangles included.
Radians triangle_angle_sum(Point2 p0, Point2 p1, Point2 p2);

struct EqualCross {
  bool equal;       // always true for closed nonzero triples
  Rational common;  // the shared cross value: twice the signed triangle area
};

/// For a closed triple (a + b + c = 0, all nonzero) checks, exactly, that
/// cross(a,b) = cross(b,c) = cross(c,a). This is the algebraic reason the
/// sines of the three oriented angles share one sign. Throws NotClosedError
/// if the triple does not sum to zero.
EqualCross equal_cross_check(const RationalVec2& a, const RationalVec2& b,
                             const RationalVec2& c);

}  // namespace anglekit
