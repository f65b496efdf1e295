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

#include "anglekit/triangle.hpp"

namespace anglekit {

namespace {

void require_distinct(bool p01, bool p12, bool p20) {
  if (p01 || p12 || p20) {
    throw DuplicatePointsError("triangle vertices must be pairwise distinct");
  }
}

void require_distinct(Point2 p0, Point2 p1, Point2 p2) {
  require_distinct(p0.x == p1.x && p0.y == p1.y,
                   p1.x == p2.x && p1.y == p2.y,
                   p2.x == p0.x && p2.y == p0.y);
}

}  // namespace

SideVectors side_vectors(Point2 p0, Point2 p1, Point2 p2) {
  require_distinct(p0, p1, p2);
  return {{p1.x - p0.x, p1.y - p0.y},
          {p2.x - p1.x, p2.y - p1.y},
          {p0.x - p2.x, p0.y - p2.y}};
}

RationalSideVectors side_vectors(const RationalPoint2& p0,
                                 const RationalPoint2& p1,
                                 const RationalPoint2& p2) {
  require_distinct(p0.x == p1.x && p0.y == p1.y,
                   p1.x == p2.x && p1.y == p2.y,
                   p2.x == p0.x && p2.y == p0.y);
  return {{Rational(p1.x - p0.x), Rational(p1.y - p0.y)},
          {Rational(p2.x - p1.x), Rational(p2.y - p1.y)},
          {Rational(p0.x - p2.x), Rational(p0.y - p2.y)}};
}

TriangleAngles interior_angles(Point2 p0, Point2 p1, Point2 p2) {
  require_distinct(p0, p1, p2);
  // Vertex indices are cyclic mod 3: the angle at p_i opens between
  // p_{i-1} - p_i and p_{i+1} - p_i.
  const auto vertex_angle = [](Point2 prev, Point2 at, Point2 next) {
    return usual_angle({prev.x - at.x, prev.y - at.y},
                       {next.x - at.x, next.y - at.y});
  };
  return {vertex_angle(p2, p0, p1), vertex_angle(p0, p1, p2),
          vertex_angle(p1, p2, p0)};
}

Radians triangle_angle_sum(Point2 p0, Point2 p1, Point2 p2) {
  return interior_angles(p0, p1, p2).sum();
}

EqualCross equal_cross_check(const RationalVec2& a, const RationalVec2& b,
                             const RationalVec2& c) {
  if (a.x + b.x + c.x != 0 || a.y + b.y + c.y != 0) {
    throw NotClosedError("vectors do not sum to zero");
  }
  if (is_zero(a) || is_zero(b) || is_zero(c)) {
    throw ZeroVectorError("zero vector in closed triple");
  }
  const Rational ab = cross_q(a, b);
  const Rational bc = cross_q(b, c);
  const Rational ca = cross_q(c, a);
  return {ab == bc && bc == ca, ab};
}

}  // namespace anglekit
