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
/// Exact, transcendental-free predicates over rational coordinates.
///
/// The key fact: whether the three pairwise turning angles of nonzero
/// vectors a, b, c sum to exactly 2*pi depends only on where each oriented
/// angle sits relative to the boundary set {0, pi}, and that position is
/// decided exactly by the signs of cross and dot products. No angle is ever
/// evaluated numerically on this path.

#pragma once

#include "anglekit/angles.hpp"
#include "anglekit/rational.hpp"

namespace anglekit {

struct RationalVec2 {
  Rational x;
  Rational y;
};

bool is_zero(const RationalVec2& v);

/// Exact position of an oriented angle relative to {0, pi}:
///
///   Zero       cross = 0, dot > 0   (angle exactly 0)
///   Open0Pi    cross > 0            (angle strictly between 0 and pi)
///   Pi         cross = 0, dot < 0   (angle exactly pi)
///   OpenPi2Pi  cross < 0            (angle strictly between pi and 2*pi)
///
/// For nonzero vectors cross = dot = 0 is impossible, so the four tags
/// cover every input.
enum class OrientedClass { Zero, Open0Pi, Pi, OpenPi2Pi };

/// Outcome of the full-turn test for a vector triple:
///   AlternativeI   all oriented angles <= pi, at least one nonzero
///   AlternativeII  all oriented angles >= pi
///   Neither        the turning-angle sum differs from 2*pi
/// The two alternatives are mutually exclusive: both holding would force all
/// three oriented angles to equal pi, and the cyclic sum 3*pi is not a
/// multiple of 2*pi.
enum class TripleAlternative { AlternativeI, AlternativeII, Neither };

const char* to_cstring(OrientedClass c);
const char* to_cstring(TripleAlternative t);

/// a.x*b.y - a.y*b.x, exactly. Its sign is the sign of sin of the oriented
/// angle from a to b.
Rational cross_q(const RationalVec2& a, const RationalVec2& b);

/// a.x*b.x + a.y*b.y, exactly. Its sign is the sign of cos of the angle.
Rational dot_q(const RationalVec2& a, const RationalVec2& b);

/// Classifies the oriented angle from a to b against {0, pi} by sign tests
/// alone. Throws ZeroVectorError if either input is (0, 0).
OrientedClass classify_oriented(const RationalVec2& a, const RationalVec2& b);

/// Combines the three pairwise classes into the triple alternative. Throws
/// InternalContradictionError if both alternatives test true, which no
/// class triple produced by real vectors can reach.
TripleAlternative combine_classes(OrientedClass ab, OrientedClass bc,
                                  OrientedClass ca);

/// classify_oriented on the cyclic pairs (a,b), (b,c), (c,a), combined.
TripleAlternative classify_triple(const RationalVec2& a, const RationalVec2& b,
                                  const RationalVec2& c);

/// Exact decision of the transcendental equality
///   turning(a,b) + turning(b,c) + turning(c,a) = 2*pi,
/// true iff classify_triple is not Neither.
bool turning_sum_is_two_pi(const RationalVec2& a, const RationalVec2& b,
                           const RationalVec2& c);

/// Per-coordinate nearest-double conversion.
FloatVec2 to_float(const RationalVec2& v);

/// Exact conversion in the other direction; every finite double is rational.
RationalVec2 to_rational(FloatVec2 v);

}  // namespace anglekit
