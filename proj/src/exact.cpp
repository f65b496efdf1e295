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

#include "anglekit/exact.hpp"

#include <cmath>

namespace anglekit {

bool is_zero(const RationalVec2& v) { return v.x == 0 && v.y == 0; }

const char* to_cstring(OrientedClass c) {
  switch (c) {
    case OrientedClass::Zero: return "zero";
    case OrientedClass::Open0Pi: return "open-0-pi";
    case OrientedClass::Pi: return "pi";
    case OrientedClass::OpenPi2Pi: return "open-pi-2pi";
  }
  return "?";
}

const char* to_cstring(TripleAlternative t) {
  switch (t) {
    case TripleAlternative::AlternativeI: return "I";
    case TripleAlternative::AlternativeII: return "II";
    case TripleAlternative::Neither: return "neither";
  }
  return "?";
}

Rational cross_q(const RationalVec2& a, const RationalVec2& b) {
  return Rational(a.x * b.y - a.y * b.x);
}

Rational dot_q(const RationalVec2& a, const RationalVec2& b) {
  return Rational(a.x * b.x + a.y * b.y);
}

OrientedClass classify_oriented(const RationalVec2& a, const RationalVec2& b) {
  if (is_zero(a) || is_zero(b)) {
    throw ZeroVectorError("zero vector passed to classify_oriented");
  }
  const int cross_sign = sgn(cross_q(a, b));
  if (cross_sign > 0) return OrientedClass::Open0Pi;
  if (cross_sign < 0) return OrientedClass::OpenPi2Pi;
  // Collinear; the dot sign separates 0 from pi and cannot be zero here.
  return sgn(dot_q(a, b)) > 0 ? OrientedClass::Zero : OrientedClass::Pi;
}

TripleAlternative combine_classes(OrientedClass ab, OrientedClass bc,
                                  OrientedClass ca) {
  const auto above_pi = [](OrientedClass c) {
    return c == OrientedClass::OpenPi2Pi;
  };
  const auto at_least_pi = [](OrientedClass c) {
    return c == OrientedClass::Pi || c == OrientedClass::OpenPi2Pi;
  };
  const bool all_zero = ab == OrientedClass::Zero &&
                        bc == OrientedClass::Zero && ca == OrientedClass::Zero;
  // I: 0 < max <= pi, i.e. none above pi and not all exactly zero.
  const bool alternative1 =
      !above_pi(ab) && !above_pi(bc) && !above_pi(ca) && !all_zero;
  // II: min >= pi.
  const bool alternative2 =
      at_least_pi(ab) && at_least_pi(bc) && at_least_pi(ca);
  if (alternative1 && alternative2) {
    throw InternalContradictionError(
        "both full-turn alternatives hold; impossible for nonzero vectors");
  }
  if (alternative1) return TripleAlternative::AlternativeI;
  if (alternative2) return TripleAlternative::AlternativeII;
  return TripleAlternative::Neither;
}

TripleAlternative classify_triple(const RationalVec2& a, const RationalVec2& b,
                                  const RationalVec2& c) {
  return combine_classes(classify_oriented(a, b), classify_oriented(b, c),
                         classify_oriented(c, a));
}

bool turning_sum_is_two_pi(const RationalVec2& a, const RationalVec2& b,
                           const RationalVec2& c) {
  return classify_triple(a, b, c) != TripleAlternative::Neither;
}

FloatVec2 to_float(const RationalVec2& v) {
  return {to_double_nearest(v.x), to_double_nearest(v.y)};
}

RationalVec2 to_rational(FloatVec2 v) {
  if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
    throw NonFiniteError("cannot convert non-finite coordinates exactly");
  }
  return {Rational(v.x), Rational(v.y)};
}

}  // namespace anglekit
