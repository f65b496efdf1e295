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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "anglekit/errors.hpp"

namespace anglekit {

/// Exact rational scalar: arbitrary precision, kept in canonical form
/// (reduced, positive denominator) through all arithmetic.
using Rational = mpq_class;

/// Rational from an integer pair; the sign moves to the numerator and the
/// fraction is reduced. den must be nonzero.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q" with an optional leading sign, or a decimal literal such as
/// "-2.5", ".25", or "1e-12", converted exactly. No whitespace anywhere.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& q);

/// The double nearest to q (round to nearest, ties to even), with subnormals
/// and overflow handled. Every finite double round-trips exactly.
double to_double_nearest(const Rational& q);

/// Exact power of ten, e may be negative.
Rational pow10(long e);

}  // namespace anglekit
