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

#include <stdexcept>

namespace anglekit {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vector argument was (0, 0); angle measures are undefined for it.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

/// A coordinate was NaN or infinite.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// The cyclic oriented-angle sum did not land near an integer multiple of
/// 2*pi. Signals catastrophic float loss; callers should use the exact path.
class ResidualError : public Error {
 public:
  using Error::Error;
};

/// Two of the three triangle vertices coincide.
class DuplicatePointsError : public Error {
 public:
  using Error::Error;
};

/// The three vectors do not sum to zero, so they are not the side vectors
/// of a (possibly degenerate) triangle.
class NotClosedError : public Error {
 public:
  using Error::Error;
};

/// Both full-turn alternatives tested true at once. Unreachable for real
/// inputs; raised instead of silently preferring one alternative.
class InternalContradictionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rational literal, vector, or point list).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace anglekit
