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
/// Differential fuzzing of the float full-turn test against the exact
/// predicate.
///
/// Every sample is generated from rational coordinates, decided exactly by
/// turning_sum_is_two_pi, converted to doubles by correctly-rounded
/// division, and re-decided by |turning_sum - 2*pi| <= tol. A mismatch on an
/// input whose angles sit exactly or nearly on the boundary set {0, pi} is
/// "fragile": floats cannot resolve a measure-zero boundary, so fragile
/// mismatches are counted but do not fail a campaign.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anglekit/exact.hpp"

namespace anglekit {

enum class SampleMode {
  UniformRational,   // independent bounded rational coordinates
  BoundaryExact,     // one pair of vectors exactly collinear
  NearCollinear,     // collinear triple, one vector nudged by a rational eps
  ExtremeMagnitude,  // per-vector scales across many decades
  ClosedTriple,      // a + b + c = 0 exactly
};

const char* to_cstring(SampleMode m);
SampleMode parse_sample_mode(std::string_view name);

struct SampleSpec {
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
  SampleMode mode = SampleMode::UniformRational;
  // Coordinates are p/q with |p| <= numerator_bound, 1 <= q <= denominator_bound.
  std::uint64_t numerator_bound = 1'000'000;
  std::uint64_t denominator_bound = 1'000;

  void validate() const;  // throws std::invalid_argument
};

/// splitmix64 (Steele, Lea, Flood): a tiny, fully specified generator, so
/// sample streams reproduce bit-for-bit on every platform. Each sample index
/// gets its own stream, which keeps generation random-access and makes
/// sharded campaigns identical to sequential ones.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);
  /// Uniform in [lo, hi], inclusive.
  std::int64_t next_in(std::int64_t lo, std::int64_t hi);

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

struct RationalTriple {
  RationalVec2 a;
  RationalVec2 b;
  RationalVec2 c;
};

/// Deterministic function of (spec.seed, spec.mode, bounds, index); all
/// returned vectors are nonzero.
RationalTriple generate_triple(const SampleSpec& spec, std::uint64_t index);

struct Disagreement {
  std::uint64_t index = 0;
  RationalVec2 a;
  RationalVec2 b;
  RationalVec2 c;
  double float_turning_sum = 0.0;
  TripleAlternative exact_alternative = TripleAlternative::Neither;
  bool fragile = false;
};

/// Runs both decision paths on one triple. Returns nullopt when they agree,
/// otherwise the disagreement with its fragility flag: fragile iff some
/// exact class is Zero or Pi, or some float oriented angle is within
/// kAngleTol of {0, pi}.
std::optional<Disagreement> compare_case(const RationalVec2& a,
                                         const RationalVec2& b,
                                         const RationalVec2& c,
                                         double tol = kAngleTol);

struct HarnessReport {
  std::uint64_t total = 0;
  std::uint64_t agreements = 0;
  std::uint64_t fragile_excluded = 0;           // fragile disagreements
  std::vector<Disagreement> disagreements;      // non-fragile, by index
  std::int64_t elapsed_ms = 0;

  bool passing() const { return disagreements.empty(); }
};

/// Aggregates compare_case over all generated samples. The report satisfies
/// total = agreements + fragile_excluded + disagreements.size() exactly and
/// is identical for identical (spec, tol) regardless of threads; only
/// elapsed_ms varies run to run.
HarnessReport run_campaign(const SampleSpec& spec, double tol = kAngleTol,
                           unsigned threads = 1);

/// JSON form of a report: total, agreements, fragile_excluded,
/// disagreements[] (coordinates as rational strings, float sum, exact
/// alternative, fragile flag, sample index), elapsed_ms. Pass
/// include_timing = false to write elapsed_ms as 0 for byte-stable
/// comparison of two runs.
std::string report_to_json(const HarnessReport& report,
                           bool include_timing = true);

}  // namespace anglekit
