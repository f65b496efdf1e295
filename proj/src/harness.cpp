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

#include "anglekit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace anglekit {

const char* to_cstring(SampleMode m) {
  switch (m) {
    case SampleMode::UniformRational: return "uniform";
    case SampleMode::BoundaryExact: return "boundary";
    case SampleMode::NearCollinear: return "near-collinear";
    case SampleMode::ExtremeMagnitude: return "extreme";
    case SampleMode::ClosedTriple: return "closed";
  }
  return "?";
}

SampleMode parse_sample_mode(std::string_view name) {
  if (name == "uniform") return SampleMode::UniformRational;
  if (name == "boundary") return SampleMode::BoundaryExact;
  if (name == "near-collinear") return SampleMode::NearCollinear;
  if (name == "extreme") return SampleMode::ExtremeMagnitude;
  if (name == "closed") return SampleMode::ClosedTriple;
  throw std::invalid_argument("unknown sample mode: " + std::string(name));
}

void SampleSpec::validate() const {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  if (numerator_bound < 1 || denominator_bound < 1) {
    throw std::invalid_argument("coordinate bounds must be >= 1");
  }
}

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix(state_);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  // Fixed-point multiply; the O(2^-64) bias is irrelevant here and the
  // mapping stays platform-independent.
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next()) * bound) >> 64);
}

std::int64_t SplitMix64::next_in(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next_below(span));
}

namespace {

SplitMix64 sample_rng(const SampleSpec& spec, std::uint64_t index) {
  // An independent stream per (seed, index): rejection loops in one sample
  // never shift any other sample.
  return SplitMix64(SplitMix64::mix(spec.seed + 0x9E3779B97F4A7C15ULL) ^
                    SplitMix64::mix(index + 1));
}

Rational random_rational(SplitMix64& rng, const SampleSpec& spec) {
  const auto nb = static_cast<std::int64_t>(spec.numerator_bound);
  const std::int64_t num = rng.next_in(-nb, nb);
  const std::int64_t den =
      1 + static_cast<std::int64_t>(rng.next_below(spec.denominator_bound));
  return make_rational(num, den);
}

Rational random_nonzero_scalar(SplitMix64& rng, const SampleSpec& spec) {
  const auto nb = static_cast<std::int64_t>(spec.numerator_bound);
  const std::int64_t mag = 1 + static_cast<std::int64_t>(rng.next_below(
                                   static_cast<std::uint64_t>(nb)));
  const std::int64_t den =
      1 + static_cast<std::int64_t>(rng.next_below(spec.denominator_bound));
  const bool negative = rng.next_below(2) == 1;
  return make_rational(negative ? -mag : mag, den);
}

RationalVec2 random_vec(SplitMix64& rng, const SampleSpec& spec) {
  while (true) {
    RationalVec2 v{random_rational(rng, spec), random_rational(rng, spec)};
    if (!is_zero(v)) return v;
  }
}

RationalVec2 scaled(const RationalVec2& v, const Rational& s) {
  return {Rational(v.x * s), Rational(v.y * s)};
}

RationalVec2 perp(const RationalVec2& v) { return {Rational(-v.y), v.x}; }

RationalTriple uniform_triple(SplitMix64& rng, const SampleSpec& spec) {
  return {random_vec(rng, spec), random_vec(rng, spec),
          random_vec(rng, spec)};
}

// One cyclic pair exactly collinear: class Zero for a positive scale,
// class Pi for a negative one.
RationalTriple boundary_triple(SplitMix64& rng, const SampleSpec& spec) {
  const RationalVec2 u = random_vec(rng, spec);
  const RationalVec2 v = scaled(u, random_nonzero_scalar(rng, spec));
  const RationalVec2 w = random_vec(rng, spec);
  switch (rng.next_below(3)) {
    case 0: return {u, v, w};   // (a,b) collinear
    case 1: return {w, u, v};   // (b,c) collinear
    default: return {v, w, u};  // (c,a) collinear
  }
}

// A fully collinear triple with one vector nudged off the common line by
// eps in {+-1e-12, +-1e-9, +-1e-6}, applied exactly.
RationalTriple near_collinear_triple(SplitMix64& rng, const SampleSpec& spec) {
  const RationalVec2 u = random_vec(rng, spec);
  RationalTriple t{scaled(u, random_nonzero_scalar(rng, spec)),
                   scaled(u, random_nonzero_scalar(rng, spec)),
                   scaled(u, random_nonzero_scalar(rng, spec))};
  static const long kExponents[3] = {12, 9, 6};
  Rational eps = pow10(-kExponents[rng.next_below(3)]);
  if (rng.next_below(2) == 1) eps = -eps;
  const RationalVec2 nudge = scaled(perp(u), eps);
  RationalVec2* victim = nullptr;
  switch (rng.next_below(3)) {
    case 0: victim = &t.a; break;
    case 1: victim = &t.b; break;
    default: victim = &t.c; break;
  }
  victim->x += nudge.x;
  victim->y += nudge.y;
  return t;
}

RationalTriple extreme_triple(SplitMix64& rng, const SampleSpec& spec) {
  const auto wild = [&] {
    const RationalVec2 base = random_vec(rng, spec);
    return scaled(base, pow10(rng.next_in(-120, 120)));
  };
  return {wild(), wild(), wild()};
}

RationalTriple closed_triple(SplitMix64& rng, const SampleSpec& spec) {
  const RationalVec2 a = random_vec(rng, spec);
  while (true) {
    const RationalVec2 b = random_vec(rng, spec);
    RationalVec2 c{Rational(-(a.x + b.x)), Rational(-(a.y + b.y))};
    if (!is_zero(c)) return {a, b, c};
  }
}

}  // namespace

RationalTriple generate_triple(const SampleSpec& spec, std::uint64_t index) {
  SplitMix64 rng = sample_rng(spec, index);
  switch (spec.mode) {
    case SampleMode::UniformRational: return uniform_triple(rng, spec);
    case SampleMode::BoundaryExact: return boundary_triple(rng, spec);
    case SampleMode::NearCollinear: return near_collinear_triple(rng, spec);
    case SampleMode::ExtremeMagnitude: return extreme_triple(rng, spec);
    case SampleMode::ClosedTriple: return closed_triple(rng, spec);
  }
  throw std::invalid_argument("unknown sample mode");
}

namespace {

bool near_boundary(double oriented) {
  return std::min(oriented, kTwoPi - oriented) < kAngleTol ||
         std::fabs(oriented - kPi) < kAngleTol;
}

bool exact_boundary(OrientedClass c) {
  return c == OrientedClass::Zero || c == OrientedClass::Pi;
}

}  // namespace

std::optional<Disagreement> compare_case(const RationalVec2& a,
                                         const RationalVec2& b,
                                         const RationalVec2& c, double tol) {
  const OrientedClass ab = classify_oriented(a, b);
  const OrientedClass bc = classify_oriented(b, c);
  const OrientedClass ca = classify_oriented(c, a);
  const TripleAlternative alternative = combine_classes(ab, bc, ca);
  const bool exact = alternative != TripleAlternative::Neither;

  const FloatVec2 fa = to_float(a);
  const FloatVec2 fb = to_float(b);
  const FloatVec2 fc = to_float(c);
  const double sum = turning_sum(fa, fb, fc).rad();
  const bool floaty = std::fabs(sum - kTwoPi) <= tol;

  if (exact == floaty) return std::nullopt;

  Disagreement d;
  d.a = a;
  d.b = b;
  d.c = c;
  d.float_turning_sum = sum;
  d.exact_alternative = alternative;
  d.fragile = exact_boundary(ab) || exact_boundary(bc) || exact_boundary(ca) ||
              near_boundary(oriented_angle(fa, fb).rad()) ||
              near_boundary(oriented_angle(fb, fc).rad()) ||
              near_boundary(oriented_angle(fc, fa).rad());
  return d;
}

namespace {

struct PartialTally {
  std::uint64_t agreements = 0;
  std::uint64_t fragile = 0;
  std::vector<Disagreement> disagreements;
};

PartialTally run_range(const SampleSpec& spec, double tol, std::uint64_t lo,
                       std::uint64_t hi) {
  PartialTally tally;
  for (std::uint64_t i = lo; i < hi; ++i) {
    const RationalTriple t = generate_triple(spec, i);
    if (auto d = compare_case(t.a, t.b, t.c, tol)) {
      d->index = i;
      if (d->fragile) {
        ++tally.fragile;
      } else {
        tally.disagreements.push_back(std::move(*d));
      }
    } else {
      ++tally.agreements;
    }
  }
  return tally;
}

}  // namespace

HarnessReport run_campaign(const SampleSpec& spec, double tol,
                           unsigned threads) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();

  threads = std::max(1u, threads);
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, spec.count));

  std::vector<PartialTally> parts(threads);
  if (threads == 1) {
    parts[0] = run_range(spec, tol, 0, spec.count);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const std::uint64_t chunk = spec.count / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = (w + 1 == threads) ? spec.count : lo + chunk;
      workers.emplace_back(
          [&, w, lo, hi] { parts[w] = run_range(spec, tol, lo, hi); });
    }
    for (auto& worker : workers) worker.join();
  }

  HarnessReport report;
  report.total = spec.count;
  for (auto& part : parts) {
    report.agreements += part.agreements;
    report.fragile_excluded += part.fragile;
    // Ranges are contiguous and in order, so the merged list stays sorted
    // by sample index.
    report.disagreements.insert(report.disagreements.end(),
                                std::make_move_iterator(part.disagreements.begin()),
                                std::make_move_iterator(part.disagreements.end()));
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::string report_to_json(const HarnessReport& report, bool include_timing) {
  nlohmann::json j;
  j["total"] = report.total;
  j["agreements"] = report.agreements;
  j["fragile_excluded"] = report.fragile_excluded;
  j["disagreements"] = nlohmann::json::array();
  for (const Disagreement& d : report.disagreements) {
    j["disagreements"].push_back({
        {"index", d.index},
        {"a", {to_string(d.a.x), to_string(d.a.y)}},
        {"b", {to_string(d.b.x), to_string(d.b.y)}},
        {"c", {to_string(d.c.x), to_string(d.c.y)}},
        {"float_turning_sum", d.float_turning_sum},
        {"exact_alternative", to_cstring(d.exact_alternative)},
        {"fragile", d.fragile},
    });
  }
  j["elapsed_ms"] = include_timing ? report.elapsed_ms : 0;
  return j.dump(2) + "\n";
}

}  // namespace anglekit
