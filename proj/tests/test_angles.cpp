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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "anglekit/angles.hpp"
#include "anglekit/harness.hpp"
#include "oracle.hpp"

using namespace anglekit;

namespace {

// Uniform double in [-1000, 1000).
double random_coord(SplitMix64& rng) {
  return -1000.0 + 2000.0 * static_cast<double>(rng.next() >> 11) * 0x1p-53;
}

FloatVec2 random_vec(SplitMix64& rng) {
  while (true) {
    FloatVec2 v{random_coord(rng), random_coord(rng)};
    if (v.x != 0.0 || v.y != 0.0) return v;
  }
}

// Vector with power-of-two magnitudes across nearly the whole double range.
FloatVec2 random_extreme_vec(SplitMix64& rng) {
  while (true) {
    const int e = static_cast<int>(rng.next_in(-1000, 990));
    FloatVec2 v{std::ldexp(random_coord(rng) / 1000.0, e),
                std::ldexp(random_coord(rng) / 1000.0, e)};
    if ((v.x != 0.0 || v.y != 0.0) && std::isfinite(v.x) && std::isfinite(v.y))
      return v;
  }
}

}  // namespace

TEST_CASE("oriented angle on axis-aligned inputs") {
  CHECK(oriented_angle({1, 0}, {0, 1}).rad() == kPi / 2);
  CHECK(oriented_angle({1, 0}, {1, 0}).rad() == 0.0);
  CHECK(oriented_angle({1, 0}, {0, -1}).rad() == 4.71238898038469);  // 3*pi/2
  CHECK(oriented_angle({2, 0}, {-3, 0}).rad() == kPi);
}

TEST_CASE("oriented angle is exact on the boundary set") {
  // Positively parallel inputs give exactly 0; antiparallel exactly pi.
  CHECK(oriented_angle({3, 4}, {6, 8}).rad() == 0.0);
  CHECK(oriented_angle({3, 4}, {-6, -8}).rad() == kPi);
  CHECK(oriented_angle({0, 2}, {0, 5}).rad() == 0.0);
  CHECK(oriented_angle({0, 2}, {0, -5}).rad() == kPi);
  CHECK(oriented_angle({-1, 0}, {-2, 0}).rad() == 0.0);
  // Reversal of an exactly-zero angle stays exactly zero.
  CHECK(oriented_angle({6, 8}, {3, 4}).rad() == 0.0);
  // A hair below the branch cut rounds across 2*pi and must come back as 0.
  CHECK(oriented_angle({1, 0}, {1, -1e-17}).rad() == 0.0);
}

TEST_CASE("turning angle basics") {
  CHECK(turning_angle({1, 0}, {0, -1}).rad() == kPi / 2);
  CHECK(turning_angle({1, 0}, {-1, 0}).rad() == kPi);
  CHECK(turning_angle({1, 0}, {1, 1}).rad() == 0.7853981633974483);  // pi/4
}

TEST_CASE("usual angle basics") {
  CHECK(usual_angle({1, 0}, {0, 1}).rad() == kPi / 2);
  CHECK(usual_angle({1, 2}, {2, 4}).rad() == 0.0);
  CHECK(usual_angle({3, 0}, {-3, 0}).rad() == kPi);
}

TEST_CASE("turning sums of the reference configurations") {
  CHECK(std::fabs(turning_sum({1, 0}, {0, 1}, {-1, -1}).rad() - kTwoPi) <=
        1e-12);
  CHECK(std::fabs(turning_sum({1, 0}, {0, 1}, {0, 1}).rad() - kPi) <= 1e-12);
  CHECK(turning_sum({1, 0}, {1, 0}, {1, 0}).rad() == 0.0);
}

TEST_CASE("full-turn multiples of the reference configurations") {
  CHECK(oriented_sum_multiple({1, 0}, {1, 0}, {1, 0}) == 0);
  CHECK(oriented_sum_multiple({1, 0}, {0, 1}, {-1, -1}) == 1);
  CHECK(oriented_sum_multiple({1, 0}, {0, -1}, {-1, 1}) == 2);
}

TEST_CASE("a residual tolerance below float noise trips the guard") {
  // This triple's cyclic sum misses 2*pi by a few ulps of rounding, which a
  // sane tolerance absorbs and an impossibly tight one must report.
  const FloatVec2 a{3, 1}, b{-2, 5}, c{-1, -7};
  CHECK_NOTHROW(oriented_sum_multiple(a, b, c));
  CHECK_THROWS_AS(oriented_sum_multiple(a, b, c, 1e-18), ResidualError);
}

TEST_CASE("invalid vectors are rejected") {
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(oriented_angle({0, 0}, {1, 0}), ZeroVectorError);
  CHECK_THROWS_AS(oriented_angle({1, 0}, {0, 0}), ZeroVectorError);
  CHECK_THROWS_AS(turning_angle({0, 0}, {1, 0}), ZeroVectorError);
  CHECK_THROWS_AS(usual_angle({1, 0}, {0, 0}), ZeroVectorError);
  CHECK_THROWS_AS(oriented_angle({inf, 0}, {1, 0}), NonFiniteError);
  CHECK_THROWS_AS(usual_angle({1, nan}, {1, 0}), NonFiniteError);
  CHECK_THROWS_AS(turning_sum({1, 0}, {0, 0}, {1, 1}), ZeroVectorError);
}

TEST_CASE("ranges hold on random and extreme inputs") {
  SplitMix64 rng(1);
  for (int i = 0; i < 5000; ++i) {
    const FloatVec2 a = i % 2 ? random_vec(rng) : random_extreme_vec(rng);
    const FloatVec2 b = i % 3 ? random_vec(rng) : random_extreme_vec(rng);
    const double oa = oriented_angle(a, b).rad();
    const double ta = turning_angle(a, b).rad();
    const double ua = usual_angle(a, b).rad();
    REQUIRE(oa >= 0.0);
    REQUIRE(oa < kTwoPi);
    REQUIRE(ta >= 0.0);
    REQUIRE(ta <= kPi);
    REQUIRE(ua >= 0.0);
    REQUIRE(ua <= kPi);
  }
}

TEST_CASE("reversal identity, with the exact-zero branch") {
  SplitMix64 rng(2);
  for (int i = 0; i < 5000; ++i) {
    const FloatVec2 a = random_vec(rng);
    const FloatVec2 b = random_vec(rng);
    const double ab = oriented_angle(a, b).rad();
    const double ba = oriented_angle(b, a).rad();
    if (ab > kAngleTol) {
      REQUIRE(std::fabs(ba - (kTwoPi - ab)) <= kAngleTol);
    }
  }
  // Exactly parallel pairs: both orders are exactly zero.
  SplitMix64 rng2(3);
  for (int i = 0; i < 200; ++i) {
    const double x = static_cast<double>(rng2.next_in(-1000, 1000));
    const double y = static_cast<double>(rng2.next_in(-1000, 1000));
    if (x == 0.0 && y == 0.0) continue;
    const FloatVec2 a{x, y};
    const FloatVec2 b{3 * x, 3 * y};  // small integers: products stay exact
    REQUIRE(oriented_angle(a, b).rad() == 0.0);
    REQUIRE(oriented_angle(b, a).rad() == 0.0);
  }
}

TEST_CASE("turning equals usual within tolerance") {
  SplitMix64 rng(4);
  for (int i = 0; i < 5000; ++i) {
    const FloatVec2 a = random_vec(rng);
    const FloatVec2 b = random_vec(rng);
    REQUIRE(std::fabs(turning_angle(a, b).rad() - usual_angle(a, b).rad()) <=
            kAngleTol);
  }
}

TEST_CASE("turning angle is symmetric bit-for-bit") {
  SplitMix64 rng(5);
  for (int i = 0; i < 5000; ++i) {
    const FloatVec2 a = i % 2 ? random_vec(rng) : random_extreme_vec(rng);
    const FloatVec2 b = random_vec(rng);
    REQUIRE(turning_angle(a, b).rad() == turning_angle(b, a).rad());
  }
}

TEST_CASE("positive scaling leaves all measures unchanged within tolerance") {
  SplitMix64 rng(6);
  for (int i = 0; i < 2000; ++i) {
    const FloatVec2 a = random_vec(rng);
    const FloatVec2 b = random_vec(rng);
    const double lambda =
        std::ldexp(1.0 + static_cast<double>(rng.next() >> 11) * 0x1p-53,
                   static_cast<int>(rng.next_in(-20, 20)));
    const double mu =
        std::ldexp(1.0 + static_cast<double>(rng.next() >> 11) * 0x1p-53,
                   static_cast<int>(rng.next_in(-20, 20)));
    const FloatVec2 la{lambda * a.x, lambda * a.y};
    const FloatVec2 mb{mu * b.x, mu * b.y};
    REQUIRE(std::fabs(oriented_angle(la, mb).rad() -
                      oriented_angle(a, b).rad()) <= kAngleTol);
    REQUIRE(std::fabs(turning_angle(la, mb).rad() -
                      turning_angle(a, b).rad()) <= kAngleTol);
    REQUIRE(std::fabs(usual_angle(la, mb).rad() - usual_angle(a, b).rad()) <=
            kAngleTol);
  }
}

TEST_CASE("a common rotation changes each measure by at most the tolerance") {
  SplitMix64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const FloatVec2 a = random_vec(rng);
    const FloatVec2 b = random_vec(rng);
    const double phi = static_cast<double>(rng.next() >> 11) * 0x1p-53 * kTwoPi;
    const double cs = std::cos(phi);
    const double sn = std::sin(phi);
    const auto rot = [&](FloatVec2 v) {
      return FloatVec2{cs * v.x - sn * v.y, sn * v.x + cs * v.y};
    };
    REQUIRE(oracle::circular_diff(oriented_angle(rot(a), rot(b)).rad(),
                                  oriented_angle(a, b).rad()) <= kAngleTol);
    REQUIRE(std::fabs(turning_angle(rot(a), rot(b)).rad() -
                      turning_angle(a, b).rad()) <= kAngleTol);
    REQUIRE(std::fabs(usual_angle(rot(a), rot(b)).rad() -
                      usual_angle(a, b).rad()) <= kAngleTol);
  }
}

TEST_CASE("implementation tracks the 256-bit reference") {
  SplitMix64 rng(8);
  for (int i = 0; i < 3000; ++i) {
    const FloatVec2 a = i % 2 ? random_vec(rng) : random_extreme_vec(rng);
    const FloatVec2 b = i % 3 ? random_vec(rng) : random_extreme_vec(rng);
    REQUIRE(oracle::circular_diff(oriented_angle(a, b).rad(),
                                  oracle::oriented_angle(a, b)) <= 1e-12);
    REQUIRE(std::fabs(turning_angle(a, b).rad() - oracle::turning_angle(a, b)) <=
            1e-12);
    REQUIRE(std::fabs(usual_angle(a, b).rad() - oracle::usual_angle(a, b)) <=
            1e-9);
  }
}

TEST_CASE("oriented-angle sum stays near a multiple of 2*pi") {
  SplitMix64 rng(9);
  for (int i = 0; i < 3000; ++i) {
    const FloatVec2 a = random_vec(rng);
    const FloatVec2 b = random_vec(rng);
    const FloatVec2 c = random_vec(rng);
    const int k = oriented_sum_multiple(a, b, c);
    REQUIRE(k >= 0);
    REQUIRE(k <= 2);
    REQUIRE(std::fabs(oriented_sum(a, b, c).rad() - k * kTwoPi) <= kResidualTol);
  }
}
