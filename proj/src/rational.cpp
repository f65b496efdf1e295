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

#include "anglekit/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <charconv>
#include <string>

namespace anglekit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Strips one leading '+' or '-'; returns -1 or +1.
int take_sign(std::string_view& s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    const int sign = s.front() == '-' ? -1 : 1;
    s.remove_prefix(1);
    return sign;
  }
  return 1;
}

[[noreturn]] void bad(std::string_view text, const char* why) {
  throw ParseError("bad rational literal \"" + std::string(text) + "\": " + why);
}

Rational parse_fraction(std::string_view text) {
  std::string_view rest = text;
  const int sign = take_sign(rest);
  const auto slash = rest.find('/');
  std::string_view num = rest.substr(0, slash);
  std::string_view den = rest.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) bad(text, "expected digits/digits");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) bad(text, "zero denominator");
  if (sign < 0) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// [sign] digits ['.' digits] [(e|E) [sign] digits], converted exactly.
Rational parse_decimal(std::string_view text) {
  std::string_view rest = text;
  const int sign = take_sign(rest);

  long exponent = 0;
  const auto epos = rest.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view etext = rest.substr(epos + 1);
    rest = rest.substr(0, epos);
    const int esign = take_sign(etext);
    if (!all_digits(etext)) bad(text, "malformed exponent");
    const auto [ptr, ec] =
        std::from_chars(etext.data(), etext.data() + etext.size(), exponent);
    if (ec != std::errc() || ptr != etext.data() + etext.size() ||
        exponent > 1'000'000) {
      bad(text, "exponent out of range");
    }
    exponent *= esign;
  }

  std::string digits;
  long frac_digits = 0;
  const auto dot = rest.find('.');
  if (dot != std::string_view::npos) {
    const std::string_view ip = rest.substr(0, dot);
    const std::string_view fp = rest.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad(text, "no digits");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
      bad(text, "expected decimal digits");
    }
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(rest)) bad(text, "expected decimal digits");
    digits = std::string(rest);
  }
  if (digits.empty()) bad(text, "no digits");

  mpz_class mant(digits, 10);
  if (sign < 0) mant = -mant;
  Rational q(mant);
  q *= pow10(exponent - frac_digits);
  q.canonicalize();
  return q;
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParseError("zero denominator");
  Rational q(mpz_class(static_cast<long>(num)),
             mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      bad(text, "whitespace not allowed");
    }
  }
  if (text.find('/') != std::string_view::npos) return parse_fraction(text);
  return parse_decimal(text);
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double_nearest(const Rational& q) {
  // mpq_get_d truncates toward zero; go through a 53-bit mpfr value with the
  // double's exponent range so the result is correctly rounded, subnormals
  // included.
  const mpfr_exp_t old_emin = mpfr_get_emin();
  const mpfr_exp_t old_emax = mpfr_get_emax();
  mpfr_set_emin(-1073);
  mpfr_set_emax(1024);
  mpfr_t t;
  mpfr_init2(t, 53);
  int inex = mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  mpfr_subnormalize(t, inex, MPFR_RNDN);
  const double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  mpfr_set_emin(old_emin);
  mpfr_set_emax(old_emax);
  return d;
}

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) {
    Rational q(mpz_class(1), p);
    q.canonicalize();
    return q;
  }
  return Rational(p);
}

}  // namespace anglekit
