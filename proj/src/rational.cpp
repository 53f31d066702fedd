// Copyright 2026 The coarsequant Authors
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

#include "coarsequant/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "coarsequant/error.hpp"

namespace coarsequant {
namespace {

constexpr int kMaxExponent = 400;

[[noreturn]] void bad_decimal(std::string_view text) {
  throw Error(ErrorCode::kParseError,
              "not a decimal number: '" + std::string(text) + "'");
}

BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kInvalidArgument, "integer overflow");
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  BigInt digits = 0;
  int frac_digits = 0;
  bool any_digit = false;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits = digits * 10 + (text[i] - '0');
    any_digit = true;
    ++i;
  }
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits = digits * 10 + (text[i] - '0');
      ++frac_digits;
      any_digit = true;
      ++i;
    }
  }
  if (!any_digit) bad_decimal(text);
  int exponent = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    const char* first = text.data() + i;
    if (i < n && text[i] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + n, exponent);
    if (ec != std::errc() || ptr == first) bad_decimal(text);
    i = static_cast<std::size_t>(ptr - text.data());
    if (std::abs(exponent) > kMaxExponent) bad_decimal(text);
  }
  if (i != n) bad_decimal(text);

  const int scale = exponent - frac_digits;
  Rational r = scale >= 0 ? Rational(digits * pow10(scale))
                          : Rational(digits, pow10(-scale));
  return negative ? Rational(-r) : r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t floor_product(std::int64_t n, const Rational& p) {
  const BigInt num = BigInt(n) * boost::multiprecision::numerator(p);
  const BigInt den = boost::multiprecision::denominator(p);
  // Only called with n*p >= 0, where truncation is floor.
  return to_int64(num / den);
}

std::int64_t ceil_product(std::int64_t n, const Rational& p) {
  const BigInt num = BigInt(n) * boost::multiprecision::numerator(p);
  const BigInt den = boost::multiprecision::denominator(p);
  return to_int64((num + den - 1) / den);
}

}  // namespace coarsequant
