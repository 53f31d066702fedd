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

#ifndef COARSEQUANT_RATIONAL_HPP_
#define COARSEQUANT_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace coarsequant {

// Exact arithmetic for probabilities and error bounds. Bounds are compared
// against realized losses with <=, so they never pass through a float.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

// Parses a plain decimal literal ("0.95", "1", ".5", "2.5e-3") into the exact
// rational it denotes. Throws Error(kParseError) on anything else.
Rational parse_decimal(std::string_view text);

double to_double(const Rational& r);

// "num/den", or just "num" for integers.
std::string to_string(const Rational& r);

// floor(n * p) and ceil(n * p) for non-negative p, computed exactly.
std::int64_t floor_product(std::int64_t n, const Rational& p);
std::int64_t ceil_product(std::int64_t n, const Rational& p);

}  // namespace coarsequant

#endif  // COARSEQUANT_RATIONAL_HPP_
