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

#include "coarsequant/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coarsequant/error.hpp"

namespace coarsequant {

Rational missing_data_bound(std::int64_t n, std::int64_t n_star) {
  if (n < 0 || n_star < 0) {
    throw Error(ErrorCode::kNegativeCount, "counts must be non-negative");
  }
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  return make_rational(n_star, n + n_star);
}

Rational contaminated_data_bound(std::int64_t n, std::int64_t n_star) {
  if (n < 0 || n_star < 0) {
    throw Error(ErrorCode::kNegativeCount, "counts must be non-negative");
  }
  if (n_star >= n) {
    throw Error(ErrorCode::kContaminationExceedsData,
                "n_star=" + std::to_string(n_star) +
                    " must be smaller than n=" + std::to_string(n));
  }
  return make_rational(n_star, n - n_star);
}

Rational truncated_run_bound(std::int64_t l, std::int64_t m, std::int64_t r,
                             std::int64_t c) {
  if (m < 2 || c < 2 || l < c || l % c != 0 || r < 0 || r >= l) {
    throw Error(ErrorCode::kInvalidArgument,
                "truncated_run_bound needs m >= 2, c >= 2, c | l, 0 <= r < l");
  }
  return make_rational(m + 1, m - 1) * make_rational(1, c - 1) +
         make_rational(r, l * m + r);
}

double interval_sup_distance(double a, double b, double c, double d) {
  if (a > b || c > d) {
    throw Error(ErrorCode::kDegenerateInterval,
                "intervals must satisfy a <= b and c <= d");
  }
  return std::max(std::abs(a - d), std::abs(b - c));
}

std::int64_t plan_parameters(const Rational& target_epsilon, std::int64_t m) {
  if (target_epsilon <= 0 || m < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "plan_parameters needs target_epsilon > 0 and m >= 2");
  }
  // (m + 1) / ((m - 1)(c - 1)) <= eps  <=>  c - 1 >= (m + 1) / ((m - 1) eps)
  const Rational need = make_rational(m + 1, m - 1) / target_epsilon;
  const BigInt num = boost::multiprecision::numerator(need);
  const BigInt den = boost::multiprecision::denominator(need);
  const BigInt c = std::max<BigInt>((num + den - 1) / den + 1, BigInt(2));
  if (c > (BigInt(1) << 62)) {
    throw Error(ErrorCode::kUnachievable,
                "target epsilon " + to_string(target_epsilon) +
                    " needs c beyond 2^62");
  }
  return c.convert_to<std::int64_t>();
}

}  // namespace coarsequant
