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

#include "coarsequant/core_quantile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coarsequant/error.hpp"

namespace coarsequant {
namespace {

void check_values(const std::vector<double>& values) {
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyInput, "a sample needs at least one value");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kNonFiniteValue,
                  "value at index " + std::to_string(i) + " is not finite");
    }
  }
}

void check_side_domain(const Rational& p, Side side) {
  if (side == Side::kLeft && (p <= 0 || p > 1)) {
    throw Error(ErrorCode::kDomainError,
                "left quantile needs p in (0, 1], got " + to_string(p));
  }
  if (side == Side::kRight && (p < 0 || p >= 1)) {
    throw Error(ErrorCode::kDomainError,
                "right quantile needs p in [0, 1), got " + to_string(p));
  }
}

void check_side_domain(double p, Side side) {
  const bool ok = side == Side::kLeft ? (p > 0.0 && p <= 1.0)
                                      : (p >= 0.0 && p < 1.0);
  if (!ok) {
    throw Error(ErrorCode::kDomainError,
                std::string(side == Side::kLeft ? "left quantile needs p in (0, 1]"
                                                : "right quantile needs p in [0, 1)") +
                    ", got " + std::to_string(p));
  }
}

// n * p with products that fall within 4 ulps of an integer snapped onto it.
double snapped_product(std::size_t n, double p) {
  const double x = static_cast<double>(n) * p;
  const double nearest = std::nearbyint(x);
  const double ulp =
      std::nextafter(std::abs(x), std::numeric_limits<double>::infinity()) -
      std::abs(x);
  return std::abs(x - nearest) <= 4.0 * ulp ? nearest : x;
}

}  // namespace

DataVector::DataVector(std::vector<double> values) : values_(std::move(values)) {
  check_values(values_);
}

SortedVector SortedVector::from_sorted(std::vector<double> values) {
  check_values(values);
  if (!std::is_sorted(values.begin(), values.end())) {
    throw Error(ErrorCode::kInvalidArgument, "values are not sorted");
  }
  return SortedVector(std::move(values));
}

SortedVector sort_vector(DataVector x) {
  std::vector<double> values = std::move(x).release();
  std::sort(values.begin(), values.end());
  return SortedVector(std::move(values));
}

const char* to_string(Side side) noexcept {
  return side == Side::kLeft ? "left" : "right";
}

QuantileQuery::QuantileQuery(Rational p, Side side)
    : p_(std::move(p)), side_(side) {
  check_side_domain(p_, side_);
}

std::size_t left_index(std::size_t n, const Rational& p) {
  check_side_domain(p, Side::kLeft);
  return static_cast<std::size_t>(
      ceil_product(static_cast<std::int64_t>(n), p));
}

std::size_t right_index(std::size_t n, const Rational& p) {
  check_side_domain(p, Side::kRight);
  return static_cast<std::size_t>(
             floor_product(static_cast<std::int64_t>(n), p)) +
         1;
}

std::size_t left_index(std::size_t n, double p) {
  check_side_domain(p, Side::kLeft);
  const auto h = static_cast<std::size_t>(std::ceil(snapped_product(n, p)));
  return std::clamp<std::size_t>(h, 1, n);
}

std::size_t right_index(std::size_t n, double p) {
  check_side_domain(p, Side::kRight);
  const auto h =
      static_cast<std::size_t>(std::floor(snapped_product(n, p))) + 1;
  return std::clamp<std::size_t>(h, 1, n);
}

double left_quantile(const SortedVector& y, const Rational& p) {
  return y.rank(left_index(y.size(), p));
}

double right_quantile(const SortedVector& y, const Rational& p) {
  return y.rank(right_index(y.size(), p));
}

double left_quantile(const SortedVector& y, double p) {
  return y.rank(left_index(y.size(), p));
}

double right_quantile(const SortedVector& y, double p) {
  return y.rank(right_index(y.size(), p));
}

double quantile(const SortedVector& y, const QuantileQuery& q) {
  return q.side() == Side::kLeft ? left_quantile(y, q.p())
                                 : right_quantile(y, q.p());
}

Rational PositionInfo::spos_lo() const {
  return make_rational(static_cast<std::int64_t>(min_index) - 1,
                       static_cast<std::int64_t>(n));
}

Rational PositionInfo::spos_hi() const {
  return make_rational(static_cast<std::int64_t>(max_index),
                       static_cast<std::int64_t>(n));
}

Rational PositionInfo::spos_midpoint() const {
  return (spos_lo() + spos_hi()) / 2;
}

bool PositionInfo::spos_contains(const Rational& p) const {
  return spos_lo() < p && p < spos_hi();
}

Rational PositionInfo::spos_displacement(const Rational& p) const {
  const Rational lo = spos_lo();
  const Rational hi = spos_hi();
  if (p < lo) return lo - p;
  if (p > hi) return p - hi;
  return Rational(0);
}

PositionInfo position_info(const SortedVector& y, double v) {
  const auto values = y.values();
  const auto first = std::lower_bound(values.begin(), values.end(), v);
  if (first == values.end() || *first != v) {
    throw Error(ErrorCode::kNotAnElement,
                "value " + std::to_string(v) + " does not occur in the sample");
  }
  const auto last = std::upper_bound(first, values.end(), v);
  PositionInfo info;
  info.min_index = static_cast<std::size_t>(first - values.begin()) + 1;
  info.max_index = static_cast<std::size_t>(last - values.begin());
  info.n = y.size();
  return info;
}

}  // namespace coarsequant
