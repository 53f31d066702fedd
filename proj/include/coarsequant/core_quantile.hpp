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

// Exact empirical quantiles of a finite sample.
//
// Two quantile functions are provided. For a sample with empirical
// distribution F:
//
//   left quantile   lq(p) = inf { x : F(x) >= p },  p in (0, 1]
//   right quantile  rq(p) = sup { x : F(x) <= p },  p in [0, 1)
//
// On a sorted sample y_1 <= ... <= y_n they are order statistics,
// lq(p) = y_ceil(np) and rq(p) = y_(floor(np) + 1). Nothing is interpolated.
// lq(0) and rq(1) are infinite and therefore rejected.

#ifndef COARSEQUANT_CORE_QUANTILE_HPP_
#define COARSEQUANT_CORE_QUANTILE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "coarsequant/rational.hpp"

namespace coarsequant {

// A non-empty sample of finite values, in arbitrary order.
class DataVector {
 public:
  // Throws kEmptyInput or kNonFiniteValue.
  explicit DataVector(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

  std::vector<double> release() && { return std::move(values_); }

 private:
  std::vector<double> values_;
};

// A non-empty, non-decreasing sample of finite values.
class SortedVector {
 public:
  // Adopts data that is already sorted (e.g. a coarsened vector). Throws
  // kInvalidArgument if it is not, plus the DataVector errors.
  static SortedVector from_sorted(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

  // 1-based order statistic y_i.
  double rank(std::size_t i) const { return values_[i - 1]; }

  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }

  friend bool operator==(const SortedVector&, const SortedVector&) = default;

 private:
  friend SortedVector sort_vector(DataVector x);
  explicit SortedVector(std::vector<double> values)
      : values_(std::move(values)) {}

  std::vector<double> values_;
};

SortedVector sort_vector(DataVector x);

enum class Side { kLeft, kRight };

const char* to_string(Side side) noexcept;

// A probability together with the quantile convention to apply. The
// constructor enforces the side's domain: (0, 1] for Left, [0, 1) for Right.
class QuantileQuery {
 public:
  QuantileQuery(Rational p, Side side);

  const Rational& p() const noexcept { return p_; }
  Side side() const noexcept { return side_; }

 private:
  Rational p_;
  Side side_;
};

// 1-based index h of the order statistic selected by each convention for a
// sample of size n. Throw kDomainError outside the side's domain.
std::size_t left_index(std::size_t n, const Rational& p);
std::size_t right_index(std::size_t n, const Rational& p);

// Binary-float variants. When n * p lands within 4 ulps of an integer it is
// snapped to that integer before rounding, so that e.g. p = 0.3, n = 10
// selects h = 3 and not 4.
std::size_t left_index(std::size_t n, double p);
std::size_t right_index(std::size_t n, double p);

double left_quantile(const SortedVector& y, const Rational& p);
double right_quantile(const SortedVector& y, const Rational& p);
double left_quantile(const SortedVector& y, double p);
double right_quantile(const SortedVector& y, double p);
double quantile(const SortedVector& y, const QuantileQuery& q);

// Where a value sits in a sorted sample: its first and last 1-based index
// and the standardized position ((min_index - 1) / n, max_index / n), the
// open interval of p at which it is both the left and the right quantile.
struct PositionInfo {
  std::size_t min_index = 0;
  std::size_t max_index = 0;
  std::size_t n = 0;

  std::size_t multiplicity() const noexcept {
    return max_index - min_index + 1;
  }
  Rational spos_lo() const;
  Rational spos_hi() const;
  Rational spos_midpoint() const;
  // True iff p lies strictly inside the standardized position.
  bool spos_contains(const Rational& p) const;
  // Distance from p to the closed interval [spos_lo, spos_hi]; zero when p
  // is inside it.
  Rational spos_displacement(const Rational& p) const;
};

// Throws kNotAnElement if v does not occur in y.
PositionInfo position_info(const SortedVector& y, double v);

}  // namespace coarsequant

#endif  // COARSEQUANT_CORE_QUANTILE_HPP_
