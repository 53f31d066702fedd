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

// Standalone error bounds that compose with the summary guarantee. All
// results are exact rationals; bounds are probabilities, i.e. DOS values.

#ifndef COARSEQUANT_BOUNDS_HPP_
#define COARSEQUANT_BOUNDS_HPP_

#include <cstdint>

#include "coarsequant/rational.hpp"

namespace coarsequant {

// A p-quantile of n observed values is a p'-quantile of the same values
// plus n_star more, for some |p' - p| < n_star / (n + n_star).
// Throws kNegativeCount for negative counts, kInvalidArgument for n < 1.
Rational missing_data_bound(std::int64_t n, std::int64_t n_star);

// Dropping the last n_star of n values moves the quantile level by at most
// n_star / (n - n_star). Throws kContaminationExceedsData if n_star >= n.
Rational contaminated_data_bound(std::int64_t n, std::int64_t n_star);

// m equal partitions of length l = c*d summarized, r further values left
// out: (m + 1) / (m - 1) * 1 / (c - 1) + r / (l m + r).
// Throws kInvalidArgument unless m >= 2, c >= 2, c divides l, 0 <= r < l.
Rational truncated_run_bound(std::int64_t l, std::int64_t m, std::int64_t r,
                             std::int64_t c);

// sup { |p - q| : p in [a, b], q in [c, d] } = max(|a - d|, |b - c|).
// Throws kDegenerateInterval if a > b or c > d.
double interval_sup_distance(double a, double b, double c, double d);

// Smallest c >= 2 with (m + 1) / ((m - 1)(c - 1)) <= target_epsilon, i.e.
// the per-partition coarsened length needed for m equal partitions.
// Throws kInvalidArgument for target_epsilon <= 0 or m < 2, and
// kUnachievable if c would exceed 2^62.
std::int64_t plan_parameters(const Rational& target_epsilon, std::int64_t m);

}  // namespace coarsequant

#endif  // COARSEQUANT_BOUNDS_HPP_
