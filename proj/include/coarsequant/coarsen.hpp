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

#ifndef COARSEQUANT_COARSEN_HPP_
#define COARSEQUANT_COARSEN_HPP_

#include <cstddef>

#include "coarsequant/core_quantile.hpp"
#include "coarsequant/rational.hpp"

namespace coarsequant {

// Keeps every d-th order statistic. With n = c*d + r (0 <= r < d) the result
// is (y_d, y_2d, ..., y_(c-1)d), of length c - 1; the top d + r elements are
// dropped. Throws kInvalidFactor if d < 1 and kTooShort if n < 2d.
SortedVector coarsen(const SortedVector& y, std::size_t d);

// Worst-case DOS, measured in y, between a left quantile read off the
// coarsened vector C_{n/n1}(y) and the exact left quantile: 1/n + 1/n1.
// Requires n1 >= 2 dividing n; throws kInvalidFactor otherwise.
Rational coarse_quantile_loss_bound(std::size_t n, std::size_t n1);

}  // namespace coarsequant

#endif  // COARSEQUANT_COARSEN_HPP_
