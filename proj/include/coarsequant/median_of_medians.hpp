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

// The median-of-medians estimator, and a family of inputs on which it lands
// near the first quartile however many or however long the partitions are.

#ifndef COARSEQUANT_MEDIAN_OF_MEDIANS_HPP_
#define COARSEQUANT_MEDIAN_OF_MEDIANS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "coarsequant/core_quantile.hpp"

namespace coarsequant {

// Left median of the per-partition left medians. Throws kEmptyInput when
// parts is empty.
double median_of_medians(std::span<const DataVector> parts);

// m = 2a + 1 partitions of length 2b + 1: a + 1 copies of
// (1, 2, ..., b + 1, big x b) followed by a copies of (big x (2b + 1)).
// The true median is big; the median of medians is b + 1.
// Throws kInvalidArgument unless a >= 1, b >= 1 and big > b + 1.
std::vector<DataVector> counterexample(std::int64_t a, std::int64_t b,
                                       double big = 1e6);

// Position of the median of medians within all of the data.
PositionInfo mom_diagnostic(std::span<const DataVector> parts);

// Every value of parts, sorted.
SortedVector stack_sorted(std::span<const DataVector> parts);

}  // namespace coarsequant

#endif  // COARSEQUANT_MEDIAN_OF_MEDIANS_HPP_
