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

#include "coarsequant/median_of_medians.hpp"

#include <algorithm>
#include <string>

#include "coarsequant/error.hpp"

namespace coarsequant {

double median_of_medians(std::span<const DataVector> parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::kEmptyInput, "median of medians needs a partition");
  }
  const Rational half = make_rational(1, 2);
  std::vector<double> medians;
  medians.reserve(parts.size());
  for (const auto& part : parts) {
    std::vector<double> v(part.values().begin(), part.values().end());
    medians.push_back(
        left_quantile(sort_vector(DataVector(std::move(v))), half));
  }
  return left_quantile(sort_vector(DataVector(std::move(medians))), half);
}

std::vector<DataVector> counterexample(std::int64_t a, std::int64_t b,
                                       double big) {
  if (a < 1 || b < 1 || !(big > static_cast<double>(b + 1))) {
    throw Error(ErrorCode::kInvalidArgument,
                "counterexample needs a >= 1, b >= 1 and big > b + 1");
  }
  const auto len = static_cast<std::size_t>(2 * b + 1);
  std::vector<double> mixed;
  mixed.reserve(len);
  for (std::int64_t i = 1; i <= b + 1; ++i) {
    mixed.push_back(static_cast<double>(i));
  }
  mixed.resize(len, big);
  const std::vector<double> flat(len, big);

  std::vector<DataVector> parts;
  parts.reserve(static_cast<std::size_t>(2 * a + 1));
  for (std::int64_t i = 0; i < a + 1; ++i) parts.emplace_back(mixed);
  for (std::int64_t i = 0; i < a; ++i) parts.emplace_back(flat);
  return parts;
}

SortedVector stack_sorted(std::span<const DataVector> parts) {
  std::vector<double> all;
  for (const auto& part : parts) {
    all.insert(all.end(), part.values().begin(), part.values().end());
  }
  return sort_vector(DataVector(std::move(all)));
}

PositionInfo mom_diagnostic(std::span<const DataVector> parts) {
  const double mom = median_of_medians(parts);
  return position_info(stack_sorted(parts), mom);
}

}  // namespace coarsequant
