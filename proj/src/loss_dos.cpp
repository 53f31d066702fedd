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

#include "coarsequant/loss_dos.hpp"

#include <algorithm>
#include <cmath>

#include "coarsequant/error.hpp"

namespace coarsequant {
namespace {

void check_finite(double z) {
  if (!std::isfinite(z)) {
    throw Error(ErrorCode::kNonFiniteValue, "DOS arguments must be finite");
  }
}

}  // namespace

Rational DosValue::rational() const {
  return make_rational(static_cast<std::int64_t>(count),
                       static_cast<std::int64_t>(n));
}

DosValue dos(const SortedVector& y, double z, double z2) {
  check_finite(z);
  check_finite(z2);
  const double lo = std::min(z, z2);
  const double hi = std::max(z, z2);
  DosValue out;
  out.n = y.size();
  if (lo == hi) return out;
  // Strictly between: values equal to either endpoint never count.
  const auto values = y.values();
  const auto begin = std::upper_bound(values.begin(), values.end(), lo);
  const auto end = std::lower_bound(begin, values.end(), hi);
  out.count = static_cast<std::size_t>(end - begin);
  return out;
}

std::size_t multiplicity(const SortedVector& y, double z) {
  check_finite(z);
  const auto values = y.values();
  const auto [first, last] = std::equal_range(values.begin(), values.end(), z);
  return static_cast<std::size_t>(last - first);
}

}  // namespace coarsequant
