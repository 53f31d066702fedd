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

#include "coarsequant/coarsen.hpp"

#include <string>
#include <vector>

#include "coarsequant/error.hpp"

namespace coarsequant {

SortedVector coarsen(const SortedVector& y, std::size_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidFactor, "stride d must be >= 1");
  const std::size_t n = y.size();
  if (n < 2 * d) {
    throw Error(ErrorCode::kTooShort,
                "coarsening by d=" + std::to_string(d) + " needs at least " +
                    std::to_string(2 * d) + " values, got " +
                    std::to_string(n));
  }
  const std::size_t kept = n / d - 1;
  std::vector<double> out;
  out.reserve(kept);
  for (std::size_t i = 1; i <= kept; ++i) out.push_back(y.rank(i * d));
  return SortedVector::from_sorted(std::move(out));
}

Rational coarse_quantile_loss_bound(std::size_t n, std::size_t n1) {
  if (n1 < 2 || n % n1 != 0) {
    throw Error(ErrorCode::kInvalidFactor,
                "n1 must be >= 2 and divide n (n=" + std::to_string(n) +
                    ", n1=" + std::to_string(n1) + ")");
  }
  return make_rational(1, static_cast<std::int64_t>(n)) +
         make_rational(1, static_cast<std::int64_t>(n1));
}

}  // namespace coarsequant
