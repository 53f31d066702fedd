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

#include "coarsequant/summary.hpp"

#include <algorithm>
#include <string>

#include "coarsequant/bounds.hpp"
#include "coarsequant/coarsen.hpp"
#include "coarsequant/error.hpp"

namespace coarsequant {

PartitionSummary::PartitionSummary(SortedVector values, std::size_t d,
                                   std::size_t c, std::size_t r, std::size_t l)
    : values_(std::move(values)), d_(d), c_(c), r_(r), l_(l) {
  if (d_ < 1 || c_ < 2 || r_ >= d_ || l_ != c_ * d_ + r_ ||
      values_.size() != c_ - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "inconsistent summary metadata d=" + std::to_string(d_) +
                    " c=" + std::to_string(c_) + " r=" + std::to_string(r_) +
                    " l=" + std::to_string(l_) +
                    " values=" + std::to_string(values_.size()));
  }
}

PartitionSummary summarize_partition(DataVector x, std::size_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidFactor, "stride d must be >= 1");
  const std::size_t l = x.size();
  if (l < 2 * d) {
    throw Error(ErrorCode::kTooShort,
                "partition of length " + std::to_string(l) +
                    " is shorter than 2d=" + std::to_string(2 * d));
  }
  const SortedVector y = sort_vector(std::move(x));
  return PartitionSummary(coarsen(y, d), d, l / d, l % d, l);
}

MergedSummary merge_summaries(std::span<const PartitionSummary> parts) {
  if (parts.size() < 2) {
    throw Error(ErrorCode::kTooFew,
                "merging needs at least two partitions, got " +
                    std::to_string(parts.size()));
  }
  const std::size_t d = parts.front().d();
  std::size_t C = 0;
  std::size_t R = 0;
  std::size_t n = 0;
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.d() != d) {
      throw Error(ErrorCode::kMixedStride,
                  "partitions were coarsened with d=" + std::to_string(d) +
                      " and d=" + std::to_string(p.d()));
    }
    C += p.c();
    R += p.r();
    n += p.l();
    total += p.values().size();
  }
  std::vector<double> w;
  w.reserve(total);
  for (const auto& p : parts) {
    const auto v = p.values().values();
    w.insert(w.end(), v.begin(), v.end());
  }
  std::sort(w.begin(), w.end());
  return MergedSummary(SortedVector::from_sorted(std::move(w)), parts.size(),
                       C, R, n, d);
}

double approximate_quantile(const MergedSummary& s, const QuantileQuery& q) {
  const SortedVector& w = s.w();
  const std::size_t n_prime = w.size();
  const std::size_t h = q.side() == Side::kRight
                            ? right_index(n_prime, q.p())
                            : left_index(n_prime, q.p());
  return w.rank(std::clamp<std::size_t>(h, 1, n_prime));
}

const char* to_string(BoundAssumption a) noexcept {
  return a == BoundAssumption::kExactDivisible ? "exact-divisible"
                                               : "generalized-coarsening";
}

BoundReport error_bound(const MergedSummary& s) {
  const auto m = static_cast<std::int64_t>(s.m());
  const auto C = static_cast<std::int64_t>(s.C());
  const auto R = static_cast<std::int64_t>(s.R());
  const auto d = static_cast<std::int64_t>(s.d());
  BoundReport report;
  report.epsilon_core = make_rational(m + 1, C - m);
  report.epsilon_remainder = make_rational(R, R + C * d);
  report.epsilon_missing = 0;
  report.epsilon = report.epsilon_core + report.epsilon_remainder;
  report.assumption = R == 0 ? BoundAssumption::kExactDivisible
                             : BoundAssumption::kGeneralizedCoarsening;
  return report;
}

BoundReport widen_for_missing(BoundReport report, std::size_t n_summarized,
                              std::size_t n_missing) {
  report.epsilon_missing =
      missing_data_bound(static_cast<std::int64_t>(n_summarized),
                         static_cast<std::int64_t>(n_missing));
  report.epsilon = report.epsilon_core + report.epsilon_remainder +
                   report.epsilon_missing;
  return report;
}

}  // namespace coarsequant
