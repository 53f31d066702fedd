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

// The d-coarsening quantile summary.
//
// Each partition x^i (length l_i) is sorted and d-coarsened independently,
// keeping c_i - 1 values where c_i = floor(l_i / d). The kept values of all
// m partitions are stacked and sorted into w (length C - m, C = sum c_i), and
// a quantile of w stands in for the quantile of the full data. Whatever the
// arrangement of the data, the answer mu satisfies
//
//   dos_x(mu, q_x(p)) <= (m + 1) / (C - m) + R / (R + C d),
//
// with R = sum (l_i - c_i d) the elements that do not fill a whole stride.

#ifndef COARSEQUANT_SUMMARY_HPP_
#define COARSEQUANT_SUMMARY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "coarsequant/core_quantile.hpp"
#include "coarsequant/rational.hpp"

namespace coarsequant {

// One partition after sort + d-coarsening. Immutable.
class PartitionSummary {
 public:
  // Rebuilds a summary from its parts (e.g. when read back from disk).
  // Throws kInvalidArgument unless l == c*d + r, 0 <= r < d, c >= 2 and
  // values.size() == c - 1.
  PartitionSummary(SortedVector values, std::size_t d, std::size_t c,
                   std::size_t r, std::size_t l);

  const SortedVector& values() const noexcept { return values_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t c() const noexcept { return c_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t l() const noexcept { return l_; }

  friend bool operator==(const PartitionSummary&,
                         const PartitionSummary&) = default;

 private:
  SortedVector values_;
  std::size_t d_;
  std::size_t c_;
  std::size_t r_;
  std::size_t l_;
};

// Sorts x and keeps every d-th order statistic. Throws kInvalidFactor if
// d < 1 and kTooShort if x has fewer than 2d elements.
PartitionSummary summarize_partition(DataVector x, std::size_t d);

// All summaries stacked and sorted, with the totals the bound depends on.
class MergedSummary {
 public:
  const SortedVector& w() const noexcept { return w_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t C() const noexcept { return C_; }
  std::size_t R() const noexcept { return R_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return d_; }

  friend bool operator==(const MergedSummary&, const MergedSummary&) = default;

 private:
  friend MergedSummary merge_summaries(
      std::span<const PartitionSummary> parts);
  MergedSummary(SortedVector w, std::size_t m, std::size_t C, std::size_t R,
                std::size_t n, std::size_t d)
      : w_(std::move(w)), m_(m), C_(C), R_(R), n_(n), d_(d) {}

  SortedVector w_;
  std::size_t m_;
  std::size_t C_;
  std::size_t R_;
  std::size_t n_;
  std::size_t d_;
};

// Throws kTooFew for fewer than two summaries and kMixedStride if their
// strides differ. The result does not depend on the order of parts.
MergedSummary merge_summaries(std::span<const PartitionSummary> parts);

// Right: w_h with h = floor(n' p) + 1; Left: w_h with h = ceil(n' p);
// h clamped to [1, n'] where n' = C - m.
double approximate_quantile(const MergedSummary& s, const QuantileQuery& q);

enum class BoundAssumption { kExactDivisible, kGeneralizedCoarsening };

const char* to_string(BoundAssumption a) noexcept;

// Worst-case DOS of approximate_quantile. epsilon = core + remainder +
// missing, where the missing term is zero unless widen_for_missing applied
// it.
struct BoundReport {
  Rational epsilon;
  Rational epsilon_core;
  Rational epsilon_remainder;
  Rational epsilon_missing;
  BoundAssumption assumption = BoundAssumption::kExactDivisible;
};

BoundReport error_bound(const MergedSummary& s);

// Accounts for n_missing values that belong to the data set but never
// reached the summary (skipped non-finite input, a dropped tail): adds
// n_missing / (n_summarized + n_missing) to epsilon.
BoundReport widen_for_missing(BoundReport report, std::size_t n_summarized,
                              std::size_t n_missing);

}  // namespace coarsequant

#endif  // COARSEQUANT_SUMMARY_HPP_
