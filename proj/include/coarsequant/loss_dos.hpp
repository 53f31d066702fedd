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

// Degree of separation (DOS): the fraction of a sample lying strictly
// between two reals. It is the loss used to score quantile approximations,
// and it is unchanged by any strictly monotone relabeling of the data.

#ifndef COARSEQUANT_LOSS_DOS_HPP_
#define COARSEQUANT_LOSS_DOS_HPP_

#include <cstddef>

#include "coarsequant/core_quantile.hpp"
#include "coarsequant/rational.hpp"

namespace coarsequant {

struct DosValue {
  std::size_t count = 0;
  std::size_t n = 1;

  Rational rational() const;
  double value() const noexcept {
    return static_cast<double>(count) / static_cast<double>(n);
  }
  friend bool operator==(const DosValue&, const DosValue&) = default;
};

// Symmetric in (z, z2); dos(y, z, z) == 0. Neither argument needs to be an
// element of y. Throws kNonFiniteValue for NaN or infinite arguments.
DosValue dos(const SortedVector& y, double z, double z2);

// Number of elements of y equal to z.
std::size_t multiplicity(const SortedVector& y, double z);

}  // namespace coarsequant

#endif  // COARSEQUANT_LOSS_DOS_HPP_
