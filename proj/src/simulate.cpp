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

#include "coarsequant/simulate.hpp"

#include <cmath>
#include <numbers>

namespace coarsequant {

double NormalSource::uniform() {
  // 53 random bits, offset by half a step so the result is never 0 or 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double NormalSource::standard_normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

std::optional<std::vector<double>> MixtureGenerator::next() {
  if (produced_ == config_.m) return std::nullopt;
  ++produced_;
  const double mean = rng_.normal(0.0, config_.mean_sd);
  std::vector<double> out(config_.per_partition);
  for (double& v : out) v = rng_.normal(mean, config_.point_sd);
  return out;
}

}  // namespace coarsequant
