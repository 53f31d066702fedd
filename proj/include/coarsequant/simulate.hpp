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

// Reproducible normal-mixture data. Each partition draws its own mean from
// N(0, mean_sd^2) and then per_partition points from N(mean, point_sd^2).
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard, turned into uniforms on (0, 1) as ((x >> 11) + 0.5) / 2^53
// and into normals with the Box-Muller transform (both variates of each pair
// are used, cosine first). The same seed gives the same data everywhere.

#ifndef COARSEQUANT_SIMULATE_HPP_
#define COARSEQUANT_SIMULATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace coarsequant {

class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double standard_normal();
  double normal(double mean, double sd) { return mean + sd * standard_normal(); }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

struct MixtureConfig {
  std::size_t m = 1000;
  std::size_t per_partition = 10000;
  std::uint64_t seed = 1;
  double mean_sd = 10.0;
  double point_sd = 1.0;
};

class MixtureGenerator {
 public:
  explicit MixtureGenerator(const MixtureConfig& config)
      : config_(config), rng_(config.seed) {}

  // The next partition, or std::nullopt after config.m partitions.
  std::optional<std::vector<double>> next();

 private:
  MixtureConfig config_;
  NormalSource rng_;
  std::size_t produced_ = 0;
};

}  // namespace coarsequant

#endif  // COARSEQUANT_SIMULATE_HPP_
