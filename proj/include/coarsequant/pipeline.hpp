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

#ifndef COARSEQUANT_PIPELINE_HPP_
#define COARSEQUANT_PIPELINE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "coarsequant/ingest.hpp"
#include "coarsequant/summary.hpp"

namespace coarsequant {

// Produces the next raw partition, or std::nullopt when done.
using PartitionProducer = std::function<std::optional<std::vector<double>>()>;

struct PipelineOptions {
  std::size_t d = 1;
  // Partitions summarized concurrently; at most this many raw partitions
  // are resident at once. The result does not depend on it.
  std::size_t threads = 1;
  // Concatenate consecutive partitions shorter than 2d until they reach 2d.
  // A short tail that is left over at the end is not summarized; it is
  // charged to the bound as missing data.
  bool merge_small = false;
};

struct PipelineResult {
  std::vector<PartitionSummary> summaries;
  MergedSummary merged;
  BoundReport bound;
  // Values that are part of the data set but not of any summary.
  std::size_t dropped_tail = 0;
  std::size_t skipped_nonfinite = 0;
  // Residency accounting, in values: the largest partition summarized and
  // the peak of (raw values in flight + summary values retained).
  std::size_t max_partition_length = 0;
  std::size_t summary_values = 0;
  std::size_t peak_resident_values = 0;
};

// Summarizes every partition and merges the results. Partitions shorter
// than 2d raise kPartitionTooSmall unless merge_small is set; fewer than
// two summaries raise kTooFew.
PipelineResult run_pipeline(const PartitionProducer& next,
                            const PipelineOptions& options);

// Convenience overload that drains a PartitionStream and folds its
// skipped-value count into the bound.
PipelineResult run_pipeline(PartitionStream& stream,
                            const PipelineOptions& options);

}  // namespace coarsequant

#endif  // COARSEQUANT_PIPELINE_HPP_
