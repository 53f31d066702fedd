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

#include "coarsequant/pipeline.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "coarsequant/error.hpp"

namespace coarsequant {
namespace {

BoundReport bound_with_missing(const MergedSummary& merged,
                               std::size_t missing) {
  BoundReport bound = error_bound(merged);
  return missing == 0 ? bound : widen_for_missing(bound, merged.n(), missing);
}

class Summarizer {
 public:
  explicit Summarizer(const PipelineOptions& options)
      : d_(options.d), threads_(std::max<std::size_t>(1, options.threads)) {}

  void add(std::vector<double> part) {
    max_partition_length_ = std::max(max_partition_length_, part.size());
    batch_.push_back(std::move(part));
    if (batch_.size() == threads_) flush();
  }

  void hold(std::size_t values) {
    in_flight_ += values;
    peak_ = std::max(peak_, in_flight_ + summary_values_);
  }

  void release(std::size_t values) { in_flight_ -= values; }

  void flush() {
    std::vector<PartitionSummary> done;
    done.reserve(batch_.size());
    if (batch_.size() == 1) {
      done.push_back(summarize_partition(DataVector(std::move(batch_[0])), d_));
    } else {
      std::vector<std::future<PartitionSummary>> futures;
      futures.reserve(batch_.size());
      for (auto& part : batch_) {
        futures.push_back(std::async(std::launch::async, [this, &part] {
          return summarize_partition(DataVector(std::move(part)), d_);
        }));
      }
      for (auto& f : futures) done.push_back(f.get());
    }
    for (auto& s : done) {
      release(s.l());
      summary_values_ += s.values().size();
      summaries_.push_back(std::move(s));
    }
    batch_.clear();
  }

  std::vector<PartitionSummary>& summaries() { return summaries_; }
  std::size_t max_partition_length() const { return max_partition_length_; }
  std::size_t summary_values() const { return summary_values_; }
  std::size_t peak() const { return peak_; }

 private:
  std::size_t d_;
  std::size_t threads_;
  std::vector<std::vector<double>> batch_;
  std::vector<PartitionSummary> summaries_;
  std::size_t in_flight_ = 0;
  std::size_t summary_values_ = 0;
  std::size_t peak_ = 0;
  std::size_t max_partition_length_ = 0;
};

}  // namespace

PipelineResult run_pipeline(const PartitionProducer& next,
                            const PipelineOptions& options) {
  if (options.d < 1) {
    throw Error(ErrorCode::kInvalidFactor, "stride d must be >= 1");
  }
  const std::size_t min_len = 2 * options.d;
  Summarizer summarizer(options);
  std::vector<double> pending;
  std::size_t index = 0;

  while (auto part = next()) {
    ++index;
    summarizer.hold(part->size());
    if (options.merge_small && (!pending.empty() || part->size() < min_len)) {
      pending.insert(pending.end(), part->begin(), part->end());
      if (pending.size() < min_len) continue;
      *part = std::move(pending);
      pending.clear();
    } else if (part->size() < min_len) {
      throw Error(ErrorCode::kPartitionTooSmall,
                  "partition " + std::to_string(index) + " has " +
                      std::to_string(part->size()) +
                      " values, fewer than 2d=" + std::to_string(min_len) +
                      " (use --merge-small to combine short partitions)");
    }
    summarizer.add(std::move(*part));
  }
  summarizer.flush();
  const std::size_t dropped = pending.size();
  summarizer.release(dropped);

  MergedSummary merged = merge_summaries(summarizer.summaries());
  BoundReport bound = bound_with_missing(merged, dropped);
  return PipelineResult{std::move(summarizer.summaries()),
                        std::move(merged),
                        std::move(bound),
                        dropped,
                        0,
                        summarizer.max_partition_length(),
                        summarizer.summary_values(),
                        summarizer.peak()};
}

PipelineResult run_pipeline(PartitionStream& stream,
                            const PipelineOptions& options) {
  PipelineResult result =
      run_pipeline([&stream] { return stream.next(); }, options);
  result.skipped_nonfinite =
      static_cast<std::size_t>(stream.stats().skipped_nonfinite);
  result.bound = bound_with_missing(
      result.merged, result.dropped_tail + result.skipped_nonfinite);
  return result;
}

}  // namespace coarsequant
