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

// Text exchange format for partition summaries:
//
//   d=<int> c=<int> r=<int> l=<int>
//   <value>            (c - 1 lines, ascending)
//
// Values are written in shortest round-trip form, so they read back
// bit-identical. A stream may hold any number of consecutive blocks.

#ifndef COARSEQUANT_SUMMARY_IO_HPP_
#define COARSEQUANT_SUMMARY_IO_HPP_

#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "coarsequant/summary.hpp"

namespace coarsequant {

void write_summary(std::ostream& out, const PartitionSummary& s);

// Reads the next block; std::nullopt at a clean end of stream. Throws
// kParseError on malformed input.
std::optional<PartitionSummary> read_summary(std::istream& in);

std::vector<PartitionSummary> read_all_summaries(std::istream& in);

}  // namespace coarsequant

#endif  // COARSEQUANT_SUMMARY_IO_HPP_
