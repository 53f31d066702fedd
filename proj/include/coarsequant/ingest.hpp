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

// Single-pass partition readers.
//
// Two on-disk formats are understood:
//   TextLines  one decimal number per line, '.' as separator, blank lines
//              ignored, anything else is a parse error.
//   RawF64LE   headerless little-endian IEEE-754 doubles; the file size
//              must be a multiple of 8.
//
// A FileList source yields one partition per file. A ChunkedSingleFile
// source cuts one file into consecutive chunks of chunk_size values (the
// last chunk may be shorter). Every byte is read once, front to back.

#ifndef COARSEQUANT_INGEST_HPP_
#define COARSEQUANT_INGEST_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace coarsequant {

enum class SourceKind { kFileList, kChunkedSingleFile };
enum class FileFormat { kTextLines, kRawF64LE };

// Accepts "text" and "raw-f64le". Throws kInvalidArgument otherwise.
FileFormat parse_file_format(const std::string& name);

struct PartitionSource {
  SourceKind kind = SourceKind::kFileList;
  std::vector<std::filesystem::path> paths;
  std::size_t chunk_size = 0;  // ChunkedSingleFile only
  FileFormat format = FileFormat::kTextLines;
  // Drop NaN/inf values instead of failing; they are counted in
  // IngestStats::skipped_nonfinite.
  bool skip_nonfinite = false;
};

struct IngestStats {
  std::uint64_t bytes_read = 0;
  std::uint64_t bytes_total = 0;  // sum of file sizes, known up front
  std::uint64_t values_read = 0;  // including skipped non-finite values
  std::uint64_t skipped_nonfinite = 0;
  std::uint64_t partitions = 0;
};

// Pull-style iterator over partitions. Partitions come out in file order,
// then chunk order, and are owned by the caller. Errors: kIoError (missing
// file, bad raw length, read failure), kParseError (with path and line or
// byte offset).
class PartitionStream {
 public:
  explicit PartitionStream(PartitionSource source);

  PartitionStream(const PartitionStream&) = delete;
  PartitionStream& operator=(const PartitionStream&) = delete;
  PartitionStream(PartitionStream&&) = default;
  PartitionStream& operator=(PartitionStream&&) = default;

  // The next non-empty partition, or std::nullopt once all input is
  // consumed.
  std::optional<std::vector<double>> next();

  const IngestStats& stats() const noexcept { return stats_; }

 private:
  bool open_next_file();
  // Appends up to max_values values from the current file; returns false at
  // end of file.
  bool read_values(std::vector<double>& out, std::size_t max_values);
  bool read_text(std::vector<double>& out, std::size_t max_values);
  bool read_raw(std::vector<double>& out, std::size_t max_values);
  void accept(std::vector<double>& out, double v, std::uint64_t where);

  PartitionSource source_;
  std::size_t next_path_ = 0;
  std::ifstream file_;
  std::filesystem::path current_path_;
  std::uint64_t line_no_ = 0;
  std::uint64_t file_offset_ = 0;
  IngestStats stats_;
};

// Reads every value of every path in order, concatenated. For the exact
// oracle path, which needs all data in memory anyway.
std::vector<double> read_all_values(const PartitionSource& source,
                                    IngestStats* stats = nullptr);

// Writes values as a RawF64LE file.
void write_raw_f64le(const std::filesystem::path& path,
                     const std::vector<double>& values);

// Appends values to an open binary stream in RawF64LE encoding.
void append_raw_f64le(std::ostream& out, std::span<const double> values);

// Writes values as a TextLines file in shortest round-trip form.
void write_text_lines(const std::filesystem::path& path,
                      const std::vector<double>& values);

}  // namespace coarsequant

#endif  // COARSEQUANT_INGEST_HPP_
