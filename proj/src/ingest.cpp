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

#include "coarsequant/ingest.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <system_error>

#include "coarsequant/error.hpp"

namespace coarsequant {
namespace {

constexpr std::size_t kRawBatch = 4096;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t file_size_or_throw(const std::filesystem::path& path) {
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot stat '" + path.string() + "': " + ec.message());
  }
  return size;
}

double decode_le(const unsigned char* bytes) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = (bits << 8) | bytes[i];
  return std::bit_cast<double>(bits);
}

void encode_le(double v, unsigned char* bytes) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) {
    bytes[i] = static_cast<unsigned char>(bits & 0xff);
    bits >>= 8;
  }
}

}  // namespace

FileFormat parse_file_format(const std::string& name) {
  if (name == "text") return FileFormat::kTextLines;
  if (name == "raw-f64le") return FileFormat::kRawF64LE;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown format '" + name + "' (expected text or raw-f64le)");
}

PartitionStream::PartitionStream(PartitionSource source)
    : source_(std::move(source)) {
  if (source_.paths.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no input files given");
  }
  if (source_.kind == SourceKind::kChunkedSingleFile) {
    if (source_.paths.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "chunked input reads exactly one file");
    }
    if (source_.chunk_size < 1) {
      throw Error(ErrorCode::kInvalidArgument, "chunk size must be >= 1");
    }
  }
  for (const auto& path : source_.paths) {
    const auto size = file_size_or_throw(path);
    if (source_.format == FileFormat::kRawF64LE && size % 8 != 0) {
      throw Error(ErrorCode::kIoError,
                  "'" + path.string() + "' has " + std::to_string(size) +
                      " bytes, not a multiple of 8");
    }
    stats_.bytes_total += size;
  }
}

bool PartitionStream::open_next_file() {
  if (file_.is_open()) file_.close();
  if (next_path_ == source_.paths.size()) return false;
  current_path_ = source_.paths[next_path_++];
  const auto mode = source_.format == FileFormat::kRawF64LE
                        ? std::ios::in | std::ios::binary
                        : std::ios::in;
  file_.open(current_path_, mode);
  if (!file_) {
    throw Error(ErrorCode::kIoError,
                "cannot open '" + current_path_.string() + "'");
  }
  line_no_ = 0;
  file_offset_ = 0;
  return true;
}

std::optional<std::vector<double>> PartitionStream::next() {
  const bool chunked = source_.kind == SourceKind::kChunkedSingleFile;
  const std::size_t limit =
      chunked ? source_.chunk_size : static_cast<std::size_t>(-1);
  std::vector<double> out;
  if (chunked) out.reserve(limit);
  while (true) {
    if (!file_.is_open() && !open_next_file()) break;
    const bool more = read_values(out, limit);
    if (!more) file_.close();
    if (chunked && out.size() == limit) break;
    // A file-list partition is one whole file; empty files yield nothing.
    if (!chunked && !more && !out.empty()) break;
  }
  if (out.empty()) return std::nullopt;
  ++stats_.partitions;
  return out;
}

bool PartitionStream::read_values(std::vector<double>& out,
                                  std::size_t max_values) {
  return source_.format == FileFormat::kRawF64LE ? read_raw(out, max_values)
                                                 : read_text(out, max_values);
}

void PartitionStream::accept(std::vector<double>& out, double v,
                             std::uint64_t where) {
  ++stats_.values_read;
  if (std::isfinite(v)) {
    out.push_back(v);
    return;
  }
  if (source_.skip_nonfinite) {
    ++stats_.skipped_nonfinite;
    return;
  }
  const std::string location =
      source_.format == FileFormat::kTextLines
          ? "line " + std::to_string(where)
          : "byte offset " + std::to_string(where);
  throw Error(ErrorCode::kParseError, "'" + current_path_.string() + "' " +
                                          location + ": non-finite value");
}

bool PartitionStream::read_text(std::vector<double>& out,
                                std::size_t max_values) {
  std::string line;
  while (out.size() < max_values) {
    if (!std::getline(file_, line)) {
      if (file_.bad()) {
        throw Error(ErrorCode::kIoError,
                    "read failed on '" + current_path_.string() + "'");
      }
      return false;
    }
    ++line_no_;
    stats_.bytes_read += line.size() + (file_.eof() ? 0 : 1);
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    double v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      throw Error(ErrorCode::kParseError,
                  "'" + current_path_.string() + "' line " +
                      std::to_string(line_no_) + ": cannot parse '" +
                      std::string(text) + "'");
    }
    accept(out, v, line_no_);
  }
  // Stopped on the chunk limit; report end of file only once nothing is left.
  return file_.peek() != std::char_traits<char>::eof();
}

bool PartitionStream::read_raw(std::vector<double>& out,
                               std::size_t max_values) {
  std::array<unsigned char, kRawBatch * 8> buf;
  while (out.size() < max_values) {
    const std::size_t want = std::min(kRawBatch, max_values - out.size());
    file_.read(reinterpret_cast<char*>(buf.data()),
               static_cast<std::streamsize>(want * 8));
    const auto got = static_cast<std::size_t>(file_.gcount());
    if (file_.bad()) {
      throw Error(ErrorCode::kIoError,
                  "read failed on '" + current_path_.string() + "'");
    }
    stats_.bytes_read += got;
    if (got % 8 != 0) {
      throw Error(ErrorCode::kIoError,
                  "'" + current_path_.string() + "' ends mid-value");
    }
    for (std::size_t i = 0; i < got / 8; ++i) {
      accept(out, decode_le(buf.data() + 8 * i), file_offset_);
      file_offset_ += 8;
    }
    if (got < want * 8) return false;
  }
  return file_.peek() != std::char_traits<char>::eof();
}

std::vector<double> read_all_values(const PartitionSource& source,
                                    IngestStats* stats) {
  PartitionSource whole = source;
  whole.kind = SourceKind::kFileList;
  PartitionStream stream(std::move(whole));
  std::vector<double> all;
  while (auto part = stream.next()) {
    all.insert(all.end(), part->begin(), part->end());
  }
  if (stats) *stats = stream.stats();
  return all;
}

void append_raw_f64le(std::ostream& out, std::span<const double> values) {
  unsigned char bytes[8];
  for (double v : values) {
    encode_le(v, bytes);
    out.write(reinterpret_cast<const char*>(bytes), 8);
  }
}

void write_raw_f64le(const std::filesystem::path& path,
                     const std::vector<double>& values) {
  std::ofstream out(path, std::ios::out | std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  append_raw_f64le(out, values);
  if (!out) throw Error(ErrorCode::kIoError, "write failed on '" + path.string() + "'");
}

void write_text_lines(const std::filesystem::path& path,
                      const std::vector<double>& values) {
  std::ofstream out(path, std::ios::out | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  char buf[64];
  for (double v : values) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, ptr - buf);
    out.put('\n');
  }
  if (!out) throw Error(ErrorCode::kIoError, "write failed on '" + path.string() + "'");
}

}  // namespace coarsequant
