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

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "coarsequant/error.hpp"
#include "coarsequant/ingest.hpp"
#include "support/generators.hpp"

namespace coarsequant {
namespace {

namespace fs = std::filesystem;

class IngestTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("coarsequant_ingest_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_text(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << body;
    return p;
  }

  fs::path numbers(const std::string& name, int lo, int hi) {
    std::vector<double> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    const fs::path p = dir_ / name;
    write_text_lines(p, v);
    return p;
  }

  static std::vector<std::vector<double>> drain(PartitionStream& s) {
    std::vector<std::vector<double>> out;
    while (auto p = s.next()) out.push_back(std::move(*p));
    return out;
  }

  static ErrorCode code_of(const PartitionSource& src) {
    try {
      PartitionStream s(src);
      drain(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidFactor;
  }

  fs::path dir_;
};

TEST_F(IngestTest, FileListYieldsOnePartitionPerFile) {
  PartitionSource src;
  src.paths = {numbers("a.txt", 1, 10), numbers("b.txt", 11, 22), numbers("c.txt", 23, 36)};
  PartitionStream s(src);
  const auto parts = drain(s);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].size(), 10u);
  EXPECT_EQ(parts[1].size(), 12u);
  EXPECT_EQ(parts[2].size(), 14u);
  EXPECT_EQ(parts[1].front(), 11);
  EXPECT_EQ(s.stats().partitions, 3u);
  EXPECT_EQ(s.stats().values_read, 36u);
}

TEST_F(IngestTest, ChunkedFileKeepsRemainderChunk) {
  PartitionSource src;
  src.kind = SourceKind::kChunkedSingleFile;
  src.chunk_size = 10;
  src.paths = {numbers("x.txt", 1, 25)};
  PartitionStream s(src);
  const auto parts = drain(s);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].size(), 10u);
  EXPECT_EQ(parts[1].size(), 10u);
  EXPECT_EQ(parts[2].size(), 5u);
  EXPECT_EQ(parts[2].back(), 25);
}

TEST_F(IngestTest, ChunkedExactMultipleHasNoEmptyTail) {
  PartitionSource src;
  src.kind = SourceKind::kChunkedSingleFile;
  src.chunk_size = 5;
  src.paths = {numbers("x.txt", 1, 20)};
  PartitionStream s(src);
  EXPECT_EQ(drain(s).size(), 4u);
}

TEST_F(IngestTest, RawFileOfEightyBytes) {
  std::vector<double> v;
  for (int i = 0; i < 10; ++i) v.push_back(i * 0.1 - 0.3);
  const fs::path p = dir_ / "x.bin";
  write_raw_f64le(p, v);
  EXPECT_EQ(fs::file_size(p), 80u);
  PartitionSource src;
  src.format = FileFormat::kRawF64LE;
  src.paths = {p};
  PartitionStream s(src);
  const auto parts = drain(s);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], v);
}

TEST_F(IngestTest, RawLengthMustBeMultipleOfEight) {
  PartitionSource src;
  src.format = FileFormat::kRawF64LE;
  src.paths = {write_text("bad.bin", std::string(81, '\0'))};
  EXPECT_EQ(code_of(src), ErrorCode::kIoError);
}

TEST_F(IngestTest, RawIsLittleEndian) {
  std::string bytes(8, '\0');
  bytes[6] = '\xf0';
  bytes[7] = '\x3f';
  PartitionSource src;
  src.format = FileFormat::kRawF64LE;
  src.paths = {write_text("one.bin", bytes)};
  PartitionStream s(src);
  EXPECT_EQ(drain(s), (std::vector<std::vector<double>>{{1.0}}));
}

TEST_F(IngestTest, TextBlankLinesAndWhitespace) {
  PartitionSource src;
  src.paths = {write_text("t.txt", "\n  1.5 \r\n\n-2e3\n\t7\n")};
  PartitionStream s(src);
  EXPECT_EQ(drain(s), (std::vector<std::vector<double>>{{1.5, -2000, 7}}));
}

TEST_F(IngestTest, ParseErrorNamesTheLine) {
  PartitionSource src;
  src.paths = {write_text("t.txt", "1\n2\n\nthree\n4\n")};
  try {
    PartitionStream s(src);
    drain(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
  src.paths = {write_text("c.txt", "1,5\n")};
  EXPECT_EQ(code_of(src), ErrorCode::kParseError);
}

TEST_F(IngestTest, NonFiniteIsAnErrorUnlessSkipped) {
  PartitionSource src;
  src.paths = {write_text("t.txt", "1\nnan\n2\ninf\n-inf\n3\n")};
  EXPECT_EQ(code_of(src), ErrorCode::kParseError);
  src.skip_nonfinite = true;
  PartitionStream s(src);
  EXPECT_EQ(drain(s), (std::vector<std::vector<double>>{{1, 2, 3}}));
  EXPECT_EQ(s.stats().skipped_nonfinite, 3u);
  EXPECT_EQ(s.stats().values_read, 6u);
}

TEST_F(IngestTest, SourceValidation) {
  PartitionSource src;
  EXPECT_EQ(code_of(src), ErrorCode::kInvalidArgument);
  src.paths = {dir_ / "missing.txt"};
  EXPECT_EQ(code_of(src), ErrorCode::kIoError);
  src.paths = {numbers("a.txt", 1, 3), numbers("b.txt", 1, 3)};
  src.kind = SourceKind::kChunkedSingleFile;
  src.chunk_size = 2;
  EXPECT_EQ(code_of(src), ErrorCode::kInvalidArgument);
  src.paths.pop_back();
  src.chunk_size = 0;
  EXPECT_EQ(code_of(src), ErrorCode::kInvalidArgument);
  EXPECT_EQ(parse_file_format("text"), FileFormat::kTextLines);
  EXPECT_EQ(parse_file_format("raw-f64le"), FileFormat::kRawF64LE);
  EXPECT_THROW(parse_file_format("csv"), Error);
}

TEST_F(IngestTest, EmptyFilesYieldNothing) {
  PartitionSource src;
  src.paths = {write_text("e.txt", ""), numbers("a.txt", 1, 4), write_text("b.txt", "\n\n")};
  PartitionStream s(src);
  EXPECT_EQ(drain(s).size(), 1u);
}

TEST_F(IngestTest, EveryByteReadOnceAndValuesPreserved) {
  gen::Engine rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const bool raw = trial % 2 == 0;
    std::vector<fs::path> paths;
    std::vector<double> all;
    const std::size_t files = gen::uniform_size(rng, 1, 4);
    for (std::size_t f = 0; f < files; ++f) {
      auto v = gen::tied_vector(rng, gen::uniform_size(rng, 1, 300));
      const fs::path p = dir_ / ("f" + std::to_string(f) + (raw ? ".bin" : ".txt"));
      raw ? write_raw_f64le(p, v) : write_text_lines(p, v);
      all.insert(all.end(), v.begin(), v.end());
      paths.push_back(p);
    }
    PartitionSource src;
    src.format = raw ? FileFormat::kRawF64LE : FileFormat::kTextLines;
    if (trial % 4 < 2) {
      src.paths = paths;
    } else {
      src.kind = SourceKind::kChunkedSingleFile;
      src.chunk_size = gen::uniform_size(rng, 1, 50);
      src.paths = {paths[0]};
    }
    PartitionStream s(src);
    std::vector<double> seen;
    for (auto& part : drain(s)) seen.insert(seen.end(), part.begin(), part.end());
    if (src.kind == SourceKind::kFileList) {
      ASSERT_EQ(seen, all);
    } else {
      IngestStats stats;
      ASSERT_EQ(seen, read_all_values(src, &stats));
      ASSERT_EQ(stats.bytes_read, stats.bytes_total);
    }
    ASSERT_EQ(s.stats().bytes_read, s.stats().bytes_total);
    for (auto& p : paths) fs::remove(p);
  }
}

}  // namespace
}  // namespace coarsequant
