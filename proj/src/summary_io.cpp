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

#include "coarsequant/summary_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "coarsequant/error.hpp"

namespace coarsequant {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kParseError, "summary: " + what);
}

std::size_t parse_field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    malformed("expected " + std::string(key) + "=<int>, got '" +
              std::string(token) + "'");
  }
  std::size_t value = 0;
  const char* first = token.data() + key.size() + 1;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    malformed("bad integer in '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

void write_summary(std::ostream& out, const PartitionSummary& s) {
  out << "d=" << s.d() << " c=" << s.c() << " r=" << s.r() << " l=" << s.l()
      << '\n';
  char buf[64];
  for (double v : s.values().values()) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, ptr - buf);
    out.put('\n');
  }
}

std::optional<PartitionSummary> read_summary(std::istream& in) {
  std::string line;
  std::string_view header;
  while (true) {
    if (!std::getline(in, line)) return std::nullopt;
    header = trim(line);
    if (!header.empty()) break;
  }

  std::size_t fields[4];
  constexpr std::string_view kKeys[4] = {"d", "c", "r", "l"};
  for (int k = 0; k < 4; ++k) {
    const std::size_t space = header.find(' ');
    const std::string_view token = header.substr(0, space);
    fields[k] = parse_field(token, kKeys[k]);
    header = space == std::string_view::npos ? std::string_view{}
                                             : trim(header.substr(space + 1));
  }
  if (!header.empty()) malformed("trailing text after header");
  const auto [d, c, r, l] = fields;
  if (c < 2) malformed("c must be >= 2");

  std::vector<double> values;
  values.reserve(c - 1);
  while (values.size() < c - 1) {
    if (!std::getline(in, line)) {
      malformed("expected " + std::to_string(c - 1) + " values, got " +
                std::to_string(values.size()));
    }
    const std::string_view text = trim(line);
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
        !std::isfinite(v)) {
      malformed("bad value '" + std::string(text) + "'");
    }
    values.push_back(v);
  }
  try {
    return PartitionSummary(SortedVector::from_sorted(std::move(values)), d, c,
                            r, l);
  } catch (const Error& e) {
    malformed(e.what());
  }
}

std::vector<PartitionSummary> read_all_summaries(std::istream& in) {
  std::vector<PartitionSummary> out;
  while (auto s = read_summary(in)) out.push_back(std::move(*s));
  return out;
}

}  // namespace coarsequant
