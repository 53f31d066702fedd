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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "coarsequant/bounds.hpp"
#include "coarsequant/core_quantile.hpp"
#include "coarsequant/ingest.hpp"
#include "coarsequant/loss_dos.hpp"
#include "coarsequant/median_of_medians.hpp"
#include "coarsequant/pipeline.hpp"
#include "coarsequant/simulate.hpp"
#include "coarsequant/summary.hpp"
#include "coarsequant/summary_io.hpp"

namespace coarsequant::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_value(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_prob(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", to_double(r));
  return buf;
}

// ---------------------------------------------------------------------------
// Shared flags

struct InputFlags {
  std::vector<std::string> files;
  std::string file;
  std::size_t chunk = 0;
  std::string format = "text";
  bool skip_nonfinite = false;

  void attach(CLI::App& app) {
    app.add_option("--files", files, "One partition per file");
    app.add_option("--file", file, "Single file cut into --chunk sized partitions");
    app.add_option("--chunk", chunk, "Values per partition with --file");
    app.add_option("--format", format, "text | raw-f64le")->capture_default_str();
    app.add_flag("--skip-nonfinite", skip_nonfinite,
                 "Skip NaN/inf values and widen the bound for them");
  }

  PartitionSource source() const {
    PartitionSource src;
    src.format = parse_file_format(format);
    src.skip_nonfinite = skip_nonfinite;
    if (!files.empty() && !file.empty()) {
      throw UsageError("use either --files or --file, not both");
    }
    if (!files.empty()) {
      src.kind = SourceKind::kFileList;
      src.paths.assign(files.begin(), files.end());
    } else if (!file.empty()) {
      if (chunk == 0) throw UsageError("--file needs --chunk <values>");
      src.kind = SourceKind::kChunkedSingleFile;
      src.paths = {file};
      src.chunk_size = chunk;
    } else {
      throw UsageError("no input: give --files or --file");
    }
    return src;
  }
};

struct QueryFlags {
  std::vector<std::string> probabilities{"0.5"};
  std::string side = "right";
  bool clamp = false;

  void attach(CLI::App& app) {
    app.add_option("-p,--p", probabilities, "Probabilities, as decimals")
        ->capture_default_str();
    app.add_option("--side", side, "left | right")->capture_default_str();
    app.add_flag("--clamp", clamp,
                 "Clamp p into [1/n, (n-1)/n] with a warning instead of failing");
  }

  Side parsed_side() const {
    if (side == "left") return Side::kLeft;
    if (side == "right") return Side::kRight;
    throw UsageError("--side must be left or right, got '" + side + "'");
  }

  std::vector<Rational> parsed() const {
    std::vector<Rational> out;
    for (const auto& text : probabilities) {
      Rational p;
      try {
        p = parse_decimal(text);
      } catch (const Error&) {
        throw UsageError("bad probability '" + text + "'");
      }
      if (p < 0 || p > 1) {
        throw UsageError("probability " + text + " is outside [0, 1]");
      }
      out.push_back(p);
    }
    return out;
  }

  // Fails fast on endpoints the chosen side cannot answer.
  void validate() const {
    const Side s = parsed_side();
    const auto ps = parsed();
    if (clamp) return;
    for (const auto& p : ps) QuantileQuery(p, s);
  }

  std::vector<QuantileQuery> queries(std::size_t n, std::ostream& err) const {
    const Side s = parsed_side();
    std::vector<QuantileQuery> out;
    for (Rational p : parsed()) {
      if (clamp && n >= 2) {
        const Rational lo = make_rational(1, static_cast<std::int64_t>(n));
        const Rational hi = 1 - lo;
        if (p < lo || p > hi) {
          const Rational clamped = p < lo ? lo : hi;
          err << "warning: p=" << format_prob(p) << " clamped to "
              << to_string(clamped) << "\n";
          p = clamped;
        }
      }
      out.emplace_back(p, s);
    }
    return out;
  }
};

struct RunFlags {
  std::size_t d = 0;
  std::size_t threads = 1;
  bool merge_small = false;

  void attach(CLI::App& app) {
    app.add_option("-d", d, "Coarsening stride")->required();
    app.add_option("--threads", threads, "Partitions summarized in parallel")
        ->capture_default_str();
    app.add_flag("--merge-small", merge_small,
                 "Concatenate adjacent partitions shorter than 2d");
  }

  PipelineOptions options() const {
    if (threads < 1) throw UsageError("--threads must be >= 1");
    return PipelineOptions{d, threads, merge_small};
  }
};

// ---------------------------------------------------------------------------
// Reports

struct CompareEntry {
  double exact = 0;
  DosValue dos;
  bool pass = false;
};

json query_json(const std::vector<QuantileQuery>& queries) {
  json out = json::array();
  for (const auto& q : queries) {
    out.push_back({{"p", to_double(q.p())},
                   {"p_exact", to_string(q.p())},
                   {"side", to_string(q.side())}});
  }
  return out;
}

json result_json(const MergedSummary& s, const BoundReport& bound,
                 const std::vector<double>& mus) {
  json out = json::array();
  for (double mu : mus) {
    out.push_back({{"mu", mu},
                   {"epsilon", to_double(bound.epsilon)},
                   {"epsilon_exact", to_string(bound.epsilon)},
                   {"epsilon_core", to_double(bound.epsilon_core)},
                   {"epsilon_remainder", to_double(bound.epsilon_remainder)},
                   {"epsilon_missing", to_double(bound.epsilon_missing)},
                   {"m", s.m()},
                   {"C", s.C()},
                   {"R", s.R()},
                   {"n", s.n()},
                   {"d", s.d()}});
  }
  return out;
}

json compare_json(const std::vector<CompareEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    out.push_back({{"exact", e.exact},
                   {"dos", e.dos.value()},
                   {"dos_count", e.dos.count},
                   {"pass", e.pass}});
  }
  return out;
}

void print_bound_line(std::ostream& out, const MergedSummary& s,
                      const BoundReport& bound) {
  out << "m=" << s.m() << " C=" << s.C() << " R=" << s.R() << " n=" << s.n()
      << " d=" << s.d() << " summary_size=" << s.w().size() << "\n"
      << "epsilon=" << format_prob(bound.epsilon) << " ("
      << to_string(bound.epsilon) << ") core=" << to_string(bound.epsilon_core)
      << " remainder=" << to_string(bound.epsilon_remainder)
      << " missing=" << to_string(bound.epsilon_missing) << " ["
      << to_string(bound.assumption) << "]\n";
}

void print_query_line(std::ostream& out, const QuantileQuery& q, double mu,
                      const MergedSummary& s, const BoundReport& bound) {
  out << "p=" << format_prob(q.p()) << " side=" << to_string(q.side())
      << " mu=" << format_value(mu) << " epsilon=" << format_prob(bound.epsilon)
      << " epsilon_core=" << format_prob(bound.epsilon_core)
      << " epsilon_remainder=" << format_prob(bound.epsilon_remainder)
      << " m=" << s.m() << " C=" << s.C() << " R=" << s.R() << " n=" << s.n()
      << " d=" << s.d();
}

// Answers the queries from a merged summary and, when the full data is
// available, scores each answer against the exact quantile.
int report(std::ostream& out, std::ostream& err, bool as_json,
           const QueryFlags& qflags, const MergedSummary& merged,
           const BoundReport& bound, const SortedVector* exact_data,
           const std::string& plot_path) {
  const std::size_t n = exact_data ? exact_data->size() : merged.n();
  const auto queries = qflags.queries(n, err);
  std::vector<double> mus;
  for (const auto& q : queries) mus.push_back(approximate_quantile(merged, q));

  std::vector<CompareEntry> compare;
  bool all_pass = true;
  if (exact_data) {
    for (std::size_t i = 0; i < queries.size(); ++i) {
      CompareEntry e;
      e.exact = quantile(*exact_data, queries[i]);
      e.dos = dos(*exact_data, mus[i], e.exact);
      e.pass = e.dos.rational() <= bound.epsilon;
      all_pass = all_pass && e.pass;
      compare.push_back(e);
    }
    if (!plot_path.empty()) {
      std::ofstream plot(plot_path);
      if (!plot) throw Error(ErrorCode::kIoError, "cannot write '" + plot_path + "'");
      plot << "p,exact,approx\n";
      const Side side = qflags.parsed_side();
      for (int k = 1; k < 100; ++k) {
        const QuantileQuery q(make_rational(k, 100), side);
        plot << k / 100.0 << ',' << format_value(quantile(*exact_data, q)) << ','
             << format_value(approximate_quantile(merged, q)) << '\n';
      }
    }
  }

  if (as_json) {
    json doc = {{"query", query_json(queries)},
                {"result", result_json(merged, bound, mus)}};
    if (exact_data) doc["compare"] = compare_json(compare);
    out << doc.dump(2) << "\n";
  } else {
    print_bound_line(out, merged, bound);
    for (std::size_t i = 0; i < queries.size(); ++i) {
      print_query_line(out, queries[i], mus[i], merged, bound);
      if (exact_data) {
        const auto& e = compare[i];
        out << " exact=" << format_value(e.exact) << " dos=" << e.dos.count
            << "/" << e.dos.n << " (" << e.dos.value() << ") "
            << (e.pass ? "PASS" : "FAIL");
      }
      out << "\n";
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

// Wraps a producer so every partition is also appended to `sink`.
PartitionProducer tee(PartitionProducer inner, std::vector<double>* sink) {
  if (!sink) return inner;
  return [inner = std::move(inner), sink]() {
    auto part = inner();
    if (part) sink->insert(sink->end(), part->begin(), part->end());
    return part;
  };
}

void dump_summaries(const std::string& path,
                    const std::vector<PartitionSummary>& summaries) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  for (const auto& s : summaries) write_summary(out, s);
  if (!out) throw Error(ErrorCode::kIoError, "write failed on '" + path + "'");
}

void print_ingest(std::ostream& err, const PipelineResult& r) {
  if (r.skipped_nonfinite > 0) {
    err << "note: skipped " << r.skipped_nonfinite << " non-finite values\n";
  }
  if (r.dropped_tail > 0) {
    err << "note: " << r.dropped_tail
        << " trailing values too few to summarize; charged to epsilon\n";
  }
}

// ---------------------------------------------------------------------------
// Commands

struct ApproxCmd {
  InputFlags input;
  QueryFlags query;
  RunFlags run;
  bool json = false;
  std::string dump_summary;
  std::string summary_file;

  void attach(CLI::App& app) {
    input.attach(app);
    query.attach(app);
    app.add_option("-d", run.d, "Coarsening stride");
    app.add_option("--threads", run.threads, "Partitions summarized in parallel")
        ->capture_default_str();
    app.add_flag("--merge-small", run.merge_small,
                 "Concatenate adjacent partitions shorter than 2d");
    app.add_flag("--json", json, "JSON report");
    app.add_option("--dump-summary", dump_summary,
                   "Write the partition summaries to this file");
    app.add_option("--summary-file", summary_file,
                   "Answer from previously dumped summaries instead of data");
  }

  int exec(std::ostream& out, std::ostream& err) {
    query.validate();
    if (!summary_file.empty()) {
      std::ifstream in(summary_file);
      if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + summary_file + "'");
      const auto summaries = read_all_summaries(in);
      const MergedSummary merged = merge_summaries(summaries);
      return report(out, err, json, query, merged, error_bound(merged), nullptr,
                    "");
    }
    if (run.d == 0) throw UsageError("-d is required");
    PartitionStream stream(input.source());
    const PipelineResult r = run_pipeline(stream, run.options());
    print_ingest(err, r);
    if (!dump_summary.empty()) dump_summaries(dump_summary, r.summaries);
    return report(out, err, json, query, r.merged, r.bound, nullptr, "");
  }
};

struct ExactCmd {
  InputFlags input;
  QueryFlags query;
  bool json = false;

  void attach(CLI::App& app) {
    input.attach(app);
    query.attach(app);
    app.add_flag("--json", json, "JSON report");
  }

  int exec(std::ostream& out, std::ostream& err) {
    query.validate();
    const SortedVector y =
        sort_vector(DataVector(read_all_values(input.source())));
    const auto queries = query.queries(y.size(), err);
    if (json) {
      nlohmann::json results = nlohmann::json::array();
      for (const auto& q : queries) {
        results.push_back({{"exact", quantile(y, q)}, {"n", y.size()}});
      }
      out << nlohmann::json{{"query", query_json(queries)}, {"result", results}}
                 .dump(2)
          << "\n";
    } else {
      for (const auto& q : queries) {
        out << "p=" << format_prob(q.p()) << " side=" << to_string(q.side())
            << " exact=" << format_value(quantile(y, q)) << " n=" << y.size()
            << "\n";
      }
    }
    return kExitOk;
  }
};

struct CompareCmd {
  InputFlags input;
  QueryFlags query;
  RunFlags run;
  bool json = false;
  std::string plot_data;

  void attach(CLI::App& app) {
    input.attach(app);
    query.attach(app);
    run.attach(app);
    app.add_flag("--json", json, "JSON report");
    app.add_option("--plot-data", plot_data,
                   "Write p,exact,approx rows for p = 0.01 .. 0.99");
  }

  int exec(std::ostream& out, std::ostream& err) {
    query.validate();
    PartitionStream stream(input.source());
    std::vector<double> all;
    auto producer = tee([&stream] { return stream.next(); }, &all);
    PipelineResult r = run_pipeline(producer, run.options());
    r.skipped_nonfinite =
        static_cast<std::size_t>(stream.stats().skipped_nonfinite);
    if (r.skipped_nonfinite > 0) {
      r.bound = widen_for_missing(error_bound(r.merged), r.merged.n(),
                                  r.dropped_tail + r.skipped_nonfinite);
    }
    print_ingest(err, r);
    const SortedVector y = sort_vector(DataVector(std::move(all)));
    return report(out, err, json, query, r.merged, r.bound, &y, plot_data);
  }
};

struct SimulateCmd {
  MixtureConfig config;
  QueryFlags query;
  RunFlags run;
  bool json = false;
  bool no_exact = false;
  std::string write_path;
  std::string plot_data;

  void attach(CLI::App& app) {
    app.add_option("--m", config.m, "Partitions")->required();
    app.add_option("--per-partition", config.per_partition,
                   "Points per partition")
        ->required();
    app.add_option("--seed", config.seed, "Generator seed")->capture_default_str();
    app.add_option("--mean-sd", config.mean_sd,
                   "Standard deviation of the partition means")
        ->capture_default_str();
    query.attach(app);
    run.attach(app);
    app.add_flag("--json", json, "JSON report");
    app.add_flag("--no-exact", no_exact,
                 "Skip the exact comparison (no full copy of the data)");
    app.add_option("--write", write_path, "Also write the data as raw-f64le");
    app.add_option("--plot-data", plot_data,
                   "Write p,exact,approx rows for p = 0.01 .. 0.99");
  }

  int exec(std::ostream& out, std::ostream& err) {
    query.validate();
    MixtureGenerator gen(config);
    std::ofstream raw;
    if (!write_path.empty()) {
      raw.open(write_path, std::ios::out | std::ios::binary | std::ios::trunc);
      if (!raw) throw Error(ErrorCode::kIoError, "cannot write '" + write_path + "'");
    }
    std::vector<double> all;
    PartitionProducer producer = [&gen, &raw]() {
      auto part = gen.next();
      if (part && raw.is_open()) append_raw_f64le(raw, *part);
      return part;
    };
    producer = tee(std::move(producer), no_exact ? nullptr : &all);
    const PipelineResult r = run_pipeline(producer, run.options());
    if (raw.is_open() && !raw.flush()) {
      throw Error(ErrorCode::kIoError, "write failed on '" + write_path + "'");
    }
    if (no_exact) {
      return report(out, err, json, query, r.merged, r.bound, nullptr, "");
    }
    const SortedVector y = sort_vector(DataVector(std::move(all)));
    return report(out, err, json, query, r.merged, r.bound, &y, plot_data);
  }
};

struct DemoMomCmd {
  std::int64_t a = 0;
  std::int64_t b = 0;
  double big = 1e6;
  std::size_t d = 0;
  bool json = false;

  void attach(CLI::App& app) {
    app.add_option("--a", a, "m = 2a + 1 partitions")->required();
    app.add_option("--b", b, "partition length 2b + 1")->required();
    app.add_option("--big", big, "Value of the large block")->capture_default_str();
    app.add_option("-d", d, "Also run d-coarsening on the same data");
    app.add_flag("--json", json, "JSON report");
  }

  int exec(std::ostream& out, std::ostream&) {
    const auto parts = counterexample(a, b, big);
    const SortedVector all = stack_sorted(parts);
    const Rational half = make_rational(1, 2);
    const double mom = median_of_medians(parts);
    const double exact = left_quantile(all, half);
    const PositionInfo pos = position_info(all, mom);
    const std::size_t above =
        static_cast<std::size_t>(all.values().end() -
                                 std::upper_bound(all.values().begin(),
                                                  all.values().end(), mom));
    const Rational frac_above = make_rational(
        static_cast<std::int64_t>(above), static_cast<std::int64_t>(all.size()));

    std::optional<double> mu;
    std::optional<PositionInfo> mu_pos;
    std::optional<BoundReport> bound;
    if (d > 0) {
      std::vector<PartitionSummary> summaries;
      for (const auto& p : parts) summaries.push_back(summarize_partition(p, d));
      const MergedSummary merged = merge_summaries(summaries);
      mu = approximate_quantile(merged, QuantileQuery(half, Side::kRight));
      mu_pos = position_info(all, *mu);
      bound = error_bound(merged);
    }

    if (json) {
      auto pos_json = [](const PositionInfo& p) {
        return nlohmann::json{
            {"min_index", p.min_index},
            {"max_index", p.max_index},
            {"spos_lo", to_double(p.spos_lo())},
            {"spos_hi", to_double(p.spos_hi())},
            {"spos_midpoint", to_double(p.spos_midpoint())},
            {"displacement", to_double(p.spos_displacement(make_rational(1, 2)))}};
      };
      nlohmann::json doc = {{"median_of_medians", mom},
                            {"exact_median", exact},
                            {"n", all.size()},
                            {"position", pos_json(pos)},
                            {"fraction_above", to_double(frac_above)}};
      if (mu) {
        doc["coarsened"] = {{"d", d},
                            {"mu", *mu},
                            {"epsilon", to_double(bound->epsilon)},
                            {"epsilon_core", to_double(bound->epsilon_core)},
                            {"position", pos_json(*mu_pos)}};
      }
      out << doc.dump(2) << "\n";
      return kExitOk;
    }
    auto print_pos = [&out](const PositionInfo& p) {
      out << "spos=(" << to_string(p.spos_lo()) << ", " << to_string(p.spos_hi())
          << ") ~ (" << format_prob(p.spos_lo()) << ", "
          << format_prob(p.spos_hi())
          << ") midpoint=" << format_prob(p.spos_midpoint())
          << " displacement_from_half="
          << format_prob(p.spos_displacement(make_rational(1, 2))) << "\n";
    };
    out << "partitions=" << parts.size() << " length=" << 2 * b + 1
        << " n=" << all.size() << "\n"
        << "median_of_medians=" << format_value(mom) << "\n"
        << "exact_median=" << format_value(exact) << "\n"
        << "median_of_medians ";
    print_pos(pos);
    out << "fraction_above_median_of_medians=" << to_string(frac_above) << " ("
        << format_prob(frac_above) << ")\n";
    if (mu) {
      out << "coarsened d=" << d << " mu=" << format_value(*mu)
          << " epsilon=" << format_prob(bound->epsilon) << " ";
      print_pos(*mu_pos);
    }
    return kExitOk;
  }
};

struct PlanCmd {
  std::string epsilon;
  std::int64_t m = 0;

  void attach(CLI::App& app) {
    app.add_option("--epsilon", epsilon, "Target worst-case DOS")->required();
    app.add_option("--m", m, "Number of equal partitions")->required();
  }

  int exec(std::ostream& out, std::ostream&) {
    Rational eps;
    try {
      eps = parse_decimal(epsilon);
    } catch (const Error&) {
      throw UsageError("bad epsilon '" + epsilon + "'");
    }
    const std::int64_t c = plan_parameters(eps, m);
    out << "c=" << c << " bound="
        << format_prob(make_rational(m + 1, (m - 1) * (c - 1)))
        << " (choose d = floor(l / " << c << ") for partitions of length l)\n";
    return kExitOk;
  }
};

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomainError:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kIoError:
    case ErrorCode::kParseError:
      return kExitIo;
    default:
      return kExitConstraint;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Approximate quantiles of partitioned data by d-coarsening",
               "coarsequant"};
  app.require_subcommand(1);

  ApproxCmd approx;
  ExactCmd exact;
  CompareCmd compare;
  SimulateCmd simulate;
  DemoMomCmd demo;
  PlanCmd plan;
  auto* approx_app = app.add_subcommand("approx", "Approximate quantiles in one pass");
  auto* exact_app = app.add_subcommand("exact", "Exact quantiles by full sort");
  auto* compare_app = app.add_subcommand("compare", "Approximate vs exact, with DOS");
  auto* simulate_app =
      app.add_subcommand("simulate", "Seeded normal-mixture experiment");
  auto* demo_app = app.add_subcommand("demo-mom", "Median-of-medians failure case");
  auto* plan_app = app.add_subcommand("plan", "Smallest c for a target epsilon");
  approx.attach(*approx_app);
  exact.attach(*exact_app);
  compare.attach(*compare_app);
  simulate.attach(*simulate_app);
  demo.attach(*demo_app);
  plan.attach(*plan_app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*approx_app) return approx.exec(out, err);
    if (*exact_app) return exact.exec(out, err);
    if (*compare_app) return compare.exec(out, err);
    if (*simulate_app) return simulate.exec(out, err);
    if (*demo_app) return demo.exec(out, err);
    if (*plan_app) return plan.exec(out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace coarsequant::cli
