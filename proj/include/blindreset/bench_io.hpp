// Copyright 2026 The blindreset Authors
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

// Benchmark CSV files, run manifests, aggregation and the decision matrix.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blindreset/landscape.hpp"
#include "blindreset/latency.hpp"
#include "blindreset/platform.hpp"
#include "blindreset/qec.hpp"
#include "blindreset/reset.hpp"
#include "blindreset/stats.hpp"
#include "blindreset/sweep.hpp"

namespace blindreset {

inline constexpr std::string_view kCsvHeader =
    "backend,method,seed,sequence_length,p_zero,p_x,unitary_error,lambda_used,shots,timestamp";

/// Significant digits written for every real-valued column.
inline constexpr int kCsvDigits = 9;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ResultRow {
  ResetOutcome outcome;
  std::string timestamp;  // ISO-8601 UTC
};

/// Current time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

std::vector<ResultRow> stamp_rows(std::span<const ResetOutcome> outcomes, const std::string& timestamp);

std::string format_row(const ResultRow& row);
ResultRow parse_row(std::string_view line, std::size_t line_number);

void write_rows(std::ostream& os, std::span<const ResultRow> rows);
/// Throws IoError when the file cannot be written.
void write_rows(const std::filesystem::path& path, std::span<const ResultRow> rows);
/// Throws ParseError (with the line number) on a malformed header or row.
std::vector<ResultRow> read_rows(std::istream& is);
/// Throws IoError when the file cannot be opened.
std::vector<ResultRow> read_rows(const std::filesystem::path& path);

struct RunManifest {
  std::string tool_version;
  std::string command;
  std::string config_text;  // canonical; excludes timestamps and worker count
  std::string created;

  std::uint64_t config_hash() const;
  std::string config_hash_hex() const;
  std::string to_text() const;
  static RunManifest parse(std::string_view text);
};

/// `<csv>.manifest`.
std::filesystem::path manifest_path(const std::filesystem::path& csv);
void write_manifest(const std::filesystem::path& csv, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& csv);

// Aggregation.

struct MethodSummary {
  std::string backend;
  ResetMethod method = ResetMethod::NoReset;
  std::size_t length = 0;
  std::size_t n = 0;
  double mean_p_zero = 0.0;
  stats::Interval p_zero_ci;
  double mean_p_x = 0.0;
  double mean_unitary_error = 0.0;
};

struct MatchedComparison {
  ResetMethod method = ResetMethod::NoReset;
  std::size_t length = 0;
  std::size_t n_matched = 0;
  std::map<std::string, double> mean_p_zero;  // per backend, matched tuples only
  std::vector<std::string> ranking;           // backends, best first
};

enum class DecisionBin : std::uint8_t { BlindFavorable, MeasurementFavorable, Restricted };
std::string_view bin_name(DecisionBin bin);

struct BinnedCell {
  std::string backend;
  std::size_t length = 0;
  double f_clean = 0.0;  // blind-reset mean p_zero
  double t_blind = 0.0;
  double t_meas = 0.0;
  DecisionBin bin = DecisionBin::MeasurementFavorable;
};

struct AggregateReport {
  double f_req = 0.75;
  std::vector<MethodSummary> pass1;
  std::vector<MatchedComparison> pass2;
  std::vector<BinnedCell> pass3;
  std::map<std::string, std::string> completeness;  // backend -> "complete" or "partial"
};

inline constexpr double kDefaultFreq = 0.75;

/// Three passes: per-backend summaries by (method, length), cross-backend
/// comparisons over the tuples every backend has, and decision bins from
/// the blind-reset mean and the latency model. Backends are resolved
/// against `profiles` first and the built-in profiles otherwise.
AggregateReport aggregate(std::span<const ResultRow> rows, double f_req = kDefaultFreq,
                          std::span<const PlatformProfile> profiles = {});

struct DecisionCell {
  std::string backend;
  std::size_t length = 0;
  bool timing_ok = false;
  bool clean_ok = false;
  std::string policy;     // "Blind reset", "Meas-reset" or "Restrict L"
  std::string stability;  // "Static map", "Runtime switch" or "single-epoch"
  std::string reporting;  // "Comparative" or "Per-backend"
};

/// Decision table per (backend, length), conditions evaluated in the order
/// timing, cleanliness, rank stability, tuple completeness. Stability compares
/// the pass-1 method ordering against `previous` when one is given.
std::vector<DecisionCell> decision_matrix(const AggregateReport& report, double f_req,
                                          const AggregateReport* previous = nullptr);

// Module-specific tables.

void write_latency_csv(std::ostream& os, std::span<const LatencyRow> rows);
/// One series of (t_ext, L*) points per profile.
void write_ext_sweep_csv(std::ostream& os,
                         std::span<const std::pair<std::string, std::vector<CrossoverPoint>>> series);
void write_qec_csv(std::ostream& os, std::span<const QecRunResult> runs);
void write_landscape_csv(std::ostream& os, std::span<const LandscapeSummary> cells);
void write_threshold_csv(std::ostream& os, std::span<const ThresholdRow> rows);
void write_t1t2_csv(std::ostream& os, std::span<const T1T2Cell> cells);
void write_decision_csv(std::ostream& os, std::span<const DecisionCell> cells);

/// Writes `fill` into `path` through a stream; throws IoError on failure.
template <typename Fill>
void write_file(const std::filesystem::path& path, Fill&& fill) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  fill(os);
  os.flush();
  if (!os) throw IoError("write to " + path.string() + " failed");
}

}  // namespace blindreset
