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


#include "blindreset/bench_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "blindreset/rng.hpp"
#include "blindreset/sweep.hpp"

namespace blindreset {
namespace {

ResultRow make_row(const std::string& backend, ResetMethod m, std::uint64_t seed, std::size_t len, double pz) {
  ResultRow r;
  r.outcome.backend = backend;
  r.outcome.method = m;
  r.outcome.seed = seed;
  r.outcome.sequence_length = len;
  r.outcome.p_zero = pz;
  r.outcome.p_x = 0.5;
  r.outcome.unitary_error = 0.1;
  if (m != ResetMethod::MeasurementReset) r.outcome.lambda_used = 1.0;
  r.outcome.shots = 2048;
  r.timestamp = "2026-01-01T00:00:00Z";
  return r;
}

std::vector<ResultRow> random_rows(int n, Stream& s) {
  const char* backends[] = {"IQM", "Rigetti", "IonQ"};
  std::vector<ResultRow> rows;
  for (int i = 0; i < n; ++i) {
    ResultRow r;
    r.outcome.backend = backends[i % 3];
    r.outcome.method = static_cast<ResetMethod>(uniform_index(s, 3));
    r.outcome.seed = s();
    r.outcome.sequence_length = 1 + uniform_index(s, 40);
    // Values that are exact at 9 significant digits.
    auto q = [&](std::uint64_t n, double scale) { return static_cast<double>(uniform_index(s, n)) / scale; };
    r.outcome.p_zero = q(1000000000, 1e9);
    r.outcome.p_x = q(1000000000, 1e9);
    r.outcome.unitary_error = q(141421356, 1e8);
    if (r.outcome.method != ResetMethod::MeasurementReset) r.outcome.lambda_used = q(400000000, 1e8);
    r.outcome.shots = 1 + static_cast<long>(uniform_index(s, 100000));
    r.timestamp = "2026-03-0" + std::to_string(1 + i % 9) + "T12:00:00Z";
    rows.push_back(r);
  }
  return rows;
}

bool same(const ResultRow& a, const ResultRow& b) {
  const auto& x = a.outcome;
  const auto& y = b.outcome;
  return x.backend == y.backend && x.method == y.method && x.seed == y.seed &&
         x.sequence_length == y.sequence_length && x.p_zero == y.p_zero && x.p_x == y.p_x &&
         x.unitary_error == y.unitary_error && x.lambda_used == y.lambda_used && x.shots == y.shots &&
         a.timestamp == b.timestamp;
}

TEST(Csv, HeaderIsExact) {
  std::ostringstream os;
  write_rows(os, std::vector<ResultRow>{});
  EXPECT_EQ(os.str(), "backend,method,seed,sequence_length,p_zero,p_x,unitary_error,lambda_used,shots,timestamp\n");
}

TEST(Csv, ThousandRowRoundTrip) {
  Stream s = derive_stream({1});
  const auto rows = random_rows(1000, s);
  std::stringstream ss;
  write_rows(ss, rows);
  const auto back = read_rows(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) ASSERT_TRUE(same(rows[i], back[i])) << i;
}

TEST(Csv, SimulatedRowsRoundTrip) {
  SweepConfig cfg;
  cfg.profiles = {profiles::iqm()};
  cfg.seeds = 3;
  cfg.shots = 64;
  const auto rows = stamp_rows(run_sweep(cfg), "2026-03-01T00:00:00Z");
  std::stringstream ss;
  write_rows(ss, rows);
  const auto back = read_rows(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_NEAR(back[i].outcome.unitary_error, rows[i].outcome.unitary_error,
                5e-9 * rows[i].outcome.unitary_error);
    EXPECT_NEAR(back[i].outcome.p_zero, rows[i].outcome.p_zero, 5e-9 * rows[i].outcome.p_zero);
    EXPECT_EQ(format_row(back[i]), format_row(rows[i]));
  }
}

TEST(Csv, MissingLambdaIsNa) {
  const auto row = make_row("IQM", ResetMethod::MeasurementReset, 1, 4, 0.9);
  const std::string line = format_row(row);
  EXPECT_NE(line.find(",NA,"), std::string::npos);
  EXPECT_FALSE(parse_row(line, 2).outcome.lambda_used.has_value());
}

TEST(Csv, MalformedRowsNameTheLine) {
  std::stringstream ss;
  ss << kCsvHeader << "\n" << format_row(make_row("IQM", ResetMethod::NoReset, 1, 4, 0.6)) << "\n"
     << "IQM,no_reset,2,4,0.5,0.5,0.1,1\n";
  try {
    read_rows(ss);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::stringstream bad_header("backend,method\n");
  EXPECT_THROW(read_rows(bad_header), ParseError);
  EXPECT_THROW(parse_row("IQM,teleport,1,4,0.5,0.5,0.1,1,10,2026-01-01T00:00:00Z", 5), ParseError);
  EXPECT_THROW(parse_row("IQM,no_reset,x,4,0.5,0.5,0.1,1,10,2026-01-01T00:00:00Z", 5), ParseError);
}

TEST(Csv, MissingFileIsIoError) {
  EXPECT_THROW(read_rows(std::filesystem::path("/nonexistent/rows.csv")), IoError);
  EXPECT_THROW(write_rows(std::filesystem::path("/nonexistent/dir/rows.csv"), std::vector<ResultRow>{}), IoError);
}

TEST(Csv, TimestampFormat) {
  const std::string t = utc_timestamp();
  ASSERT_EQ(t.size(), 20u);
  EXPECT_EQ(t[4], '-');
  EXPECT_EQ(t[10], 'T');
  EXPECT_EQ(t.back(), 'Z');
}

TEST(Manifest, RoundTripAndTamper) {
  RunManifest m{"0.3.0", "blindreset sweep --seeds 42..43", "seeds=42..43\nshots=16\n", "2026-03-01T00:00:00Z"};
  const RunManifest back = RunManifest::parse(m.to_text());
  EXPECT_EQ(back.command, m.command);
  EXPECT_EQ(back.config_text, m.config_text);
  EXPECT_EQ(back.config_hash(), m.config_hash());
  EXPECT_EQ(m.config_hash_hex().size(), 16u);
  std::string text = m.to_text();
  const auto pos = text.find("shots=16");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 8, "shots=17");
  EXPECT_THROW(RunManifest::parse(text), std::exception);
  RunManifest other = m;
  other.created = "2027-01-01T00:00:00Z";
  EXPECT_EQ(other.config_hash(), m.config_hash());
}

TEST(Manifest, FileNextToCsv) {
  const auto dir = std::filesystem::temp_directory_path() / "blindreset_manifest_test";
  std::filesystem::create_directories(dir);
  const auto csv = dir / "run.csv";
  EXPECT_EQ(manifest_path(csv).filename(), "run.csv.manifest");
  RunManifest m{"0.3.0", "cmd", "a=1\n", "2026-03-01T00:00:00Z"};
  write_manifest(csv, m);
  EXPECT_EQ(read_manifest(csv).config_hash(), m.config_hash());
  std::filesystem::remove_all(dir);
}

TEST(Aggregate, SingleBackendIsPartial) {
  std::vector<ResultRow> rows;
  for (std::uint64_t s = 1; s <= 5; ++s) {
    for (auto m : {ResetMethod::NoReset, ResetMethod::MeasurementReset, ResetMethod::BlindReset}) {
      rows.push_back(make_row("IQM", m, s, 4, 0.8 + 0.01 * s));
    }
  }
  const auto rep = aggregate(rows);
  EXPECT_EQ(rep.pass1.size(), 3u);
  EXPECT_TRUE(rep.pass2.empty());
  EXPECT_EQ(rep.completeness.at("IQM"), "partial");
  ASSERT_EQ(rep.pass3.size(), 1u);
  EXPECT_EQ(rep.pass3[0].bin, DecisionBin::BlindFavorable);
  EXPECT_NEAR(rep.pass1[0].mean_p_zero, 0.83, 1e-12);
}

TEST(Aggregate, MissingTupleExcludedFromComparison) {
  std::vector<ResultRow> rows;
  for (std::uint64_t s = 1; s <= 4; ++s) {
    rows.push_back(make_row("IQM", ResetMethod::BlindReset, s, 4, 0.9));
    if (s != 3) rows.push_back(make_row("Rigetti", ResetMethod::BlindReset, s, 4, 0.8));
  }
  const auto rep = aggregate(rows);
  ASSERT_EQ(rep.pass2.size(), 1u);
  EXPECT_EQ(rep.pass2[0].n_matched, 3u);
  EXPECT_EQ(rep.pass2[0].ranking.front(), "IQM");
  EXPECT_EQ(rep.completeness.at("IQM"), "complete");
  EXPECT_EQ(rep.completeness.at("Rigetti"), "partial");
}

TEST(Aggregate, PermutationInvariant) {
  SweepConfig cfg;
  cfg.profiles = {profiles::iqm(), profiles::rigetti()};
  cfg.seeds = 6;
  cfg.lengths = {4, 8, 14};
  cfg.shots = 128;
  auto rows = stamp_rows(run_sweep(cfg), "2026-03-01T00:00:00Z");
  const auto a = aggregate(rows);
  Stream s = derive_stream({9});
  std::shuffle(rows.begin(), rows.end(), s);
  const auto b = aggregate(rows);
  ASSERT_EQ(a.pass1.size(), b.pass1.size());
  for (std::size_t i = 0; i < a.pass1.size(); ++i) {
    EXPECT_EQ(a.pass1[i].mean_p_zero, b.pass1[i].mean_p_zero);
    EXPECT_EQ(a.pass1[i].p_zero_ci.lo, b.pass1[i].p_zero_ci.lo);
    EXPECT_EQ(a.pass1[i].p_zero_ci.hi, b.pass1[i].p_zero_ci.hi);
  }
  ASSERT_EQ(a.pass2.size(), b.pass2.size());
  for (std::size_t i = 0; i < a.pass2.size(); ++i) {
    EXPECT_EQ(a.pass2[i].mean_p_zero, b.pass2[i].mean_p_zero);
    EXPECT_EQ(a.pass2[i].ranking, b.pass2[i].ranking);
  }
  ASSERT_EQ(a.pass3.size(), b.pass3.size());
  for (std::size_t i = 0; i < a.pass3.size(); ++i) EXPECT_EQ(a.pass3[i].bin, b.pass3[i].bin);
}

TEST(Aggregate, IqmShortSequencesAreBlindFavorable) {
  SweepConfig cfg;
  cfg.profiles = {profiles::iqm()};
  cfg.methods = {ResetMethod::BlindReset};
  const auto rep = aggregate(stamp_rows(run_sweep(cfg), utc_timestamp()), 0.75);
  for (const auto& c : rep.pass3) {
    if (c.length <= 6) EXPECT_EQ(c.bin, DecisionBin::BlindFavorable) << "L=" << c.length << " f=" << c.f_clean;
    if (c.length > 12) EXPECT_EQ(c.bin, DecisionBin::MeasurementFavorable) << "L=" << c.length;
  }
}

TEST(Decision, TableRows) {
  AggregateReport rep;
  rep.completeness = {{"IQM", "complete"}, {"Lab", "partial"}};
  const auto iqm = profiles::iqm();
  rep.pass3.push_back({"IQM", 14, 0.95, blind_latency(14, iqm), measurement_latency(iqm), DecisionBin::MeasurementFavorable});
  rep.pass3.push_back({"IQM", 8, 0.60, blind_latency(8, iqm), measurement_latency(iqm), DecisionBin::Restricted});
  rep.pass3.push_back({"IQM", 4, 0.85, blind_latency(4, iqm), measurement_latency(iqm), DecisionBin::BlindFavorable});
  rep.pass3.push_back({"Lab", 4, 0.85, 1e-7, 1e-6, DecisionBin::BlindFavorable});
  const auto cells = decision_matrix(rep, 0.75);
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(cells[0].policy, "Meas-reset");
  EXPECT_FALSE(cells[0].timing_ok);
  EXPECT_EQ(cells[1].policy, "Restrict L");
  EXPECT_EQ(cells[2].policy, "Blind reset");
  EXPECT_EQ(cells[2].stability, "single-epoch");
  EXPECT_EQ(cells[2].reporting, "Comparative");
  EXPECT_EQ(cells[3].reporting, "Per-backend");
  const auto again = decision_matrix(rep, 0.75);
  for (std::size_t i = 0; i < cells.size(); ++i) EXPECT_EQ(again[i].policy, cells[i].policy);
}

TEST(Decision, StabilityAcrossEpochs) {
  auto summary = [](ResetMethod m, double pz) {
    MethodSummary s;
    s.backend = "IQM";
    s.method = m;
    s.length = 4;
    s.n = 5;
    s.mean_p_zero = pz;
    return s;
  };
  AggregateReport now;
  now.pass1 = {summary(ResetMethod::NoReset, 0.6), summary(ResetMethod::BlindReset, 0.8)};
  now.pass3.push_back({"IQM", 4, 0.8, 240e-9, 730e-9, DecisionBin::BlindFavorable});
  AggregateReport same_order = now;
  same_order.pass1[1].mean_p_zero = 0.9;
  AggregateReport flipped = now;
  flipped.pass1[0].mean_p_zero = 0.95;
  EXPECT_EQ(decision_matrix(now, 0.75, &same_order)[0].stability, "Static map");
  EXPECT_EQ(decision_matrix(now, 0.75, &flipped)[0].stability, "Runtime switch");
}

TEST(Tables, QecCsvColumns) {
  QecRunResult r;
  r.policy = "blind_reset";
  r.distance = 3;
  r.points = {{1, 0.01, 0.005, 0.02}};
  std::ostringstream os;
  write_qec_csv(os, std::vector<QecRunResult>{r});
  EXPECT_EQ(os.str(), "cycle,policy,distance,logical_error,ci_lo,ci_hi\n1,blind_reset,3,0.01,0.005,0.02\n");
}

}  // namespace
}  // namespace blindreset
