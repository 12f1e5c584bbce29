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

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <set>
#include <sstream>
#include <tuple>

#include "blindreset/latency.hpp"
#include "text_util.hpp"

namespace blindreset {

namespace {

constexpr std::uint64_t kPass1Tag = 0x5041535331434921;

std::string num(double v) { return detail::format_sig(v, kCsvDigits); }

double field_double(const std::string& s, std::size_t line, const char* name) {
  double v = 0.0;
  if (!detail::parse_double(s, v)) throw ParseError(line, std::string("bad ") + name + " '" + s + "'");
  return v;
}

template <typename Int>
Int field_int(const std::string& s, std::size_t line, const char* name) {
  Int v = 0;
  if (!detail::parse_int(s, v)) throw ParseError(line, std::string("bad ") + name + " '" + s + "'");
  return v;
}

void check_fraction(double v, std::size_t line, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw ParseError(line, std::string(name) + " outside [0, 1]");
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

PlatformProfile resolve_profile(const std::string& backend, std::span<const PlatformProfile> profiles) {
  for (const auto& p : profiles) {
    if (p.name == backend) return p;
  }
  return profiles::by_name(backend);
}

// Methods at (backend, length) ordered best first by mean p_zero.
std::vector<ResetMethod> method_order(const AggregateReport& r, const std::string& backend, std::size_t length) {
  std::vector<const MethodSummary*> group;
  for (const auto& s : r.pass1) {
    if (s.backend == backend && s.length == length) group.push_back(&s);
  }
  std::sort(group.begin(), group.end(), [](const MethodSummary* a, const MethodSummary* b) {
    if (a->mean_p_zero != b->mean_p_zero) return a->mean_p_zero > b->mean_p_zero;
    return a->method < b->method;
  });
  std::vector<ResetMethod> out;
  for (const auto* s : group) out.push_back(s->method);
  return out;
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<ResultRow> stamp_rows(std::span<const ResetOutcome> outcomes, const std::string& timestamp) {
  std::vector<ResultRow> rows;
  rows.reserve(outcomes.size());
  for (const auto& o : outcomes) rows.push_back({o, timestamp});
  return rows;
}

std::string format_row(const ResultRow& row) {
  const ResetOutcome& o = row.outcome;
  if (o.backend.find_first_of(",\n\r") != std::string::npos) {
    throw std::invalid_argument("backend name must not contain ',' or line breaks");
  }
  std::ostringstream os;
  os << o.backend << ',' << method_name(o.method) << ',' << o.seed << ',' << o.sequence_length << ','
     << num(o.p_zero) << ',' << num(o.p_x) << ',' << num(o.unitary_error) << ','
     << (o.lambda_used ? num(*o.lambda_used) : std::string("NA")) << ',' << o.shots << ',' << row.timestamp;
  return os.str();
}

ResultRow parse_row(std::string_view line, std::size_t n) {
  const auto f = detail::split(line, ',');
  if (f.size() != 10) {
    throw ParseError(n, "expected 10 columns, found " + std::to_string(f.size()));
  }
  ResultRow row;
  ResetOutcome& o = row.outcome;
  o.backend = f[0];
  if (o.backend.empty()) throw ParseError(n, "empty backend");
  try {
    o.method = parse_method(f[1]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(n, e.what());
  }
  o.seed = field_int<std::uint64_t>(f[2], n, "seed");
  o.sequence_length = field_int<std::size_t>(f[3], n, "sequence_length");
  o.p_zero = field_double(f[4], n, "p_zero");
  o.p_x = field_double(f[5], n, "p_x");
  o.unitary_error = field_double(f[6], n, "unitary_error");
  check_fraction(o.p_zero, n, "p_zero");
  check_fraction(o.p_x, n, "p_x");
  if (!(o.unitary_error >= 0.0)) throw ParseError(n, "negative unitary_error");
  if (f[7] != "NA") o.lambda_used = field_double(f[7], n, "lambda_used");
  o.shots = field_int<long>(f[8], n, "shots");
  if (o.shots < 1) throw ParseError(n, "shots must be >= 1");
  row.timestamp = f[9];
  return row;
}

void write_rows(std::ostream& os, std::span<const ResultRow> rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) os << format_row(r) << '\n';
}

void write_rows(const std::filesystem::path& path, std::span<const ResultRow> rows) {
  write_file(path, [&](std::ostream& os) { write_rows(os, rows); });
}

std::vector<ResultRow> read_rows(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError(1, "missing header");
  if (strip_cr(line) != kCsvHeader) throw ParseError(1, "unexpected header");
  std::vector<ResultRow> rows;
  std::size_t n = 1;
  while (std::getline(is, line)) {
    ++n;
    line = strip_cr(line);
    if (line.empty()) continue;
    rows.push_back(parse_row(line, n));
  }
  return rows;
}

std::vector<ResultRow> read_rows(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  return read_rows(is);
}

std::uint64_t RunManifest::config_hash() const { return fnv1a64(command + "\n" + config_text); }

std::string RunManifest::config_hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(config_hash()));
  return buf;
}

std::string RunManifest::to_text() const {
  std::ostringstream os;
  os << "tool_version=" << tool_version << "\n";
  os << "command=" << command << "\n";
  os << "config_hash=" << config_hash_hex() << "\n";
  os << "created=" << created << "\n";
  os << "[config]\n" << config_text;
  return os.str();
}

RunManifest RunManifest::parse(std::string_view text) {
  RunManifest m;
  std::string stored_hash;
  std::size_t pos = 0;
  bool in_config = false;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string line(text.substr(pos, end - pos));
    if (in_config) {
      m.config_text.append(text.substr(pos));
      break;
    }
    pos = end + 1;
    if (line == "[config]") {
      in_config = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "tool_version") m.tool_version = value;
    else if (key == "command") m.command = value;
    else if (key == "config_hash") stored_hash = value;
    else if (key == "created") m.created = value;
  }
  if (stored_hash != m.config_hash_hex()) {
    throw std::runtime_error("manifest hash " + stored_hash + " does not match its config (" +
                             m.config_hash_hex() + ")");
  }
  return m;
}

std::filesystem::path manifest_path(const std::filesystem::path& csv) {
  return std::filesystem::path(csv.string() + ".manifest");
}

void write_manifest(const std::filesystem::path& csv, const RunManifest& manifest) {
  write_file(manifest_path(csv), [&](std::ostream& os) { os << manifest.to_text(); });
}

RunManifest read_manifest(const std::filesystem::path& csv) {
  std::ifstream is(manifest_path(csv), std::ios::binary);
  if (!is) throw IoError("cannot open " + manifest_path(csv).string());
  std::stringstream ss;
  ss << is.rdbuf();
  return RunManifest::parse(ss.str());
}

std::string_view bin_name(DecisionBin bin) {
  switch (bin) {
    case DecisionBin::BlindFavorable: return "blind_favorable";
    case DecisionBin::MeasurementFavorable: return "measurement_favorable";
    case DecisionBin::Restricted: return "restricted";
  }
  return "?";
}

AggregateReport aggregate(std::span<const ResultRow> rows, double f_req,
                          std::span<const PlatformProfile> profiles) {
  if (rows.empty()) throw std::invalid_argument("aggregate: no rows");
  AggregateReport rep;
  rep.f_req = f_req;

  using GroupKey = std::tuple<std::string, ResetMethod, std::size_t>;
  std::map<GroupKey, std::vector<const ResetOutcome*>> groups;
  std::map<std::string, std::set<std::tuple<ResetMethod, std::size_t, std::uint64_t>>> tuples;
  for (const auto& r : rows) {
    const auto& o = r.outcome;
    groups[{o.backend, o.method, o.sequence_length}].push_back(&o);
    tuples[o.backend].insert({o.method, o.sequence_length, o.seed});
  }

  // Pass 1.
  for (auto& [key, group] : groups) {
    std::sort(group.begin(), group.end(), [](const ResetOutcome* a, const ResetOutcome* b) {
      return std::tie(a->seed, a->p_zero, a->p_x) < std::tie(b->seed, b->p_zero, b->p_x);
    });
    MethodSummary s;
    std::tie(s.backend, s.method, s.length) = key;
    s.n = group.size();
    std::vector<double> pz;
    double px = 0.0;
    double ue = 0.0;
    for (const auto* o : group) {
      pz.push_back(o->p_zero);
      px += o->p_x;
      ue += o->unitary_error;
    }
    s.mean_p_zero = stats::mean(pz);
    s.mean_p_x = px / static_cast<double>(s.n);
    s.mean_unitary_error = ue / static_cast<double>(s.n);
    if (s.n >= 2) {
      Stream stream = derive_stream({kPass1Tag, fnv1a64(s.backend), static_cast<std::uint64_t>(s.method), s.length});
      s.p_zero_ci = stats::bootstrap_ci(pz, stream);
    } else {
      s.p_zero_ci = {s.mean_p_zero, s.mean_p_zero};
    }
    rep.pass1.push_back(std::move(s));
  }

  // Pass 2 and completeness.
  std::set<std::tuple<ResetMethod, std::size_t, std::uint64_t>> all;
  for (const auto& [b, set] : tuples) all.insert(set.begin(), set.end());
  for (const auto& [b, set] : tuples) {
    rep.completeness[b] = (tuples.size() >= 2 && set.size() == all.size()) ? "complete" : "partial";
  }
  if (tuples.size() >= 2) {
    std::map<std::pair<ResetMethod, std::size_t>, std::vector<std::uint64_t>> matched;
    for (const auto& t : all) {
      const bool everywhere = std::all_of(tuples.begin(), tuples.end(),
                                          [&](const auto& kv) { return kv.second.count(t) > 0; });
      if (everywhere) matched[{std::get<0>(t), std::get<1>(t)}].push_back(std::get<2>(t));
    }
    for (const auto& [ml, seeds] : matched) {
      MatchedComparison c;
      c.method = ml.first;
      c.length = ml.second;
      c.n_matched = seeds.size();
      const std::set<std::uint64_t> keep(seeds.begin(), seeds.end());
      for (const auto& [b, set] : tuples) {
        std::vector<double> vals;
        for (const auto* o : groups[{b, c.method, c.length}]) {
          if (keep.count(o->seed)) vals.push_back(o->p_zero);
        }
        c.mean_p_zero[b] = stats::mean(vals);
        c.ranking.push_back(b);
      }
      std::stable_sort(c.ranking.begin(), c.ranking.end(), [&](const std::string& a, const std::string& b) {
        return c.mean_p_zero[a] > c.mean_p_zero[b];
      });
      rep.pass2.push_back(std::move(c));
    }
  }

  // Pass 3.
  for (const auto& s : rep.pass1) {
    if (s.method != ResetMethod::BlindReset) continue;
    const PlatformProfile prof = resolve_profile(s.backend, profiles);
    BinnedCell cell;
    cell.backend = s.backend;
    cell.length = s.length;
    cell.f_clean = s.mean_p_zero;
    cell.t_blind = blind_latency(s.length, prof);
    cell.t_meas = measurement_latency(prof);
    const PolicyDecision d = decide(s.length, s.mean_p_zero, f_req, prof);
    if (d.chosen == ResetMethod::BlindReset) {
      cell.bin = DecisionBin::BlindFavorable;
    } else if (d.reason == DecisionReason::TooSlow) {
      cell.bin = DecisionBin::MeasurementFavorable;
    } else {
      cell.bin = DecisionBin::Restricted;
    }
    rep.pass3.push_back(std::move(cell));
  }
  return rep;
}

std::vector<DecisionCell> decision_matrix(const AggregateReport& report, double f_req,
                                          const AggregateReport* previous) {
  std::vector<DecisionCell> out;
  for (const auto& b : report.pass3) {
    DecisionCell c;
    c.backend = b.backend;
    c.length = b.length;
    c.timing_ok = strictly_faster(b.t_blind, b.t_meas);
    c.clean_ok = b.f_clean >= f_req;
    if (!c.timing_ok) {
      c.policy = "Meas-reset";
    } else if (!c.clean_ok) {
      c.policy = "Restrict L";
    } else {
      c.policy = "Blind reset";
    }
    if (previous == nullptr) {
      c.stability = "single-epoch";
    } else {
      const auto now = method_order(report, b.backend, b.length);
      const auto before = method_order(*previous, b.backend, b.length);
      c.stability = (now == before) ? "Static map" : "Runtime switch";
    }
    const auto it = report.completeness.find(b.backend);
    c.reporting = (it != report.completeness.end() && it->second == "complete") ? "Comparative" : "Per-backend";
    out.push_back(std::move(c));
  }
  return out;
}

void write_latency_csv(std::ostream& os, std::span<const LatencyRow> rows) {
  os << "profile,t_gate_ns,t_meas_ns,l_star,ratio\n";
  for (const auto& r : rows) {
    os << r.profile << ',' << num(r.t_gate * 1e9) << ',' << num(r.t_meas * 1e9) << ',' << r.l_star << ','
       << (r.ratio ? num(*r.ratio) : std::string("NA")) << '\n';
  }
}

void write_ext_sweep_csv(std::ostream& os,
                         std::span<const std::pair<std::string, std::vector<CrossoverPoint>>> series) {
  os << "profile,t_ext_ns,l_star\n";
  for (const auto& [profile, points] : series) {
    for (const auto& p : points) os << profile << ',' << num(p.t_ext * 1e9) << ',' << p.l_star << '\n';
  }
}

void write_qec_csv(std::ostream& os, std::span<const QecRunResult> runs) {
  os << "cycle,policy,distance,logical_error,ci_lo,ci_hi\n";
  for (const auto& r : runs) {
    for (const auto& p : r.points) {
      os << p.cycle << ',' << r.policy << ',' << r.distance << ',' << num(p.logical_error) << ','
         << num(p.ci_lo) << ',' << num(p.ci_hi) << '\n';
    }
  }
}

void write_landscape_csv(std::ostream& os, std::span<const LandscapeSummary> cells) {
  os << "seed,L,lambda_opt,epsilon_opt,kappa,n_minima,class\n";
  for (const auto& c : cells) {
    os << c.seed << ',' << c.length << ',' << num(c.lambda_opt) << ',' << num(c.epsilon_opt) << ','
       << num(c.kappa) << ',' << c.n_local_minima << ',' << class_name(c.cls) << '\n';
  }
}

void write_threshold_csv(std::ostream& os, std::span<const ThresholdRow> rows) {
  os << "method,f_clean,p_eff";
  if (!rows.empty()) {
    for (int d : rows.front().distances) os << ",p_L_d" << d;
  }
  os << '\n';
  for (const auto& r : rows) {
    os << r.label << ',' << num(r.f_clean) << ',' << num(r.p_eff);
    for (double v : r.p_logical) os << ',' << num(v);
    os << '\n';
  }
}

void write_t1t2_csv(std::ostream& os, std::span<const T1T2Cell> cells) {
  os << "t1_us,t2_us,valid,blind_p_zero,no_reset_p_zero,advantage\n";
  for (const auto& c : cells) {
    os << num(c.t1 * 1e6) << ',' << num(c.t2 * 1e6) << ',' << (c.valid ? 1 : 0) << ',';
    if (c.valid) {
      os << num(c.blind_mean) << ',' << num(c.no_reset_mean) << ',' << num(c.advantage) << '\n';
    } else {
      os << "NA,NA,NA\n";
    }
  }
}

void write_decision_csv(std::ostream& os, std::span<const DecisionCell> cells) {
  os << "backend,L,timing_ok,clean_ok,policy,stability,reporting\n";
  for (const auto& c : cells) {
    os << c.backend << ',' << c.length << ',' << (c.timing_ok ? 1 : 0) << ',' << (c.clean_ok ? 1 : 0) << ','
       << c.policy << ',' << c.stability << ',' << c.reporting << '\n';
  }
}

}  // namespace blindreset
