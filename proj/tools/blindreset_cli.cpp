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

// blindreset: batch front end for sweeps and analyses.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "blindreset/bench_io.hpp"
#include "blindreset/landscape.hpp"
#include "blindreset/latency.hpp"
#include "blindreset/platform.hpp"
#include "blindreset/qec.hpp"
#include "blindreset/stats.hpp"
#include "blindreset/sweep.hpp"

namespace fs = std::filesystem;
using namespace blindreset;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct SeedRange {
  std::uint64_t first = 42;
  int count = 50;
};

SeedRange parse_seeds(const std::string& text) {
  SeedRange r;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.first = std::stoull(text);
      r.count = 1;
    } else {
      r.first = std::stoull(text.substr(0, dots));
      const std::uint64_t last = std::stoull(text.substr(dots + 2));
      if (last < r.first) throw std::invalid_argument("");
      r.count = static_cast<int>(last - r.first + 1);
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad seed range '" + text + "' (expected A..B or A)");
  }
  return r;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// "4,6,8" or "4..20:2".
std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  try {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      const auto colon = text.find(':', dots);
      const std::size_t a = std::stoul(text.substr(0, dots));
      const std::size_t b = std::stoul(text.substr(dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2));
      const std::size_t step = colon == std::string::npos ? 1 : std::stoul(text.substr(colon + 1));
      if (step == 0 || b < a) throw std::invalid_argument("");
      for (std::size_t l = a; l <= b; l += step) out.push_back(l);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad length list '" + text + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty length list");
  return out;
}

std::vector<PlatformProfile> resolve_profiles(const std::string& profile_file, const std::vector<std::string>& names) {
  std::vector<PlatformProfile> pool;
  if (!profile_file.empty()) pool = load_profiles(profile_file);
  std::vector<PlatformProfile> out;
  for (const auto& n : names) {
    bool found = false;
    for (const auto& p : pool) {
      if (p.name == n) {
        out.push_back(p);
        found = true;
        break;
      }
    }
    if (!found) out.push_back(profiles::by_name(n));
  }
  return out;
}

RunManifest make_manifest(const std::string& command, const std::string& config_text) {
  return {BLINDRESET_VERSION, command, config_text, utc_timestamp()};
}

// Manifest first, then the table.
template <typename Fill>
void emit(const fs::path& path, const std::string& command, const std::string& config_text, Fill&& fill) {
  write_manifest(path, make_manifest(command, config_text));
  write_file(path, fill);
  std::cerr << "wrote " << path.string() << "\n";
}

// Appends "--key value" for every key=value line of a config file so that the
// file takes precedence over flags given earlier on the command line.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config file " + path);
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) continue;
    args.push_back("--" + key);
    args.push_back(trim(line.substr(eq + 1)));
  }
  return args;
}

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blindreset: measurement-free ancilla reset simulator"};
  app.set_version_flag("--version", BLINDRESET_VERSION);
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::string config_file;
  std::string profile_file;
  std::string out_dir = ".";
  unsigned workers = 1;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_file, "key=value file; its values override flags");
    sub->add_option("--profiles", profile_file, "platform profile file");
    sub->add_option("--out-dir", out_dir, "output directory");
    sub->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 1024u));
  };

  // sweep
  auto* sweep = app.add_subcommand("sweep", "cleanliness sweep over backends, methods, seeds and lengths");
  add_common(sweep);
  std::string seeds_text = "42..91";
  std::string lengths_text = "4..20:2";
  long shots = 2048;
  std::string backends_text = "IQM,Rigetti,IonQ";
  std::string methods_text = "no_reset,measurement_reset,blind_reset";
  std::string output = "sweep.csv";
  int grid_points = 40;
  sweep->add_option("--seeds", seeds_text, "seed range A..B");
  sweep->add_option("--lengths", lengths_text, "lengths, A,B,C or A..B:step");
  sweep->add_option("--shots", shots, "shots per circuit");
  sweep->add_option("--backends", backends_text, "profile names");
  sweep->add_option("--methods", methods_text, "reset methods");
  sweep->add_option("--grid-points", grid_points, "lambda grid points");
  sweep->add_option("--output", output, "CSV file name");

  // latency
  auto* latency = app.add_subcommand("latency", "crossover table and external-feedback sweep");
  add_common(latency);
  std::string t_ext_text = "4us";
  std::string sweep_max_text = "4us";
  std::string sweep_step_text = "250ns";
  latency->add_option("--t-ext", t_ext_text, "external feedback term of the NVQLink row");
  latency->add_option("--sweep-max", sweep_max_text, "largest external term in the sweep");
  latency->add_option("--sweep-step", sweep_step_text, "sweep spacing");

  // qec
  auto* qec = app.add_subcommand("qec", "decoder-coupled logical error curves");
  add_common(qec);
  std::string distances_text = "3,5";
  int cycles = 20;
  std::string qec_seeds = "42..91";
  long qec_shots = 1000;
  double p_phys = 1e-3;
  std::string decoder = "both";
  std::size_t blind_length = 4;
  bool live = false;
  std::string live_profile = "IQM";
  std::string checkpoints_text;
  qec->add_option("--distances", distances_text, "odd code distances");
  qec->add_option("--cycles", cycles, "syndrome cycles");
  qec->add_option("--seeds", qec_seeds, "seed range A..B");
  qec->add_option("--shots", qec_shots, "shots per seed");
  qec->add_option("--p-phys", p_phys, "physical error rate");
  qec->add_option("--decoder", decoder, "majority, mwpm or both")->check(CLI::IsMember({"majority", "mwpm", "both"}));
  qec->add_option("--blind-length", blind_length, "sequence length for the blind cleanliness");
  qec->add_flag("--live", live, "take cleanliness from a reset simulation instead of the fixed mapping");
  qec->add_option("--live-profile", live_profile, "profile for --live");
  qec->add_option("--checkpoints", checkpoints_text, "matching decode cycles");

  // landscape
  auto* land = app.add_subcommand("landscape", "lambda landscape sweep and classification");
  add_common(land);
  std::string land_seeds = "42..91";
  std::string land_lengths = "4..20:2";
  int land_points = 200;
  land->add_option("--seeds", land_seeds, "seed range A..B");
  land->add_option("--lengths", land_lengths, "lengths");
  land->add_option("--grid-points", land_points, "lambda grid points");

  // threshold
  auto* thr = app.add_subcommand("threshold", "threshold-level extrapolation table");
  add_common(thr);
  double thr_p = 1e-3;
  double eta = kDefaultEta;
  double p_th = kDefaultThreshold;
  std::string thr_distances_text = "3,5,7";
  thr->add_option("--p-phys", thr_p, "physical error rate");
  thr->add_option("--eta", eta, "ancilla noise transfer");
  thr->add_option("--p-th", p_th, "threshold");
  thr->add_option("--distances", thr_distances_text, "odd distances");

  // t1t2
  auto* t1t2 = app.add_subcommand("t1t2", "blind advantage over a T1/T2 grid");
  add_common(t1t2);
  std::string t1t2_seeds = "42..51";
  int t1t2_grid = 8;
  std::size_t t1t2_length = 8;
  long t1t2_shots = 2048;
  std::string t1t2_base = "IQM";
  t1t2->add_option("--seeds", t1t2_seeds, "seed range A..B");
  t1t2->add_option("--grid", t1t2_grid, "points per axis");
  t1t2->add_option("--length", t1t2_length, "sequence length");
  t1t2->add_option("--shots", t1t2_shots, "shots per circuit");
  t1t2->add_option("--base", t1t2_base, "profile supplying gate error and timing");

  // aggregate / decide
  auto* agg = app.add_subcommand("aggregate", "three-pass aggregation of benchmark CSVs");
  add_common(agg);
  std::string inputs_text;
  double f_req = kDefaultFreq;
  agg->add_option("--input", inputs_text, "benchmark CSV files")->required();
  agg->add_option("--f-req", f_req, "required cleanliness")->check(CLI::Range(0.0, 1.0));

  auto* dec = app.add_subcommand("decide", "policy decision matrix");
  add_common(dec);
  std::string previous;
  dec->add_option("--input", inputs_text, "benchmark CSV files")->required();
  dec->add_option("--previous", previous, "CSV from an earlier epoch");
  dec->add_option("--f-req", f_req, "required cleanliness")->check(CLI::Range(0.0, 1.0));

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  const fs::path dir(out_dir);
  try {
    if (!fs::exists(dir)) fs::create_directories(dir);
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  try {
    if (*sweep) {
      SweepConfig cfg;
      cfg.profiles = resolve_profiles(profile_file, split_list(backends_text));
      cfg.methods.clear();
      for (const auto& m : split_list(methods_text)) cfg.methods.push_back(parse_method(m));
      const SeedRange sr = parse_seeds(seeds_text);
      cfg.first_seed = sr.first;
      cfg.seeds = sr.count;
      cfg.lengths = parse_lengths(lengths_text);
      cfg.shots = shots;
      cfg.grid.points = grid_points;
      cfg.workers = workers;
      cfg.validate();
      std::cerr << "sweep: " << cfg.profiles.size() * cfg.methods.size() * cfg.lengths.size() * cfg.seeds
                << " cells on " << workers << " worker(s)\n";
      const auto outcomes = run_sweep(cfg);
      const auto rows = stamp_rows(outcomes, utc_timestamp());
      emit(dir / output, "sweep", cfg.canonical_text(), [&](std::ostream& os) { write_rows(os, rows); });
      const auto rep = aggregate(rows, kDefaultFreq, cfg.profiles);
      std::cout << "backend,method,L,n,mean_p_zero,ci_lo,ci_hi\n";
      for (const auto& s : rep.pass1) {
        std::cout << s.backend << ',' << method_name(s.method) << ',' << s.length << ',' << s.n << ','
                  << fmt(s.mean_p_zero) << ',' << fmt(s.p_zero_ci.lo) << ',' << fmt(s.p_zero_ci.hi) << "\n";
      }
    } else if (*latency) {
      std::vector<PlatformProfile> profs{profiles::iqm(), profiles::rigetti(), profiles::ionq(),
                                         profiles::nvqlink().with_t_ext(parse_duration(t_ext_text))};
      if (!profile_file.empty()) {
        for (const auto& p : load_profiles(profile_file)) profs.push_back(p);
      }
      for (const auto& p : profs) p.validate();
      const auto rows = latency_table(profs);
      std::ostringstream cfg;
      for (const auto& p : profs) cfg << p.to_config_text();
      cfg << "sweep_max=" << sweep_max_text << "\nsweep_step=" << sweep_step_text << "\n";
      emit(dir / "latency.csv", "latency", cfg.str(), [&](std::ostream& os) { write_latency_csv(os, rows); });

      const double t_max = parse_duration(sweep_max_text);
      const double t_step = parse_duration(sweep_step_text);
      if (!(t_step > 0.0) || t_max < 0.0) throw std::invalid_argument("sweep step must be > 0");
      std::vector<double> ts;
      for (int i = 0; i * t_step <= t_max * (1 + 1e-12); ++i) ts.push_back(i * t_step);
      std::vector<std::pair<std::string, std::vector<CrossoverPoint>>> series;
      for (const auto& base : {profiles::iqm(), profiles::rigetti(), profiles::ionq()}) {
        series.emplace_back(base.name, ext_sweep(base, ts));
      }
      emit(dir / "ext_sweep.csv", "latency", cfg.str(), [&](std::ostream& os) { write_ext_sweep_csv(os, series); });
      std::cout << "profile        t_gate   T_meas     L*   ratio\n";
      for (const auto& r : rows) {
        std::printf("%-12s %6.0fns %7.0fns %5zu   %s\n", r.profile.c_str(), r.t_gate * 1e9, r.t_meas * 1e9, r.l_star,
                    r.ratio ? (fmt(*r.ratio, 3) + "x").c_str() : "-");
      }
    } else if (*qec) {
      const SeedRange sr = parse_seeds(qec_seeds);
      std::map<ResetMethod, double> f_clean{
          {ResetMethod::MeasurementReset, policy_f_clean(ResetMethod::MeasurementReset)},
          {ResetMethod::BlindReset, policy_f_clean(ResetMethod::BlindReset, blind_length)},
          {ResetMethod::NoReset, policy_f_clean(ResetMethod::NoReset)}};
      if (live) {
        const PlatformProfile p = resolve_profiles(profile_file, {live_profile}).front();
        for (auto& [m, f] : f_clean) {
          double sum = 0.0;
          for (int s = 0; s < sr.count; ++s) sum += run_cell(p, m, sr.first + s, blind_length, 2048).p_zero;
          f = sum / sr.count;
        }
      }
      const std::vector<int> distances = parse_ints(distances_text);
      const std::vector<int> checkpoints = parse_ints(checkpoints_text);
      std::vector<Decoder> decoders;
      if (decoder != "mwpm") decoders.push_back(Decoder::MajorityVote);
      if (decoder != "majority") decoders.push_back(Decoder::Mwpm);

      std::ostringstream cfgtext;
      cfgtext << "cycles=" << cycles << "\nseeds=" << qec_seeds << "\nshots=" << qec_shots
              << "\np_phys=" << fmt(p_phys, 17) << "\nlive=" << live << "\n";
      for (int d : distances) cfgtext << "distance=" << d << "\n";
      for (int c : checkpoints) cfgtext << "checkpoint=" << c << "\n";
      for (const auto& [m, f] : f_clean) cfgtext << method_name(m) << "=" << fmt(f, 17) << "\n";

      std::cout << "decoder,distance,policy,f_clean,final_logical_error,ci_lo,ci_hi\n";
      for (Decoder dd : decoders) {
        std::vector<QecRunResult> runs;
        for (int d : distances) {
          for (ResetMethod m : {ResetMethod::MeasurementReset, ResetMethod::BlindReset, ResetMethod::NoReset}) {
            RepCodeConfig rc;
            rc.distance = d;
            rc.cycles = cycles;
            rc.p_phys = p_phys;
            rc.method = m;
            rc.f_clean = f_clean[m];
            rc.seeds = sr.count;
            rc.first_seed = sr.first;
            rc.shots = qec_shots;
            rc.decoder = dd;
            rc.checkpoints = checkpoints;
            rc.workers = workers;
            std::cerr << "qec: " << decoder_name(dd) << " d=" << d << " " << method_name(m) << "\n";
            runs.push_back(logical_error_curve(rc));
            const auto f = runs.back().final_point();
            std::cout << decoder_name(dd) << ',' << d << ',' << method_name(m) << ',' << fmt(rc.f_clean) << ','
                      << fmt(f.logical_error) << ',' << fmt(f.ci_lo) << ',' << fmt(f.ci_hi) << "\n";
          }
        }
        const std::string name = "qec_" + std::string(decoder_name(dd)) + ".csv";
        emit(dir / name, "qec " + std::string(decoder_name(dd)), cfgtext.str(),
             [&](std::ostream& os) { write_qec_csv(os, runs); });
      }
    } else if (*land) {
      const SeedRange sr = parse_seeds(land_seeds);
      const auto lengths = parse_lengths(land_lengths);
      LambdaGrid grid = kLandscapeGrid;
      grid.points = land_points;
      const auto cells = landscape_cells(sr.first, sr.count, lengths, workers, grid);
      std::ostringstream cfgtext;
      cfgtext << "seeds=" << land_seeds << "\nlengths=" << land_lengths << "\ngrid_points=" << land_points << "\n";
      emit(dir / "landscape.csv", "landscape", cfgtext.str(), [&](std::ostream& os) { write_landscape_csv(os, cells); });
      std::cout << "L,n,mean_eps_opt,ci_lo,ci_hi,sd_eps,mean_kappa,sd_kappa,sharp,moderate,flat,multimodal\n";
      for (const auto& a : landscape_report(cells)) {
        std::cout << a.length << ',' << a.n << ',' << fmt(a.mean_epsilon) << ',' << fmt(a.epsilon_ci.lo) << ','
                  << fmt(a.epsilon_ci.hi) << ',' << fmt(a.sd_epsilon) << ',' << fmt(a.mean_kappa) << ','
                  << fmt(a.sd_kappa);
        for (double f : a.class_fraction) std::cout << ',' << fmt(f, 3);
        std::cout << "\n";
      }
    } else if (*thr) {
      const std::vector<int> thr_distances = parse_ints(thr_distances_text);
      const auto policies = default_threshold_policies();
      const auto rows = threshold_table(thr_p, eta, p_th, policies, thr_distances);
      std::ostringstream cfgtext;
      cfgtext << "p_phys=" << fmt(thr_p, 17) << "\neta=" << fmt(eta, 17) << "\np_th=" << fmt(p_th, 17) << "\n";
      for (int d : thr_distances) cfgtext << "distance=" << d << "\n";
      emit(dir / "threshold.csv", "threshold", cfgtext.str(), [&](std::ostream& os) { write_threshold_csv(os, rows); });
      std::cout << "method             f_clean  p_eff     ";
      for (int d : thr_distances) std::cout << "p_L(d=" << d << ")  ";
      std::cout << "\n";
      for (const auto& r : rows) {
        std::printf("%-18s %.2f     %-9s ", r.label.c_str(), r.f_clean, fmt(r.p_eff, 3).c_str());
        for (double v : r.p_logical) std::printf("%-10s ", fmt(v, 3).c_str());
        std::printf("\n");
      }
    } else if (*t1t2) {
      T1T2Config cfg;
      cfg.base = resolve_profiles(profile_file, {t1t2_base}).front();
      const SeedRange sr = parse_seeds(t1t2_seeds);
      cfg.first_seed = sr.first;
      cfg.seeds = sr.count;
      cfg.grid = t1t2_grid;
      cfg.length = t1t2_length;
      cfg.shots = t1t2_shots;
      cfg.workers = workers;
      const auto cells = t1t2_sweep(cfg);
      emit(dir / "t1t2.csv", "t1t2", cfg.canonical_text(), [&](std::ostream& os) { write_t1t2_csv(os, cells); });
      int valid = 0;
      int positive = 0;
      double worst = 1.0;
      for (const auto& c : cells) {
        if (!c.valid) continue;
        ++valid;
        positive += c.advantage > 0.0;
        worst = std::min(worst, c.advantage);
      }
      std::cout << "valid_cells=" << valid << " positive=" << positive << " min_advantage=" << fmt(worst) << "\n";
    } else if (*agg || *dec) {
      const std::vector<std::string> inputs = split_list(inputs_text);
      std::vector<ResultRow> rows;
      for (const auto& in : inputs) {
        auto part = read_rows(fs::path(in));
        rows.insert(rows.end(), part.begin(), part.end());
      }
      std::vector<PlatformProfile> profs;
      if (!profile_file.empty()) profs = load_profiles(profile_file);
      const auto rep = aggregate(rows, f_req, profs);
      if (*agg) {
        std::cout << "# pass 1\nbackend,method,L,n,mean_p_zero,ci_lo,ci_hi,mean_p_x,mean_unitary_error\n";
        for (const auto& s : rep.pass1) {
          std::cout << s.backend << ',' << method_name(s.method) << ',' << s.length << ',' << s.n << ','
                    << fmt(s.mean_p_zero) << ',' << fmt(s.p_zero_ci.lo) << ',' << fmt(s.p_zero_ci.hi) << ','
                    << fmt(s.mean_p_x) << ',' << fmt(s.mean_unitary_error) << "\n";
        }
        std::cout << "# pass 2\nmethod,L,n_matched,ranking\n";
        for (const auto& c : rep.pass2) {
          std::cout << method_name(c.method) << ',' << c.length << ',' << c.n_matched << ',';
          for (std::size_t i = 0; i < c.ranking.size(); ++i) {
            std::cout << (i ? ">" : "") << c.ranking[i] << "(" << fmt(c.mean_p_zero.at(c.ranking[i])) << ")";
          }
          std::cout << "\n";
        }
        std::cout << "# pass 3\nbackend,L,f_clean,bin\n";
        for (const auto& b : rep.pass3) {
          std::cout << b.backend << ',' << b.length << ',' << fmt(b.f_clean) << ',' << bin_name(b.bin) << "\n";
        }
        std::cout << "# completeness\n";
        for (const auto& [b, label] : rep.completeness) std::cout << b << ',' << label << "\n";
      } else {
        std::unique_ptr<AggregateReport> prev;
        if (!previous.empty()) {
          const auto prev_rows = read_rows(fs::path(previous));
          prev = std::make_unique<AggregateReport>(aggregate(prev_rows, f_req, profs));
        }
        const auto cells = decision_matrix(rep, f_req, prev.get());
        std::ostringstream cfgtext;
        for (const auto& in : inputs) cfgtext << "input=" << in << "\n";
        cfgtext << "previous=" << previous << "\nf_req=" << fmt(f_req, 17) << "\n";
        emit(dir / "decision.csv", "decide", cfgtext.str(), [&](std::ostream& os) { write_decision_csv(os, cells); });
        write_decision_csv(std::cout, cells);
      }
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
