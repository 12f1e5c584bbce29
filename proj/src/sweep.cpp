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

#include "blindreset/sweep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "blindreset/parallel.hpp"
#include "text_util.hpp"

namespace blindreset {

namespace {

constexpr std::uint64_t kCellTag = 0x43454c4c53545245;

Stream cell_stream(const PlatformProfile& profile, std::uint64_t seed, std::size_t length) {
  return derive_stream({kCellTag, fnv1a64(profile.name), seed, static_cast<std::uint64_t>(length)});
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    out[i] = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> default_lengths() { return {4, 6, 8, 10, 12, 14, 16, 18, 20}; }

std::vector<PlatformProfile> default_sweep_profiles() {
  return {profiles::iqm(), profiles::rigetti(), profiles::ionq()};
}

void SweepConfig::validate() const {
  if (profiles.empty()) throw std::invalid_argument("sweep: no profiles");
  if (methods.empty()) throw std::invalid_argument("sweep: no methods");
  if (seeds < 1) throw std::invalid_argument("sweep: seeds must be >= 1");
  if (lengths.empty()) throw std::invalid_argument("sweep: no lengths");
  for (auto l : lengths) {
    if (l == 0) throw std::invalid_argument("sweep: lengths must be >= 1");
  }
  if (shots < 1) throw std::invalid_argument("sweep: shots must be >= 1");
  for (const auto& p : profiles) p.validate();
}

std::string SweepConfig::canonical_text() const {
  std::ostringstream os;
  os << "seeds=" << first_seed << ".." << first_seed + seeds - 1 << "\n";
  os << "lengths=";
  for (std::size_t i = 0; i < lengths.size(); ++i) os << (i ? "," : "") << lengths[i];
  os << "\nmethods=";
  for (std::size_t i = 0; i < methods.size(); ++i) os << (i ? "," : "") << method_name(methods[i]);
  os << "\nshots=" << shots << "\n";
  os << "grid=" << grid.points << "," << detail::format_g(grid.min) << "," << detail::format_g(grid.max) << "\n";
  for (const auto& p : profiles) os << p.to_config_text();
  return os.str();
}

ResetOutcome run_cell(const PlatformProfile& profile, ResetMethod method, std::uint64_t seed,
                      std::size_t length, long shots, const LambdaGrid& grid) {
  const GateSequence seq = generate_sequence(seed, length);
  Stream stream = cell_stream(profile, seed, length);
  std::optional<LambdaOptimum> cal;
  if (method == ResetMethod::BlindReset) cal = optimize_lambda(seq, grid);
  return run_reset_cycle(seq, method, profile, shots, stream, cal);
}

std::vector<ResetOutcome> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::size_t n_seed = static_cast<std::size_t>(cfg.seeds);
  const std::size_t n_len = cfg.lengths.size();
  const std::size_t n_method = cfg.methods.size();
  std::vector<ResetOutcome> out(cfg.profiles.size() * n_method * n_len * n_seed);
  parallel_for(out.size(), cfg.workers, [&](std::size_t i) {
    const std::size_t seed_i = i % n_seed;
    const std::size_t len_i = (i / n_seed) % n_len;
    const std::size_t method_i = (i / (n_seed * n_len)) % n_method;
    const std::size_t prof_i = i / (n_seed * n_len * n_method);
    out[i] = run_cell(cfg.profiles[prof_i], cfg.methods[method_i], cfg.first_seed + seed_i,
                      cfg.lengths[len_i], cfg.shots, cfg.grid);
  });
  return out;
}

void T1T2Config::validate() const {
  if (grid < 2) throw std::invalid_argument("t1t2: grid must be >= 2");
  if (!(t1_min > 0.0 && t1_min < t1_max)) throw std::invalid_argument("t1t2: need 0 < t1_min < t1_max");
  if (!(t2_min > 0.0 && t2_min < t2_max)) throw std::invalid_argument("t1t2: need 0 < t2_min < t2_max");
  if (length == 0) throw std::invalid_argument("t1t2: length must be >= 1");
  if (seeds < 1 || shots < 1) throw std::invalid_argument("t1t2: seeds and shots must be >= 1");
}

std::string T1T2Config::canonical_text() const {
  std::ostringstream os;
  os << "grid=" << grid << "\nT1=" << detail::format_g(t1_min) << ".." << detail::format_g(t1_max)
     << "\nT2=" << detail::format_g(t2_min) << ".." << detail::format_g(t2_max) << "\nlength=" << length
     << "\nseeds=" << first_seed << ".." << first_seed + seeds - 1 << "\nshots=" << shots << "\n"
     << base.to_config_text();
  return os.str();
}

std::vector<T1T2Cell> t1t2_sweep(const T1T2Config& cfg) {
  cfg.validate();
  const auto t1s = log_grid(cfg.t1_min, cfg.t1_max, cfg.grid);
  const auto t2s = log_grid(cfg.t2_min, cfg.t2_max, cfg.grid);
  std::vector<T1T2Cell> cells(t1s.size() * t2s.size());
  parallel_for(cells.size(), cfg.workers, [&](std::size_t i) {
    T1T2Cell& c = cells[i];
    c.t1 = t1s[i / t2s.size()];
    c.t2 = t2s[i % t2s.size()];
    c.valid = c.t2 <= 2.0 * c.t1;
    if (!c.valid) return;
    PlatformProfile p = cfg.base;
    p.t1 = c.t1;
    p.t2 = c.t2;
    double blind = 0.0;
    double none = 0.0;
    for (int s = 0; s < cfg.seeds; ++s) {
      const std::uint64_t seed = cfg.first_seed + s;
      blind += run_cell(p, ResetMethod::BlindReset, seed, cfg.length, cfg.shots).p_zero;
      none += run_cell(p, ResetMethod::NoReset, seed, cfg.length, cfg.shots).p_zero;
    }
    c.blind_mean = blind / cfg.seeds;
    c.no_reset_mean = none / cfg.seeds;
    c.advantage = c.blind_mean - c.no_reset_mean;
  });
  return cells;
}

}  // namespace blindreset
