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

#include "blindreset/qec.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "blindreset/parallel.hpp"
#include "blindreset/stats.hpp"

namespace blindreset {

namespace {

constexpr std::uint64_t kQecTag = 0x5245504f53495421;
constexpr std::uint64_t kCiTag = 0x424f4f5453545250;
constexpr double kSyndromeTransfer = 0.3;

// Blind reset cleanliness at IQM, one window, by sequence length.
constexpr std::array<std::pair<int, double>, 5> kBlindWindowMeans{
    {{4, 0.880}, {8, 0.767}, {12, 0.706}, {16, 0.655}, {20, 0.709}}};

void flip_each(Bits& bits, double p, Stream& stream) {
  for (auto& b : bits) b ^= static_cast<std::uint8_t>(bernoulli(stream, p));
}

Bits noisy_parities(const Bits& data, double q, Stream& stream) {
  Bits s = parities(data);
  flip_each(s, q, stream);
  return s;
}

Bits noisy_readout(const Bits& data, double p, Stream& stream) {
  Bits r = data;
  flip_each(r, p, stream);
  return r;
}

std::vector<int> resolve_checkpoints(const RepCodeConfig& cfg) {
  std::vector<int> cps;
  if (cfg.decoder == Decoder::MajorityVote) {
    for (int c = 1; c <= cfg.cycles; ++c) cps.push_back(c);
    return cps;
  }
  if (cfg.checkpoints.empty()) {
    for (int c = 5; c < cfg.cycles; c += 5) cps.push_back(c);
    cps.push_back(cfg.cycles);
  } else {
    cps = cfg.checkpoints;
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
  }
  return cps;
}

// Logical failures per checkpoint for one shot of the feedback pipeline.
void run_majority_shot(const RepCodeConfig& cfg, double q, Stream& stream, std::vector<long>& fails) {
  Bits e(cfg.distance, 0);
  for (int c = 0; c < cfg.cycles; ++c) {
    flip_each(e, cfg.p_phys, stream);
    const Bits corr = lookup_correction(noisy_parities(e, q, stream));
    for (int i = 0; i < cfg.distance; ++i) e[i] ^= corr[i];
    fails[c] += majority_vote_decode(noisy_readout(e, cfg.p_phys, stream));
  }
}

void run_matching_shot(const RepCodeConfig& cfg, double q, const std::vector<int>& cps, Stream& stream,
                       std::vector<long>& fails) {
  Bits e(cfg.distance, 0);
  std::vector<Bits> rounds;
  rounds.reserve(cfg.cycles);
  std::size_t next = 0;
  for (int c = 1; c <= cfg.cycles && next < cps.size(); ++c) {
    flip_each(e, cfg.p_phys, stream);
    rounds.push_back(noisy_parities(e, q, stream));
    if (cps[next] != c) continue;
    Bits readout = noisy_readout(e, cfg.p_phys, stream);
    const MatchingResult m = mwpm_proxy_decode(rounds, cfg.distance, &readout);
    for (int i = 0; i < cfg.distance; ++i) readout[i] ^= m.correction[i];
    fails[next] += majority_vote_decode(readout);
    ++next;
  }
}

}  // namespace

std::string_view decoder_name(Decoder decoder) {
  return decoder == Decoder::Mwpm ? "mwpm" : "majority";
}

Decoder parse_decoder(std::string_view text) {
  if (text == "majority") return Decoder::MajorityVote;
  if (text == "mwpm") return Decoder::Mwpm;
  throw std::invalid_argument("unknown decoder '" + std::string(text) + "'");
}

void RepCodeConfig::validate() const {
  if (distance < 3 || distance % 2 == 0) throw std::invalid_argument("distance must be odd and >= 3");
  if (cycles < 1) throw std::invalid_argument("cycles must be >= 1");
  if (!(p_phys >= 0.0 && p_phys < 0.5)) throw std::invalid_argument("p_phys must lie in [0, 0.5)");
  if (!(f_clean >= 0.0 && f_clean <= 1.0)) throw std::invalid_argument("f_clean must lie in [0, 1]");
  if (seeds < 1) throw std::invalid_argument("seeds must be >= 1");
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  for (int c : checkpoints) {
    if (c < 1 || c > cycles) throw std::invalid_argument("checkpoint outside [1, cycles]");
  }
}

double syndrome_noise(double f_clean, double p_phys) {
  return std::clamp(p_phys + kSyndromeTransfer * (1.0 - f_clean), 0.0, 1.0);
}

double policy_f_clean(ResetMethod method, std::size_t length) {
  switch (method) {
    case ResetMethod::MeasurementReset: return 0.99;
    case ResetMethod::NoReset: return 0.50;
    case ResetMethod::BlindReset: break;
  }
  const auto l = static_cast<double>(length);
  if (l <= kBlindWindowMeans.front().first) return kBlindWindowMeans.front().second;
  if (l >= kBlindWindowMeans.back().first) return kBlindWindowMeans.back().second;
  for (std::size_t i = 1; i < kBlindWindowMeans.size(); ++i) {
    const auto [l1, f1] = kBlindWindowMeans[i];
    if (l <= l1) {
      const auto [l0, f0] = kBlindWindowMeans[i - 1];
      return f0 + (f1 - f0) * (l - l0) / (l1 - l0);
    }
  }
  return kBlindWindowMeans.back().second;
}

CycleHistory simulate_cycles(const RepCodeConfig& cfg, Stream& stream) {
  cfg.validate();
  const double q = syndrome_noise(cfg.f_clean, cfg.p_phys);
  CycleHistory h;
  h.data.assign(cfg.distance, 0);
  h.syndromes.reserve(cfg.cycles);
  for (int c = 0; c < cfg.cycles; ++c) {
    flip_each(h.data, cfg.p_phys, stream);
    h.syndromes.push_back(noisy_parities(h.data, q, stream));
  }
  h.final_readout = noisy_readout(h.data, cfg.p_phys, stream);
  return h;
}

int majority_vote_decode(const Bits& readout) {
  if (readout.empty() || readout.size() % 2 == 0) {
    throw std::invalid_argument("majority_vote_decode: need an odd number of bits");
  }
  std::size_t ones = 0;
  for (auto b : readout) ones += b ? 1 : 0;
  return 2 * ones > readout.size() ? 1 : 0;
}

Bits lookup_correction(const Bits& syndrome) {
  Bits c(syndrome.size() + 1, 0);
  std::size_t weight = 0;
  for (std::size_t i = 0; i < syndrome.size(); ++i) {
    c[i + 1] = c[i] ^ syndrome[i];
    weight += c[i + 1];
  }
  if (2 * weight > c.size()) {
    for (auto& b : c) b ^= 1;
  }
  return c;
}

QecRunResult logical_error_curve(const RepCodeConfig& cfg) {
  cfg.validate();
  const double q = syndrome_noise(cfg.f_clean, cfg.p_phys);
  const std::vector<int> cps = resolve_checkpoints(cfg);

  // per_seed[s][k]: failure fraction of seed s at checkpoint k.
  std::vector<std::vector<double>> per_seed(cfg.seeds);
  parallel_for(static_cast<std::size_t>(cfg.seeds), cfg.workers, [&](std::size_t s) {
    const std::uint64_t seed = cfg.first_seed + s;
    Stream stream = derive_stream({kQecTag, seed, static_cast<std::uint64_t>(cfg.distance),
                                   static_cast<std::uint64_t>(cfg.cycles),
                                   static_cast<std::uint64_t>(cfg.decoder)});
    std::vector<long> fails(cps.size(), 0);
    for (long shot = 0; shot < cfg.shots; ++shot) {
      if (cfg.decoder == Decoder::MajorityVote) {
        run_majority_shot(cfg, q, stream, fails);
      } else {
        run_matching_shot(cfg, q, cps, stream, fails);
      }
    }
    auto& out = per_seed[s];
    out.resize(cps.size());
    for (std::size_t k = 0; k < cps.size(); ++k) out[k] = static_cast<double>(fails[k]) / cfg.shots;
  });

  QecRunResult res;
  res.policy = std::string(method_name(cfg.method));
  res.distance = cfg.distance;
  res.decoder = cfg.decoder;
  res.f_clean = cfg.f_clean;
  std::vector<double> column(cfg.seeds);
  for (std::size_t k = 0; k < cps.size(); ++k) {
    for (int s = 0; s < cfg.seeds; ++s) column[s] = per_seed[s][k];
    CyclePoint pt;
    pt.cycle = cps[k];
    pt.logical_error = stats::mean(column);
    if (cfg.seeds >= 2) {
      Stream ci_stream = derive_stream({kCiTag, cfg.first_seed, static_cast<std::uint64_t>(cfg.seeds),
                                        static_cast<std::uint64_t>(cps[k])});
      const stats::Interval ci = stats::bootstrap_ci(column, ci_stream);
      pt.ci_lo = ci.lo;
      pt.ci_hi = ci.hi;
    } else {
      pt.ci_lo = pt.ci_hi = pt.logical_error;
    }
    res.points.push_back(pt);
  }
  res.final_error = res.points.back().logical_error;
  return res;
}

double effective_error(double p_phys, double f_clean, double eta) {
  if (!(p_phys >= 0.0 && p_phys <= 1.0)) throw std::invalid_argument("effective_error: p_phys must lie in [0, 1]");
  if (!(f_clean >= 0.0 && f_clean <= 1.0)) throw std::invalid_argument("effective_error: f_clean must lie in [0, 1]");
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("effective_error: eta must lie in (0, 1)");
  return p_phys + eta * (1.0 - f_clean);
}

std::vector<ThresholdRow> threshold_table(double p_phys, double eta, double p_th,
                                          std::span<const ThresholdPolicy> policies,
                                          std::span<const int> distances) {
  if (!(p_th > 0.0)) throw std::invalid_argument("threshold_table: p_th must be > 0");
  if (policies.empty()) throw std::invalid_argument("threshold_table: no policies");
  for (int d : distances) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("threshold_table: distances must be odd and >= 3");
  }
  auto scaling = [&](double p_eff, int d) { return std::pow(p_eff / p_th, (d + 1) / 2.0); };
  const double anchor = scaling(effective_error(p_phys, policies.front().f_clean, eta), 3);

  std::vector<ThresholdRow> rows;
  for (const auto& pol : policies) {
    ThresholdRow row;
    row.label = pol.label;
    row.f_clean = pol.f_clean;
    row.p_eff = effective_error(p_phys, pol.f_clean, eta);
    row.distances.assign(distances.begin(), distances.end());
    for (int d : distances) row.p_logical.push_back(scaling(row.p_eff, d) / anchor);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ThresholdPolicy> default_threshold_policies() {
  return {{"measurement_reset", 0.98}, {"blind_reset", 0.88}, {"no_reset", 0.70}};
}

}  // namespace blindreset
