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

// Repetition-code memory experiments under phenomenological noise, where the
// ancilla's reset quality sets the syndrome record error rate.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blindreset/matching.hpp"
#include "blindreset/reset.hpp"
#include "blindreset/rng.hpp"

namespace blindreset {

enum class Decoder : std::uint8_t { MajorityVote = 0, Mwpm = 1 };

/// "majority" or "mwpm".
std::string_view decoder_name(Decoder decoder);
Decoder parse_decoder(std::string_view text);

struct RepCodeConfig {
  int distance = 3;
  int cycles = 20;
  double p_phys = 1e-3;
  ResetMethod method = ResetMethod::MeasurementReset;
  double f_clean = 0.99;
  int seeds = 50;
  long shots = 1000;
  std::uint64_t first_seed = 42;
  Decoder decoder = Decoder::MajorityVote;
  /// Cycles at which the matching decoder reads out and decodes. Empty means
  /// every fifth cycle plus the last one. The majority decoder reports every cycle.
  std::vector<int> checkpoints;
  unsigned workers = 1;

  void validate() const;
};

/// p + 0.3 (1 - f_clean), clamped to [0, 1].
double syndrome_noise(double f_clean, double p_phys);

/// Fixed cleanliness used for each policy in decoder runs: 0.99 for
/// measurement reset, 0.50 for no reset, and the single-window IQM blind
/// reset means for blind reset (interpolated linearly in L).
double policy_f_clean(ResetMethod method, std::size_t length = 4);

struct CycleHistory {
  std::vector<Bits> syndromes;  // cycles rows of d - 1 records
  Bits data;                    // true data errors after the last cycle
  Bits final_readout;           // data with readout flips
};

/// Passive memory experiment: each cycle flips every data bit with p_phys,
/// then records the d - 1 parities, each flipped with syndrome_noise. The
/// final transversal readout flips each data bit with p_phys.
CycleHistory simulate_cycles(const RepCodeConfig& cfg, Stream& stream);

/// Majority of an odd number of bits. Throws on even length.
int majority_vote_decode(const Bits& readout);

/// Minimum-weight data pattern with the given parities: the lighter of the
/// two patterns consistent with `syndrome`.
Bits lookup_correction(const Bits& syndrome);

struct CyclePoint {
  int cycle = 0;
  double logical_error = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

struct QecRunResult {
  std::string policy;
  int distance = 0;
  Decoder decoder = Decoder::MajorityVote;
  double f_clean = 0.0;
  std::vector<CyclePoint> points;
  double final_error = 0.0;
  CyclePoint final_point() const { return points.back(); }
};

/// Monte Carlo over seeds x shots. Each seed contributes its shot average and
/// the interval is a 95% bootstrap over seeds.
///  - MajorityVote: every cycle corrects the data with the syndrome lookup
///    and a fresh noisy readout is decoded by majority.
///  - Mwpm: the passive history up to each checkpoint, closed by a noisy
///    readout, is matched and the corrected readout decoded by majority.
QecRunResult logical_error_curve(const RepCodeConfig& cfg);

/// p_phys + eta (1 - f_clean).
double effective_error(double p_phys, double f_clean, double eta);

inline constexpr double kDefaultEta = 0.02;
inline constexpr double kDefaultThreshold = 0.029;

struct ThresholdPolicy {
  std::string label;
  double f_clean = 0.0;
};

struct ThresholdRow {
  std::string label;
  double f_clean = 0.0;
  double p_eff = 0.0;
  std::vector<int> distances;
  std::vector<double> p_logical;  // normalized, one per distance
};

/// (p_eff / p_th)^((d + 1) / 2) for every policy and distance, divided by the
/// value of the first policy at d = 3.
std::vector<ThresholdRow> threshold_table(double p_phys, double eta, double p_th,
                                          std::span<const ThresholdPolicy> policies,
                                          std::span<const int> distances);

/// Measurement reset 0.98, blind reset (L = 4) 0.88, no reset 0.70.
std::vector<ThresholdPolicy> default_threshold_policies();

}  // namespace blindreset
