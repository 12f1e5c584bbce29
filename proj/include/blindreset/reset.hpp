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

// Per-window ancilla reset policies and the lambda calibration they use.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "blindreset/channels.hpp"
#include "blindreset/platform.hpp"
#include "blindreset/su2.hpp"

namespace blindreset {

enum class ResetMethod : std::uint8_t { NoReset = 0, MeasurementReset = 1, BlindReset = 2 };

/// CSV token: "no_reset", "measurement_reset", "blind_reset".
std::string_view method_name(ResetMethod method);
/// Accepts the CSV tokens; throws std::invalid_argument otherwise.
ResetMethod parse_method(std::string_view text);

struct LambdaGrid {
  int points = 40;
  double min = 0.1;
  double max = 4.0;

  double at(int i) const { return min + (max - min) * i / (points - 1); }
  double step() const { return (max - min) / (points - 1); }
};

/// Benchmark grid and landscape grid on [0.1, 4.0].
inline constexpr LambdaGrid kBenchmarkGrid{40, 0.1, 4.0};
inline constexpr LambdaGrid kLandscapeGrid{200, 0.1, 4.0};

struct LambdaOptimum {
  double lambda = 0.0;
  double epsilon = 0.0;
};

/// Grid point minimizing residual_error(scale_and_double(seq, lambda), compose(seq)).
/// Ties go to the smaller lambda.
LambdaOptimum optimize_lambda(const GateSequence& seq, const LambdaGrid& grid = kBenchmarkGrid,
                              ResidualMode mode = ResidualMode::Exact);

struct ResetOutcome {
  std::string backend;
  ResetMethod method = ResetMethod::NoReset;
  std::uint64_t seed = 0;
  std::size_t sequence_length = 0;
  double p_zero = 0.0;
  double p_x = 0.0;
  double unitary_error = 0.0;
  std::optional<double> lambda_used;  // empty for measurement reset
  long shots = 0;
};

/// Post-reset ancilla state (before readout) for one policy.
///  - NoReset: the base sequence followed by the unscaled replay block R(1),
///    i.e. the same circuit shape as blind reset with lambda = 1.
///  - MeasurementReset: base sequence, projective Z readout with confusion,
///    noisy conditional X on a 1 record, then relaxation over t_meas_total.
///  - BlindReset: base sequence followed by the replay block at `lambda`.
DensityMatrix post_reset_state(const GateSequence& seq, ResetMethod method,
                               const PlatformProfile& profile, double lambda = 1.0);

/// One (backend, method, seed, L) cell. For blind reset `lambda` must come from
/// an offline optimize_lambda run on the noiseless unitary. Z and X records
/// are drawn from two independent substreams of `stream`.
ResetOutcome run_reset_cycle(const GateSequence& seq, ResetMethod method,
                             const PlatformProfile& profile, long shots, Stream& stream,
                             std::optional<LambdaOptimum> calibration = std::nullopt);

/// 1/2 + [(1 - eps)^2 - 1/2] (1 - p)^{2L}, clamped to [0, 1].
double envelope(double epsilon, double p, std::size_t length);

struct EnvelopeVerdict {
  bool violation = false;
  double delta = 0.0;  // p_zero - envelope - margin; positive when violated
  double bound = 0.0;  // envelope value
};

inline constexpr double kEnvelopeMargin = 0.05;

/// Screens a blind-reset outcome against the envelope at the profile's gate error.
EnvelopeVerdict envelope_check(const ResetOutcome& outcome, double gate_error_p,
                               double margin = kEnvelopeMargin);

}  // namespace blindreset
