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

#include "blindreset/latency.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blindreset {

namespace {
constexpr double kRelTol = 1e-12;
}

double blind_latency(std::size_t length, const PlatformProfile& profile) {
  return 2.0 * static_cast<double>(length) * profile.t_gate;
}

double measurement_latency(const PlatformProfile& profile) {
  return profile.t_meas_total + profile.t_ext;
}

LatencyBreakdown latency_breakdown(std::size_t length, const PlatformProfile& profile) {
  return {profile.name, length, blind_latency(length, profile), measurement_latency(profile)};
}

bool strictly_faster(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return a < b && (b - a) > kRelTol * scale;
}

std::size_t crossover(const PlatformProfile& profile) {
  if (!(profile.t_gate > 0.0)) throw std::invalid_argument("crossover: t_gate must be > 0");
  const double t_meas = measurement_latency(profile);
  // Start from the real-valued crossing and correct for rounding on either side.
  auto guess = static_cast<std::size_t>(std::max(0.0, std::floor(t_meas / (2.0 * profile.t_gate))));
  while (guess > 0 && !strictly_faster(blind_latency(guess, profile), t_meas)) --guess;
  while (strictly_faster(blind_latency(guess + 1, profile), t_meas)) ++guess;
  return guess;
}

std::string_view reason_name(DecisionReason reason) {
  switch (reason) {
    case DecisionReason::FasterAndClean: return "faster_and_clean";
    case DecisionReason::TooSlow: return "too_slow";
    case DecisionReason::TooDirty: return "too_dirty";
    case DecisionReason::RestrictLength: return "restrict_length";
  }
  return "?";
}

PolicyDecision decide(std::size_t length, double f_clean, double f_req, const PlatformProfile& profile) {
  if (!(f_req >= 0.0 && f_req <= 1.0)) throw std::invalid_argument("decide: f_req must lie in [0, 1]");
  if (!strictly_faster(blind_latency(length, profile), measurement_latency(profile))) {
    return {ResetMethod::MeasurementReset, DecisionReason::TooSlow};
  }
  if (!(f_clean >= f_req)) {
    return {ResetMethod::MeasurementReset,
            length > 1 ? DecisionReason::RestrictLength : DecisionReason::TooDirty};
  }
  return {ResetMethod::BlindReset, DecisionReason::FasterAndClean};
}

std::vector<CrossoverPoint> ext_sweep(const PlatformProfile& profile, std::span<const double> t_ext_values) {
  if (t_ext_values.empty()) throw std::invalid_argument("ext_sweep: empty t_ext list");
  std::vector<CrossoverPoint> out;
  out.reserve(t_ext_values.size());
  for (double t : t_ext_values) {
    if (!(t >= 0.0)) throw std::invalid_argument("ext_sweep: t_ext must be >= 0");
    out.push_back({t, crossover(profile.with_t_ext(t))});
  }
  return out;
}

std::vector<LatencyRow> latency_table(std::span<const PlatformProfile> profiles) {
  std::vector<LatencyRow> rows;
  for (const auto& p : profiles) {
    LatencyRow row{p.name, p.t_gate, measurement_latency(p), crossover(p), std::nullopt};
    if (p.t_ext > 0.0) {
      const std::size_t native = crossover(p.with_t_ext(0.0));
      if (native > 0) row.ratio = static_cast<double>(row.l_star) / static_cast<double>(native);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace blindreset
