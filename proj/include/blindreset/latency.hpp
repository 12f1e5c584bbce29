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

// Closed-form reset timing: blind replay versus the measurement path.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blindreset/platform.hpp"
#include "blindreset/reset.hpp"

namespace blindreset {

struct LatencyBreakdown {
  std::string profile_name;
  std::size_t length = 0;
  double t_blind = 0.0;
  double t_meas = 0.0;
};

/// 2 L t_gate.
double blind_latency(std::size_t length, const PlatformProfile& profile);
/// t_meas_total + t_ext.
double measurement_latency(const PlatformProfile& profile);
LatencyBreakdown latency_breakdown(std::size_t length, const PlatformProfile& profile);

/// a < b, treating values within a relative 1e-12 as equal. Keeps the
/// strict crossover rule stable when every time is rescaled.
bool strictly_faster(double a, double b);

/// Largest L >= 0 with 2 L t_gate strictly below the measurement latency.
std::size_t crossover(const PlatformProfile& profile);

enum class DecisionReason : std::uint8_t { FasterAndClean, TooSlow, TooDirty, RestrictLength };

std::string_view reason_name(DecisionReason reason);

struct PolicyDecision {
  ResetMethod chosen = ResetMethod::MeasurementReset;
  DecisionReason reason = DecisionReason::TooSlow;
};

/// Blind reset iff it is strictly faster and f_clean >= f_req. Timing is
/// checked first. A cleanliness failure reports RestrictLength when a shorter
/// sequence is still possible (L > 1) and TooDirty otherwise.
PolicyDecision decide(std::size_t length, double f_clean, double f_req, const PlatformProfile& profile);

struct CrossoverPoint {
  double t_ext = 0.0;
  std::size_t l_star = 0;
};

/// Crossover for each external feedback term; throws on an empty list.
std::vector<CrossoverPoint> ext_sweep(const PlatformProfile& profile, std::span<const double> t_ext_values);

struct LatencyRow {
  std::string profile;
  double t_gate = 0.0;
  double t_meas = 0.0;
  std::size_t l_star = 0;
  std::optional<double> ratio;  // only for profiles with an external term
};

/// One row per profile. Rows with t_ext > 0 carry the expansion ratio
/// against the same profile at t_ext = 0.
std::vector<LatencyRow> latency_table(std::span<const PlatformProfile> profiles);

}  // namespace blindreset
