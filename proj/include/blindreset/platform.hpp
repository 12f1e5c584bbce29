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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace blindreset {

/// Coherence, gate-error and timing parameters of one backend class.
/// All times are in seconds.
struct PlatformProfile {
  std::string name;
  double t1 = 0.0;
  double t2 = 0.0;
  double gate_error_p = 0.0;   // depolarizing probability per gate
  double t_gate = 0.0;
  double t_meas_total = 0.0;   // native readout + feedback + preparation
  double readout_error = 0.0;  // symmetric record flip probability
  double t_ext = 0.0;          // external feedback term

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;

  /// Copy with a different external feedback term.
  PlatformProfile with_t_ext(double seconds) const;

  /// Canonical key=value text; stable across runs, used for manifests.
  std::string to_config_text() const;
};

namespace profiles {
PlatformProfile iqm();
PlatformProfile rigetti();
PlatformProfile ionq();
/// IQM timing with a 4 us external feedback path.
PlatformProfile nvqlink();
/// Every rate zero, every coherence time effectively infinite.
PlatformProfile noiseless();

std::vector<PlatformProfile> builtin();
/// Lookup by case-insensitive name; throws std::invalid_argument if unknown.
PlatformProfile by_name(std::string_view name);
}  // namespace profiles

/// Parses "40us", "730 ns", "1e-3s", "10 s", "0.5ms". Bare numbers are seconds.
double parse_duration(std::string_view text);

/// Parses profiles from key=value text. "[name]" headers start a new profile;
/// without headers the text describes one profile and `name=` sets its label.
/// Keys: name, T1, T2, gate_error_p, t_gate, t_meas_total, readout_error, t_ext.
/// '#' starts a comment.
std::vector<PlatformProfile> parse_profiles(std::string_view text);
std::vector<PlatformProfile> load_profiles(const std::filesystem::path& path);

}  // namespace blindreset
