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

// Cleanliness sweeps over (backend, method, seed, length) cells.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blindreset/platform.hpp"
#include "blindreset/reset.hpp"

namespace blindreset {

std::vector<std::size_t> default_lengths();  // 4, 6, ..., 20

struct SweepConfig {
  std::vector<PlatformProfile> profiles;
  std::vector<ResetMethod> methods{ResetMethod::NoReset, ResetMethod::MeasurementReset,
                                   ResetMethod::BlindReset};
  std::uint64_t first_seed = 42;
  int seeds = 50;
  std::vector<std::size_t> lengths = default_lengths();
  long shots = 2048;
  LambdaGrid grid = kBenchmarkGrid;
  unsigned workers = 1;

  void validate() const;
  /// Canonical text of everything that affects results. The worker count
  /// is left out.
  std::string canonical_text() const;
};

/// IQM, Rigetti and IonQ.
std::vector<PlatformProfile> default_sweep_profiles();

/// One outcome per cell, ordered by profile, method, length, then seed.
/// Every cell draws from a stream keyed by (profile, seed, length), so all
/// methods on a cell share their random numbers and the output does not
/// depend on the worker count.
std::vector<ResetOutcome> run_sweep(const SweepConfig& cfg);

/// Single cell with the same stream and calibration as run_sweep.
ResetOutcome run_cell(const PlatformProfile& profile, ResetMethod method, std::uint64_t seed,
                      std::size_t length, long shots, const LambdaGrid& grid = kBenchmarkGrid);

struct T1T2Config {
  PlatformProfile base;
  int grid = 8;
  double t1_min = 0.1e-6;
  double t1_max = 100e-6;
  double t2_min = 0.05e-6;
  double t2_max = 50e-6;
  std::size_t length = 8;
  std::uint64_t first_seed = 42;
  int seeds = 10;
  long shots = 2048;
  unsigned workers = 1;

  void validate() const;
  std::string canonical_text() const;
};

struct T1T2Cell {
  double t1 = 0.0;
  double t2 = 0.0;
  bool valid = false;  // T2 <= 2 T1
  double blind_mean = 0.0;
  double no_reset_mean = 0.0;
  double advantage = 0.0;  // blind_mean - no_reset_mean
};

/// Log-spaced grid over (T1, T2). Cells with T2 > 2 T1 are masked and left
/// unsimulated. Row order is T1-major.
std::vector<T1T2Cell> t1t2_sweep(const T1T2Config& cfg);

}  // namespace blindreset
