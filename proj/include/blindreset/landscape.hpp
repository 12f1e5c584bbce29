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

// Shape of the closure residual as a function of the replay scale.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "blindreset/reset.hpp"
#include "blindreset/stats.hpp"
#include "blindreset/su2.hpp"

namespace blindreset {

struct LambdaCurve {
  std::vector<double> lambda;
  std::vector<double> epsilon;
  std::size_t size() const { return lambda.size(); }
};

/// Residual at every point of `grid`, on the noiseless unitary.
LambdaCurve sweep_lambda(const GateSequence& seq, const LambdaGrid& grid = kLandscapeGrid,
                         ResidualMode mode = ResidualMode::Exact);

enum class LandscapeClass : std::uint8_t { Sharp = 0, Moderate = 1, Flat = 2, Multimodal = 3 };

std::string_view class_name(LandscapeClass cls);

inline constexpr double kSharpCurvature = 50.0;
inline constexpr double kFlatCurvature = 5.0;

struct LandscapeSummary {
  std::uint64_t seed = 0;
  std::size_t length = 0;
  double lambda_opt = 0.0;
  double epsilon_opt = 0.0;
  double kappa = 0.0;
  int n_local_minima = 0;
  LandscapeClass cls = LandscapeClass::Flat;
};

/// Second difference of the curve at its minimum divided by the squared grid
/// step (one-sided at either end). Local minima are interior points strictly
/// below both neighbours and within twice the optimum. Two or more minima
/// make the curve multimodal; otherwise kappa > 50 is sharp, kappa > 5
/// moderate, and anything else flat.
LandscapeSummary characterize(const LambdaCurve& curve, std::uint64_t seed, std::size_t length);

/// Curve and summary for the generated sequence (seed, length).
LandscapeSummary landscape_cell(std::uint64_t seed, std::size_t length,
                                const LambdaGrid& grid = kLandscapeGrid);

struct LandscapeAggregate {
  std::size_t length = 0;
  std::size_t n = 0;
  double mean_epsilon = 0.0;
  stats::Interval epsilon_ci;
  double sd_epsilon = 0.0;
  double mean_kappa = 0.0;
  double sd_kappa = 0.0;
  std::array<double, 4> class_fraction{};  // indexed by LandscapeClass
};

/// Every (seed, length) cell, seeds first_seed .. first_seed + seeds - 1.
/// Row order is length-major and independent of `workers`.
std::vector<LandscapeSummary> landscape_cells(std::uint64_t first_seed, int seeds,
                                              std::span<const std::size_t> lengths,
                                              unsigned workers = 1,
                                              const LambdaGrid& grid = kLandscapeGrid);

/// Per-length means, spreads and class fractions of `cells`.
std::vector<LandscapeAggregate> landscape_report(std::span<const LandscapeSummary> cells);

}  // namespace blindreset
