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

#include "blindreset/landscape.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "blindreset/parallel.hpp"

namespace blindreset {

namespace {
constexpr std::uint64_t kLandscapeCiTag = 0x4c414e4453434150;
}

LambdaCurve sweep_lambda(const GateSequence& seq, const LambdaGrid& grid, ResidualMode mode) {
  if (grid.points < 3) throw std::invalid_argument("sweep_lambda: need at least 3 grid points");
  const Unitary base = compose(seq);
  LambdaCurve c;
  c.lambda.resize(grid.points);
  c.epsilon.resize(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    c.lambda[i] = grid.at(i);
    c.epsilon[i] = residual_error(scale_and_double(seq, c.lambda[i]), base, mode);
  }
  return c;
}

std::string_view class_name(LandscapeClass cls) {
  switch (cls) {
    case LandscapeClass::Sharp: return "sharp";
    case LandscapeClass::Moderate: return "moderate";
    case LandscapeClass::Flat: return "flat";
    case LandscapeClass::Multimodal: return "multimodal";
  }
  return "?";
}

LandscapeSummary characterize(const LambdaCurve& curve, std::uint64_t seed, std::size_t length) {
  const std::size_t n = curve.size();
  if (n < 3 || curve.epsilon.size() != n) throw std::invalid_argument("characterize: need at least 3 points");
  const auto& e = curve.epsilon;

  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (e[i] < e[best]) best = i;
  }
  LandscapeSummary s;
  s.seed = seed;
  s.length = length;
  s.lambda_opt = curve.lambda[best];
  s.epsilon_opt = e[best];

  const double h = (curve.lambda.back() - curve.lambda.front()) / static_cast<double>(n - 1);
  const std::size_t c = std::clamp<std::size_t>(best, 1, n - 2);
  double second = 0.0;
  if (best == c) {
    second = e[c - 1] - 2.0 * e[c] + e[c + 1];
  } else if (best == 0) {
    second = e[0] - 2.0 * e[1] + e[2];
  } else {
    second = e[n - 1] - 2.0 * e[n - 2] + e[n - 3];
  }
  s.kappa = second / (h * h);

  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (e[i] < e[i - 1] && e[i] < e[i + 1] && e[i] <= 2.0 * s.epsilon_opt) ++s.n_local_minima;
  }

  if (s.n_local_minima >= 2) {
    s.cls = LandscapeClass::Multimodal;
  } else if (s.kappa > kSharpCurvature) {
    s.cls = LandscapeClass::Sharp;
  } else if (s.kappa > kFlatCurvature) {
    s.cls = LandscapeClass::Moderate;
  } else {
    s.cls = LandscapeClass::Flat;
  }
  return s;
}

LandscapeSummary landscape_cell(std::uint64_t seed, std::size_t length, const LambdaGrid& grid) {
  return characterize(sweep_lambda(generate_sequence(seed, length), grid), seed, length);
}

std::vector<LandscapeSummary> landscape_cells(std::uint64_t first_seed, int seeds,
                                              std::span<const std::size_t> lengths, unsigned workers,
                                              const LambdaGrid& grid) {
  if (seeds < 1 || lengths.empty()) throw std::invalid_argument("landscape_cells: empty input");
  const auto per_length = static_cast<std::size_t>(seeds);
  std::vector<LandscapeSummary> out(lengths.size() * per_length);
  parallel_for(out.size(), workers, [&](std::size_t i) {
    out[i] = landscape_cell(first_seed + i % per_length, lengths[i / per_length], grid);
  });
  return out;
}

std::vector<LandscapeAggregate> landscape_report(std::span<const LandscapeSummary> cells) {
  if (cells.empty()) throw std::invalid_argument("landscape_report: no cells");
  std::map<std::size_t, std::vector<const LandscapeSummary*>> by_length;
  for (const auto& c : cells) by_length[c.length].push_back(&c);

  std::vector<LandscapeAggregate> out;
  for (const auto& [length, group] : by_length) {
    LandscapeAggregate a;
    a.length = length;
    a.n = group.size();
    std::vector<double> eps;
    std::vector<double> kap;
    for (const auto* c : group) {
      eps.push_back(c->epsilon_opt);
      kap.push_back(c->kappa);
      a.class_fraction[static_cast<std::size_t>(c->cls)] += 1.0 / static_cast<double>(a.n);
    }
    a.mean_epsilon = stats::mean(eps);
    a.mean_kappa = stats::mean(kap);
    if (a.n >= 2) {
      a.sd_epsilon = stats::sample_sd(eps);
      a.sd_kappa = stats::sample_sd(kap);
      Stream stream = derive_stream({kLandscapeCiTag, length, a.n});
      a.epsilon_ci = stats::bootstrap_ci(eps, stream);
    } else {
      a.epsilon_ci = {a.mean_epsilon, a.mean_epsilon};
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace blindreset
