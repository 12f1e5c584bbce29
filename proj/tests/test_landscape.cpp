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

#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"

namespace blindreset {
namespace {

LambdaCurve curve_of(std::vector<double> eps, double lo = 0.0, double h = 0.1) {
  LambdaCurve c;
  for (std::size_t i = 0; i < eps.size(); ++i) c.lambda.push_back(lo + h * i);
  c.epsilon = std::move(eps);
  return c;
}

LambdaCurve parabola(double a, double centre, int n = 41, double h = 0.1) {
  std::vector<double> e;
  for (int i = 0; i < n; ++i) {
    const double x = h * i - centre;
    e.push_back(0.01 + a * x * x);
  }
  return curve_of(e, 0.0, h);
}

TEST(Landscape, SweepMatchesOracle) {
  const auto seq = generate_sequence(42, 8);
  const auto c = sweep_lambda(seq);
  ASSERT_EQ(c.size(), 200u);
  EXPECT_DOUBLE_EQ(c.lambda.front(), 0.1);
  EXPECT_DOUBLE_EQ(c.lambda.back(), 4.0);
  for (std::size_t i = 0; i < c.size(); i += 17) {
    EXPECT_NEAR(c.epsilon[i], oracle::blind_residual(seq.gates, c.lambda[i]), 1e-10);
  }
  EXPECT_THROW(sweep_lambda(seq, LambdaGrid{2, 0.1, 4.0}), std::invalid_argument);
}

TEST(Landscape, OptimumAgreesWithOptimizer) {
  for (std::uint64_t seed = 42; seed < 52; ++seed) {
    const auto s = landscape_cell(seed, 8);
    const auto opt = optimize_lambda(generate_sequence(seed, 8), kLandscapeGrid);
    EXPECT_DOUBLE_EQ(s.lambda_opt, opt.lambda);
    EXPECT_DOUBLE_EQ(s.epsilon_opt, opt.epsilon);
  }
}

TEST(Landscape, ZeroSequenceIsFlat) {
  GateSequence seq{0, {{Axis::X, 0.0}, {Axis::Y, 0.0}}};
  const auto s = characterize(sweep_lambda(seq), 0, 2);
  EXPECT_EQ(s.kappa, 0.0);
  EXPECT_EQ(s.cls, LandscapeClass::Flat);
  EXPECT_EQ(s.n_local_minima, 0);
}

TEST(Landscape, QuarterTurnMinimum) {
  GateSequence seq{0, {{Axis::X, std::numbers::pi / 2}}};
  const auto s = characterize(sweep_lambda(seq, LambdaGrid{40, 0.1, 4.0}), 0, 1);
  EXPECT_NEAR(s.lambda_opt, 3.5, 1e-12);
  EXPECT_LT(s.epsilon_opt, 1e-12);
}

TEST(Landscape, CurvatureOfParabola) {
  for (double a : {1.0, 10.0, 40.0}) {
    const auto s = characterize(parabola(a, 2.0), 0, 0);
    EXPECT_NEAR(s.kappa, 2.0 * a, 1e-6 * a);
    EXPECT_NEAR(s.lambda_opt, 2.0, 1e-12);
    EXPECT_EQ(s.n_local_minima, 1);
  }
}

TEST(Landscape, BoundaryOptimumUsesOneSidedStencil) {
  const auto s = characterize(parabola(3.0, 0.0), 0, 0);
  EXPECT_EQ(s.lambda_opt, 0.0);
  EXPECT_NEAR(s.kappa, 6.0, 1e-9);
  EXPECT_EQ(s.n_local_minima, 0);
  EXPECT_EQ(s.cls, LandscapeClass::Moderate);
}

TEST(Landscape, ClassRules) {
  EXPECT_EQ(characterize(parabola(30.0, 2.0), 0, 0).cls, LandscapeClass::Sharp);
  EXPECT_EQ(characterize(parabola(5.0, 2.0), 0, 0).cls, LandscapeClass::Moderate);
  EXPECT_EQ(characterize(parabola(1.0, 2.0), 0, 0).cls, LandscapeClass::Flat);
  // Two dips of similar depth take priority over curvature.
  const auto two = characterize(curve_of({0.9, 0.5, 0.1, 0.5, 0.9, 0.5, 0.15, 0.5, 0.9}), 0, 0);
  EXPECT_EQ(two.n_local_minima, 2);
  EXPECT_EQ(two.cls, LandscapeClass::Multimodal);
  // A shallow second dip above twice the optimum does not count.
  const auto one = characterize(curve_of({0.9, 0.5, 0.1, 0.5, 0.9, 0.5, 0.25, 0.5, 0.9}), 0, 0);
  EXPECT_EQ(one.n_local_minima, 1);
  EXPECT_NE(one.cls, LandscapeClass::Multimodal);
  EXPECT_THROW(characterize(curve_of({0.1, 0.2}), 0, 0), std::invalid_argument);
  EXPECT_EQ(class_name(LandscapeClass::Multimodal), "multimodal");
}

TEST(Landscape, EveryCellClassified) {
  const std::vector<std::size_t> lengths{4, 12, 20};
  const auto cells = landscape_cells(42, 20, lengths, 2);
  ASSERT_EQ(cells.size(), 60u);
  EXPECT_EQ(cells[0].length, 4u);
  EXPECT_EQ(cells[20].length, 12u);
  EXPECT_EQ(cells[21].seed, 43u);
  const auto report = landscape_report(cells);
  ASSERT_EQ(report.size(), 3u);
  for (const auto& r : report) {
    double total = 0.0;
    for (double f : r.class_fraction) total += f;
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_EQ(r.n, 20u);
    EXPECT_TRUE(r.epsilon_ci.contains(r.mean_epsilon));
  }
}

TEST(Landscape, WorkerCountDoesNotMatter) {
  const std::vector<std::size_t> lengths{6, 10};
  const auto a = landscape_cells(42, 8, lengths, 1);
  const auto b = landscape_cells(42, 8, lengths, 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].epsilon_opt, b[i].epsilon_opt);
    EXPECT_EQ(a[i].kappa, b[i].kappa);
    EXPECT_EQ(a[i].cls, b[i].cls);
  }
}

}  // namespace
}  // namespace blindreset
