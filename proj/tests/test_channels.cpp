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


#include "blindreset/channels.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "blindreset/rng.hpp"

namespace blindreset {
namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

DensityMatrix plus_state() {
  DensityMatrix rho;
  rho << 0.5, 0.5, 0.5, 0.5;
  return rho;
}

DensityMatrix random_state(Stream& s) {
  const C a(standard_normal(s), standard_normal(s));
  const C b(standard_normal(s), standard_normal(s));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  Eigen::Vector2cd psi(a / n, b / n);
  const double mix = uniform01(s);
  return (1.0 - mix) * (psi * psi.adjoint()) + mix * 0.5 * DensityMatrix::Identity();
}

PlatformProfile zero_noise() {
  PlatformProfile p = profiles::noiseless();
  return p;
}

TEST(Depolarize, Limits) {
  const DensityMatrix rho = ground_state();
  EXPECT_TRUE(depolarize(rho, 0.0).isApprox(rho));
  EXPECT_TRUE(depolarize(rho, 1.0).isApprox(0.5 * DensityMatrix::Identity()));
  EXPECT_NEAR(depolarize(rho, 0.004)(0, 0).real(), 0.998, 1e-15);
  EXPECT_THROW(depolarize(rho, -0.1), std::invalid_argument);
  EXPECT_THROW(depolarize(rho, 1.5), std::invalid_argument);
}

TEST(Depolarize, Composes) {
  Stream s = derive_stream({1});
  const DensityMatrix rho = random_state(s);
  const double p = 0.1, q = 0.3;
  EXPECT_TRUE(depolarize(depolarize(rho, p), q).isApprox(depolarize(rho, 1.0 - (1.0 - p) * (1.0 - q)), 1e-14));
}

TEST(ThermalRelax, ZeroDurationIsIdentity) {
  Stream s = derive_stream({2});
  const DensityMatrix rho = random_state(s);
  EXPECT_TRUE(thermal_relax(rho, 40e-6, 20e-6, 0.0).isApprox(rho, 1e-15));
}

TEST(ThermalRelax, DecayRates) {
  const DensityMatrix out = thermal_relax(excited_state(), 40e-6, 20e-6, 40e-6);
  EXPECT_NEAR(out(1, 1).real(), std::exp(-1.0), 1e-14);
  EXPECT_NEAR(out(0, 0).real(), 1.0 - std::exp(-1.0), 1e-14);
  const DensityMatrix coh = thermal_relax(plus_state(), 40e-6, 20e-6, 20e-6);
  EXPECT_NEAR(coh(0, 1).real(), 0.5 * std::exp(-1.0), 1e-14);
  EXPECT_NEAR(thermal_relax(excited_state(), 1e-6, 1e-6, 1.0)(0, 0).real(), 1.0, 1e-12);
}

TEST(ThermalRelax, GroundIsFixedPoint) {
  EXPECT_TRUE(thermal_relax(ground_state(), 1e-6, 2e-6, 5e-6).isApprox(ground_state()));
}

TEST(ThermalRelax, RejectsUnphysicalParameters) {
  const DensityMatrix rho = ground_state();
  EXPECT_THROW(thermal_relax(rho, 10e-6, 21e-6, 1e-6), std::invalid_argument);
  EXPECT_THROW(thermal_relax(rho, 0.0, 0.0, 1e-6), std::invalid_argument);
  EXPECT_THROW(thermal_relax(rho, 10e-6, 5e-6, -1.0), std::invalid_argument);
}

TEST(Channels, PreserveTraceAndPositivity) {
  Stream s = derive_stream({3});
  const auto profiles = profiles::builtin();
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = random_state(s);
    ASSERT_TRUE(is_density(rho));
    ASSERT_TRUE(is_density(depolarize(rho, uniform01(s))));
    const double t1 = 1e-6 + uniform01(s) * 1e-4;
    const double t2 = t1 * (0.05 + 1.95 * uniform01(s));
    ASSERT_TRUE(is_density(thermal_relax(rho, t1, t2, uniform01(s) * 1e-4)));
    const Gate g{static_cast<Axis>(i % 3), 2.0 * kPi * uniform01(s)};
    ASSERT_TRUE(is_density(apply_noisy_gate(rho, g, profiles[i % profiles.size()], 1.0 + uniform01(s))));
  }
}

TEST(NoisyGate, NoiselessIsUnitaryConjugation) {
  const DensityMatrix out = apply_noisy_gate(ground_state(), {Axis::X, kPi}, zero_noise());
  EXPECT_TRUE(out.isApprox(excited_state(), 1e-14));
  EXPECT_TRUE(apply_noisy_gate(plus_state(), {Axis::Z, 0.0}, zero_noise()).isApprox(plus_state()));
}

TEST(NoisyGate, IqmPiPulsePopulation) {
  // Depolarize then relax over one 30 ns gate with T1 = 40 us, T2 = 20 us.
  const DensityMatrix out = apply_noisy_gate(ground_state(), {Axis::X, kPi}, profiles::iqm());
  EXPECT_NEAR(out(1, 1).real(), 0.998750656039111, 1e-12);
  EXPECT_NEAR(out(0, 0).real(), 0.0012493439608890489, 1e-12);
}

TEST(NoisyGate, ScaleMultipliesAngle) {
  const DensityMatrix a = apply_noisy_gate(plus_state(), {Axis::Y, 0.4}, profiles::iqm(), 2.5);
  const DensityMatrix b = apply_noisy_gate(plus_state(), {Axis::Y, 1.0}, profiles::iqm());
  EXPECT_TRUE(a.isApprox(b, 1e-14));
}

TEST(Measure, PureStatesWithoutReadoutError) {
  Stream s = derive_stream({4});
  EXPECT_EQ(measure_z(ground_state(), 0.0, 1024, s).n_zero, 1024);
  EXPECT_EQ(measure_z(excited_state(), 0.0, 1024, s).n_one, 1024);
  EXPECT_EQ(measure_x(plus_state(), 0.0, 1024, s).n_zero, 1024);
}

TEST(Measure, FractionsWithinShotNoise) {
  Stream s = derive_stream({5});
  const long n = 1000000;
  auto within = [&](double got, double expected) {
    const double sigma = std::sqrt(expected * (1.0 - expected) / n);
    EXPECT_NEAR(got, expected, 5.0 * sigma + 1e-12);
  };
  within(measure_z(0.5 * DensityMatrix::Identity(), 0.0, n, s).fraction_zero(), 0.5);
  within(measure_z(ground_state(), 0.03, n, s).fraction_zero(), 0.97);
  within(measure_x(ground_state(), 0.0, n, s).fraction_zero(), 0.5);
  DensityMatrix minus;
  minus << 0.5, -0.5, -0.5, 0.5;
  within(measure_x(minus, 0.03, n, s).fraction_zero(), 0.03);
}

TEST(Measure, SameStreamSameCounts) {
  Stream a = derive_stream({6});
  Stream b = derive_stream({6});
  const DensityMatrix rho = 0.5 * DensityMatrix::Identity();
  EXPECT_EQ(measure_z(rho, 0.02, 4096, a).n_zero, measure_z(rho, 0.02, 4096, b).n_zero);
}

TEST(Measure, RejectsBadArguments) {
  Stream s = derive_stream({7});
  EXPECT_THROW(measure_z(ground_state(), 0.0, 0, s), std::invalid_argument);
  EXPECT_THROW(measure_z(ground_state(), 1.5, 10, s), std::invalid_argument);
}

TEST(Measure, RecordedProbability) {
  EXPECT_DOUBLE_EQ(recorded_zero_probability(ground_state(), 0.02), 0.98);
  EXPECT_DOUBLE_EQ(recorded_zero_probability(excited_state(), 0.02), 0.02);
}

}  // namespace
}  // namespace blindreset
