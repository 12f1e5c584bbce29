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


#include "blindreset/stats.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "blindreset/rng.hpp"

namespace blindreset::stats {
namespace {

// Student t density integrated with composite Simpson from 0 to |t|.
double t_cdf_quadrature(double t, double nu) {
  const double norm = std::exp(std::lgamma((nu + 1) / 2) - std::lgamma(nu / 2)) / std::sqrt(nu * std::numbers::pi);
  auto pdf = [&](double x) { return norm * std::pow(1.0 + x * x / nu, -(nu + 1) / 2); };
  const int n = 20000;
  const double b = std::abs(t);
  const double h = b / n;
  double acc = pdf(0.0) + pdf(b);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * pdf(i * h);
  const double half = acc * h / 3.0;
  return t >= 0 ? 0.5 + half : 0.5 - half;
}

TEST(Stats, MeanAndSd) {
  const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  EXPECT_DOUBLE_EQ(mean(xs), 2.5);
  EXPECT_NEAR(sample_sd(xs), std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_THROW(mean(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(sample_sd(std::vector<double>{1.0}), std::invalid_argument);
}

TEST(Stats, IncompleteBeta) {
  EXPECT_NEAR(regularized_incomplete_beta(2.5, 0.5, 0.3), 0.018927124071945658, 1e-12);
  EXPECT_NEAR(regularized_incomplete_beta(10, 3, 0.9), 0.889130022255, 1e-10);
  EXPECT_DOUBLE_EQ(regularized_incomplete_beta(2, 3, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(regularized_incomplete_beta(2, 3, 1.0), 1.0);
  EXPECT_NEAR(regularized_incomplete_beta(1, 1, 0.37), 0.37, 1e-14);
  EXPECT_THROW(regularized_incomplete_beta(0, 1, 0.5), std::invalid_argument);
}

TEST(Stats, StudentT) {
  EXPECT_NEAR(student_t_cdf(2.0, 5), 0.9490302605850709, 1e-12);
  EXPECT_NEAR(student_t_cdf(-1.3, 3.5), 0.13629770790218498, 1e-12);
  EXPECT_DOUBLE_EQ(student_t_cdf(0.0, 7), 0.5);
  EXPECT_NEAR(student_t_quantile(0.975, 49), 2.0095752371292397, 1e-9);
  for (double nu : {1.0, 2.5, 9.0, 49.0}) {
    for (double t : {-3.0, -0.7, 0.4, 2.2}) {
      EXPECT_NEAR(student_t_cdf(t, nu), t_cdf_quadrature(t, nu), 1e-9) << nu << " " << t;
      EXPECT_NEAR(student_t_quantile(student_t_cdf(t, nu), nu), t, 1e-8);
    }
  }
  EXPECT_THROW(student_t_cdf(1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(student_t_quantile(1.0, 5.0), std::invalid_argument);
}

TEST(Stats, PairedTestKnownDifferences) {
  std::vector<double> a, b;
  for (int k = 0; k < 10; ++k) {
    for (double d : {1.0, 1.0, 1.0, -1.0, 1.0}) {
      a.push_back(5.0 + d);
      b.push_back(5.0);
    }
  }
  const auto r = paired_test(a, b);
  EXPECT_NEAR(r.t_statistic, 5.25, 1e-12);
  EXPECT_NEAR(r.p_value, 3.26468195293816e-06, 1e-12);
  EXPECT_NEAR(r.effect_size, 0.7424621202458748, 1e-12);
  EXPECT_EQ(r.n, 50);
  EXPECT_FALSE(r.degenerate);
  EXPECT_LT(r.ci_lo, 0.6);
  EXPECT_GT(r.ci_hi, 0.6);
}

TEST(Stats, PairedTestAntisymmetry) {
  Stream s = derive_stream({1});
  std::vector<double> a(30), b(30);
  for (int i = 0; i < 30; ++i) {
    a[i] = standard_normal(s);
    b[i] = standard_normal(s) + 0.3;
  }
  const auto ab = paired_test(a, b);
  const auto ba = paired_test(b, a);
  EXPECT_NEAR(ab.t_statistic, -ba.t_statistic, 1e-12);
  EXPECT_NEAR(ab.p_value, ba.p_value, 1e-12);
  EXPECT_NEAR(ab.ci_lo, -ba.ci_hi, 1e-12);
}

TEST(Stats, PairedTestDegenerate) {
  const std::vector<double> a{0.5, 0.75, 1.0};
  const auto same = paired_test(a, a);
  EXPECT_TRUE(same.degenerate);
  EXPECT_EQ(same.p_value, 1.0);
  EXPECT_EQ(same.effect_size, 0.0);
  const std::vector<double> shifted{0.75, 1.0, 1.25};
  const auto shift = paired_test(shifted, a);
  EXPECT_TRUE(shift.degenerate);
  EXPECT_TRUE(std::isinf(shift.effect_size));
  EXPECT_THROW(paired_test(a, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(Stats, Holm) {
  const auto r = holm_bonferroni(std::vector<double>{0.01, 0.04});
  EXPECT_NEAR(r.adjusted[0], 0.02, 1e-15);
  EXPECT_NEAR(r.adjusted[1], 0.04, 1e-15);
  EXPECT_TRUE(r.reject[0]);
  EXPECT_TRUE(r.reject[1]);
  const auto m = holm_bonferroni(std::vector<double>{0.04, 0.01, 0.03});
  EXPECT_NEAR(m.adjusted[1], 0.03, 1e-15);
  EXPECT_NEAR(m.adjusted[2], 0.06, 1e-15);
  EXPECT_NEAR(m.adjusted[0], 0.06, 1e-15);
  EXPECT_FALSE(m.reject[0]);
  EXPECT_THROW(holm_bonferroni(std::vector<double>{1.5}), std::invalid_argument);
}

TEST(Stats, HolmNeverRejectsMoreThanUnadjusted) {
  Stream s = derive_stream({2});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> p(1 + uniform_index(s, 12));
    for (auto& x : p) x = std::pow(uniform01(s), 3.0);
    const auto r = holm_bonferroni(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      ASSERT_GE(r.adjusted[i], p[i]);
      ASSERT_LE(r.adjusted[i], 1.0);
      if (r.reject[i]) ASSERT_LE(p[i], 0.05);
    }
  }
}

TEST(Stats, BootstrapBasics) {
  Stream s = derive_stream({3});
  const std::vector<double> constant(20, 0.7);
  const auto c = bootstrap_ci(constant, s);
  EXPECT_DOUBLE_EQ(c.lo, 0.7);
  EXPECT_DOUBLE_EQ(c.hi, 0.7);
  EXPECT_THROW(bootstrap_ci(std::vector<double>{1.0}, s), std::invalid_argument);
  EXPECT_THROW(bootstrap_ci(constant, s, 0.95, 10), std::invalid_argument);
  EXPECT_THROW(bootstrap_ci(constant, s, 1.0), std::invalid_argument);
}

TEST(Stats, BootstrapWidthShrinks) {
  Stream s = derive_stream({4});
  std::vector<double> big(200);
  for (auto& x : big) x = standard_normal(s);
  const std::vector<double> small(big.begin(), big.begin() + 50);
  const auto a = bootstrap_ci(small, s);
  const auto b = bootstrap_ci(big, s);
  EXPECT_GT(a.hi - a.lo, b.hi - b.lo);
  EXPECT_TRUE(b.contains(mean(big)));
}

TEST(Stats, BootstrapCoverage) {
  Stream s = derive_stream({5});
  int covered = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> xs(50);
    for (auto& x : xs) x = standard_normal(s);
    covered += bootstrap_ci(xs, s).contains(0.0);
  }
  EXPECT_GE(covered, 93);
}

TEST(Stats, BootstrapLongRunCoverage) {
  Stream s = derive_stream({6});
  int covered = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> xs(50);
    for (auto& x : xs) x = standard_normal(s);
    covered += bootstrap_ci(xs, s).contains(0.0);
  }
  EXPECT_GE(covered, 930);
  EXPECT_LE(covered, 965);
}

TEST(Stats, IntervalOps) {
  const Interval a{0.0, 1.0};
  EXPECT_TRUE(a.overlaps({1.0, 2.0}));
  EXPECT_FALSE(a.overlaps({1.1, 2.0}));
  EXPECT_TRUE(a.contains(0.5));
}

}  // namespace
}  // namespace blindreset::stats
