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

#include <span>
#include <vector>

#include "blindreset/rng.hpp"

namespace blindreset::stats {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

double mean(std::span<const double> xs);
/// Sample standard deviation (n - 1 denominator).
double sample_sd(std::span<const double> xs);

inline constexpr int kDefaultResamples = 10000;

/// Percentile bootstrap interval for the mean. Requires n >= 2,
/// level in (0, 1) and at least 1000 resamples.
Interval bootstrap_ci(std::span<const double> samples, Stream& stream, double level = 0.95,
                      int resamples = kDefaultResamples);

/// I_x(a, b), evaluated with a modified Lentz continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

/// CDF of Student's t with `nu` degrees of freedom.
double student_t_cdf(double t, double nu);

/// Inverse of student_t_cdf.
double student_t_quantile(double prob, double nu);

struct TestReport {
  double t_statistic = 0.0;
  double p_value = 1.0;
  double effect_size = 0.0;  // mean(a - b) / sd(a - b)
  double ci_lo = 0.0;        // 95% t interval on mean(a - b)
  double ci_hi = 0.0;
  long n = 0;
  bool degenerate = false;   // differences had zero variance
};

/// Two-sided paired t-test of a against b with n - 1 degrees of freedom.
/// With zero-variance differences the report is flagged degenerate: d = 0
/// and p = 1 when every difference is zero, else d = +-inf and p = 0.
TestReport paired_test(std::span<const double> a, std::span<const double> b);

struct HolmResult {
  std::vector<double> adjusted;
  std::vector<bool> reject;
};

/// Holm step-down adjustment, reported in input order.
HolmResult holm_bonferroni(std::span<const double> p_values, double alpha = 0.05);

}  // namespace blindreset::stats
