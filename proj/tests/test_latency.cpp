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

#include <gtest/gtest.h>

namespace blindreset {
namespace {

TEST(Latency, Components) {
  const auto p = profiles::iqm();
  EXPECT_DOUBLE_EQ(blind_latency(4, p), 240e-9);
  EXPECT_DOUBLE_EQ(measurement_latency(p), 730e-9);
  EXPECT_DOUBLE_EQ(measurement_latency(profiles::nvqlink()), 4.73e-6);
  const auto b = latency_breakdown(10, p);
  EXPECT_EQ(b.profile_name, "IQM");
  EXPECT_DOUBLE_EQ(b.t_blind, 600e-9);
}

TEST(Latency, BuiltinCrossovers) {
  EXPECT_EQ(crossover(profiles::iqm()), 12u);
  EXPECT_EQ(crossover(profiles::rigetti()), 11u);
  EXPECT_EQ(crossover(profiles::ionq()), 1u);
  EXPECT_EQ(crossover(profiles::nvqlink()), 78u);
}

TEST(Latency, CrossoverBracketsMeasurementTime) {
  for (double t_gate : {10e-9, 30e-9, 40e-9, 77e-9, 100e-6}) {
    for (double t_meas : {0.5e-6, 0.73e-6, 1.2e-6, 350e-6, 1e-3}) {
      PlatformProfile p = profiles::iqm();
      p.t_gate = t_gate;
      p.t_meas_total = t_meas;
      const std::size_t l = crossover(p);
      if (l > 0) EXPECT_LT(2.0 * l * t_gate, t_meas);
      EXPECT_GE(2.0 * (l + 1) * t_gate * (1.0 + 1e-12), t_meas);
    }
  }
}

TEST(Latency, EqualityIsNotFaster) {
  PlatformProfile p = profiles::iqm();
  p.t_gate = 25e-9;
  p.t_meas_total = 500e-9;  // exactly L = 10
  EXPECT_EQ(crossover(p), 9u);
  EXPECT_FALSE(strictly_faster(1.0, 1.0));
  EXPECT_FALSE(strictly_faster(1.0, 1.0 + 1e-15));
  EXPECT_TRUE(strictly_faster(1.0, 1.0 + 1e-9));
}

TEST(Latency, ScaleInvariant) {
  for (const auto& base : profiles::builtin()) {
    PlatformProfile p = base;
    p.t_gate *= 7.0;
    p.t_meas_total *= 7.0;
    p.t_ext *= 7.0;
    EXPECT_EQ(crossover(p), crossover(base)) << base.name;
  }
}

TEST(Latency, ExternalSweepSteps) {
  const auto p = profiles::iqm();
  std::vector<double> ts;
  for (int i = 0; i <= 2000; ++i) ts.push_back(i * p.t_gate / 7.0);
  const auto pts = ext_sweep(p, ts);
  ASSERT_EQ(pts.size(), ts.size());
  EXPECT_EQ(pts.front().l_star, 12u);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    ASSERT_GE(pts[i].l_star, pts[i - 1].l_star);
    ASSERT_LE(pts[i].l_star - pts[i - 1].l_star, 1u);
  }
  // One extra gate pair per 2 t_gate of external latency.
  EXPECT_EQ(pts.back().l_star - pts.front().l_star,
            static_cast<std::size_t>(ts.back() / (2.0 * p.t_gate) + 0.5));
}

TEST(Latency, ExternalSweepValues) {
  const std::vector<double> two{2e-6};
  const auto at2 = ext_sweep(profiles::iqm(), two);
  EXPECT_EQ(at2[0].l_star, 45u);
  EXPECT_GE(at2[0].l_star, 2 * crossover(profiles::iqm()));
  std::vector<double> small;
  for (double t = 0.0; t <= 4e-6; t += 0.5e-6) small.push_back(t);
  for (const auto& pt : ext_sweep(profiles::ionq(), small)) EXPECT_EQ(pt.l_star, 1u);
  EXPECT_THROW(ext_sweep(profiles::iqm(), std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(ext_sweep(profiles::iqm(), std::vector<double>{-1e-6}), std::invalid_argument);
}

TEST(Decide, Reasons) {
  const auto p = profiles::iqm();
  auto d = decide(4, 0.88, 0.75, p);
  EXPECT_EQ(d.chosen, ResetMethod::BlindReset);
  EXPECT_EQ(d.reason, DecisionReason::FasterAndClean);
  d = decide(13, 0.99, 0.75, p);
  EXPECT_EQ(d.chosen, ResetMethod::MeasurementReset);
  EXPECT_EQ(d.reason, DecisionReason::TooSlow);
  d = decide(8, 0.60, 0.75, p);
  EXPECT_EQ(d.reason, DecisionReason::RestrictLength);
  d = decide(1, 0.60, 0.75, p);
  EXPECT_EQ(d.reason, DecisionReason::TooDirty);
  EXPECT_EQ(reason_name(DecisionReason::TooSlow), "too_slow");
  EXPECT_THROW(decide(4, 0.9, 1.5, p), std::invalid_argument);
}

TEST(Latency, TableRatio) {
  const auto rows = latency_table(profiles::builtin());
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_FALSE(rows[0].ratio.has_value());
  ASSERT_TRUE(rows[3].ratio.has_value());
  EXPECT_DOUBLE_EQ(*rows[3].ratio, 6.5);
}

}  // namespace
}  // namespace blindreset
