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

#include <algorithm>
#include <numbers>

namespace blindreset {

DensityMatrix apply_noisy_unitary(const DensityMatrix& rho, const Unitary& u,
                                  const PlatformProfile& profile) {
  const DensityMatrix ideal = u * rho * u.adjoint();
  const DensityMatrix noisy = depolarize(ideal, profile.gate_error_p);
  return thermal_relax(noisy, profile.t1, profile.t2, profile.t_gate);
}

DensityMatrix apply_noisy_gate(const DensityMatrix& rho, const Gate& gate,
                               const PlatformProfile& profile, double scale) {
  return apply_noisy_unitary(rho, rotation<double>(gate, scale), profile);
}

double recorded_zero_probability(const DensityMatrix& rho, double readout_error) {
  const double p0 = std::clamp(rho(0, 0).real(), 0.0, 1.0);
  const double r = readout_error;
  return (1.0 - r) * p0 + r * (1.0 - p0);
}

ShotCounts measure_z(const DensityMatrix& rho, double readout_error, long shots, Stream& stream) {
  if (shots < 1) throw std::invalid_argument("measure_z: shots must be >= 1");
  if (!(readout_error >= 0.0 && readout_error <= 1.0)) {
    throw std::invalid_argument("measure_z: readout_error must lie in [0, 1]");
  }
  const double q = recorded_zero_probability(rho, readout_error);
  ShotCounts counts;
  counts.shots = shots;
  for (long i = 0; i < shots; ++i) counts.n_zero += bernoulli(stream, q) ? 1 : 0;
  counts.n_one = shots - counts.n_zero;
  return counts;
}

ShotCounts measure_x(const DensityMatrix& rho, double readout_error, long shots, Stream& stream) {
  const Unitary basis = rotation<double>(Axis::Y, -std::numbers::pi / 2);
  return measure_z(basis * rho * basis.adjoint(), readout_error, shots, stream);
}

}  // namespace blindreset
