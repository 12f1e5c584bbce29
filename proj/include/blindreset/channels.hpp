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

// Density-matrix evolution of the ancilla under platform noise.

#pragma once

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "blindreset/platform.hpp"
#include "blindreset/rng.hpp"
#include "blindreset/su2.hpp"

namespace blindreset {

using DensityMatrix = Matrix2c<double>;

template <typename Scalar = double>
Matrix2c<Scalar> ground_state() {
  Matrix2c<Scalar> rho = Matrix2c<Scalar>::Zero();
  rho(0, 0) = Scalar(1);
  return rho;
}

template <typename Scalar = double>
Matrix2c<Scalar> excited_state() {
  Matrix2c<Scalar> rho = Matrix2c<Scalar>::Zero();
  rho(1, 1) = Scalar(1);
  return rho;
}

/// Hermitian, unit trace and positive semidefinite within `tol`.
template <typename Derived>
bool is_density(const Eigen::MatrixBase<Derived>& rho, double tol = 1e-10) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace() - 1.0) > tol) return false;
  Eigen::SelfAdjointEigenSolver<typename Derived::PlainObject> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

/// (1 - p) rho + p I / 2.
template <typename Scalar>
Matrix2c<Scalar> depolarize(const Matrix2c<Scalar>& rho, Scalar p) {
  if (!(p >= Scalar(0) && p <= Scalar(1))) {
    throw std::invalid_argument("depolarize: p must lie in [0, 1]");
  }
  const std::complex<Scalar> tr = rho.trace();
  return (Scalar(1) - p) * rho + (p / Scalar(2)) * tr * Matrix2c<Scalar>::Identity();
}

/// Amplitude and phase damping toward |0> over `duration`: the excited
/// population decays as exp(-t/T1) and the coherence as exp(-t/T2).
template <typename Scalar>
Matrix2c<Scalar> thermal_relax(const Matrix2c<Scalar>& rho, Scalar t1, Scalar t2, Scalar duration) {
  if (!(duration >= Scalar(0))) throw std::invalid_argument("thermal_relax: duration must be >= 0");
  if (!(t1 > Scalar(0) && t2 > Scalar(0))) throw std::invalid_argument("thermal_relax: T1, T2 must be > 0");
  if (t2 > Scalar(2) * t1) throw std::invalid_argument("thermal_relax: T2 > 2*T1 is unphysical");
  const Scalar pop = std::exp(-duration / t1);
  const Scalar coh = std::exp(-duration / t2);
  Matrix2c<Scalar> out;
  const auto excited = rho(1, 1) * pop;
  out(1, 1) = excited;
  out(0, 0) = rho(0, 0) + rho(1, 1) - excited;
  out(0, 1) = rho(0, 1) * coh;
  out(1, 0) = rho(1, 0) * coh;
  return out;
}

/// Ideal rotation, then depolarizing noise, then relaxation over one gate time.
DensityMatrix apply_noisy_gate(const DensityMatrix& rho, const Gate& gate,
                               const PlatformProfile& profile, double scale = 1.0);

/// Same, for an arbitrary ideal unitary.
DensityMatrix apply_noisy_unitary(const DensityMatrix& rho, const Unitary& u,
                                  const PlatformProfile& profile);

struct ShotCounts {
  long n_zero = 0;
  long n_one = 0;
  long shots = 0;

  double fraction_zero() const { return shots > 0 ? static_cast<double>(n_zero) / shots : 0.0; }
};

/// Probability of recording 0 in the Z basis under symmetric confusion r.
double recorded_zero_probability(const DensityMatrix& rho, double readout_error);

/// Shot-by-shot binomial sampling of Z-basis records.
ShotCounts measure_z(const DensityMatrix& rho, double readout_error, long shots, Stream& stream);

/// X-basis records: rotate by R_y(-pi/2), then measure_z. n_zero counts |+>.
ShotCounts measure_x(const DensityMatrix& rho, double readout_error, long shots, Stream& stream);

}  // namespace blindreset
