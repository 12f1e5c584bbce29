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

// Single-qubit unitary algebra: seeded rotation sequences, composition, the
// scale-and-double replay block and the Frobenius closure residual.

#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace blindreset {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

char axis_label(Axis axis);

/// One rotation R_axis(angle) = exp(-i angle sigma_axis / 2), angle in [0, 2pi).
struct Gate {
  Axis axis = Axis::Z;
  double angle = 0.0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

using Unitary = Matrix2c<double>;

/// Ordered rotations; gates[0] acts first.
struct GateSequence {
  std::uint64_t seed = 0;
  std::vector<Gate> gates;

  std::size_t length() const { return gates.size(); }
};

/// Deterministic sequence for (seed, length). Each gate draws its axis
/// uniformly from {X, Y, Z} and then its angle uniformly on [0, 2pi), both
/// from one stream derived from the pair.
GateSequence generate_sequence(std::uint64_t seed, std::size_t length);

template <typename Scalar>
Matrix2c<Scalar> rotation(Axis axis, Scalar angle) {
  using C = std::complex<Scalar>;
  const Scalar c = std::cos(angle / Scalar(2));
  const Scalar s = std::sin(angle / Scalar(2));
  Matrix2c<Scalar> m;
  switch (axis) {
    case Axis::X:
      m << C(c, 0), C(0, -s), C(0, -s), C(c, 0);
      break;
    case Axis::Y:
      m << C(c, 0), C(-s, 0), C(s, 0), C(c, 0);
      break;
    case Axis::Z:
      m << C(c, -s), C(0, 0), C(0, 0), C(c, s);
      break;
  }
  return m;
}

template <typename Scalar>
Matrix2c<Scalar> rotation(const Gate& gate, Scalar scale = Scalar(1)) {
  return rotation<Scalar>(gate.axis, scale * static_cast<Scalar>(gate.angle));
}

/// G_L ... G_1 with every angle multiplied by `scale`.
template <typename Scalar = double>
Matrix2c<Scalar> compose(std::span<const Gate> gates, Scalar scale = Scalar(1)) {
  Matrix2c<Scalar> u = Matrix2c<Scalar>::Identity();
  for (const Gate& g : gates) u = (rotation<Scalar>(g, scale) * u).eval();
  return u;
}

Unitary compose(const GateSequence& seq);

/// R(lambda) = [G_L(lambda theta_L) ... G_1(lambda theta_1)]^2.
Unitary scale_and_double(const GateSequence& seq, double lambda);

/// Whether the closure residual may absorb a global phase. Exact is the
/// operator-level metric and the default everywhere.
enum class ResidualMode { Exact, PhaseInvariant };

/// ||R U - I||_F / 2. Throws std::invalid_argument on non-unitary input.
double residual_error(const Unitary& reset, const Unitary& base,
                      ResidualMode mode = ResidualMode::Exact);

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = 1e-10) {
  using Scalar = typename Derived::Scalar;
  const auto gram = (m.adjoint() * m).eval();
  const auto id = decltype(gram)::Identity();
  if (((gram - id).cwiseAbs().maxCoeff()) > tol) return false;
  return std::abs(std::abs(Scalar(m.determinant())) - 1.0) <= tol;
}

}  // namespace blindreset
