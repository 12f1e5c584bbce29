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

#include "blindreset/reset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blindreset {

std::string_view method_name(ResetMethod method) {
  switch (method) {
    case ResetMethod::NoReset: return "no_reset";
    case ResetMethod::MeasurementReset: return "measurement_reset";
    case ResetMethod::BlindReset: return "blind_reset";
  }
  return "?";
}

ResetMethod parse_method(std::string_view text) {
  if (text == "no_reset") return ResetMethod::NoReset;
  if (text == "measurement_reset") return ResetMethod::MeasurementReset;
  if (text == "blind_reset") return ResetMethod::BlindReset;
  throw std::invalid_argument("unknown reset method '" + std::string(text) + "'");
}

LambdaOptimum optimize_lambda(const GateSequence& seq, const LambdaGrid& grid, ResidualMode mode) {
  if (grid.points < 2) throw std::invalid_argument("optimize_lambda: need at least 2 grid points");
  if (!(grid.min > 0.0 && grid.min < grid.max)) {
    throw std::invalid_argument("optimize_lambda: need 0 < lambda_min < lambda_max");
  }
  const Unitary base = compose(seq);
  LambdaOptimum best{grid.at(0), residual_error(scale_and_double(seq, grid.at(0)), base, mode)};
  for (int i = 1; i < grid.points; ++i) {
    const double lambda = grid.at(i);
    const double eps = residual_error(scale_and_double(seq, lambda), base, mode);
    if (eps < best.epsilon) best = {lambda, eps};
  }
  return best;
}

namespace {

DensityMatrix evolve(DensityMatrix rho, const GateSequence& seq, const PlatformProfile& profile,
                     double scale) {
  for (const Gate& g : seq.gates) rho = apply_noisy_gate(rho, g, profile, scale);
  return rho;
}

// Projective Z readout with symmetric record confusion, followed by a noisy
// X on every branch whose record reads 1. The branches are recombined into
// one density matrix.
DensityMatrix measure_and_flip(const DensityMatrix& rho, const PlatformProfile& profile) {
  const double p0 = std::clamp(rho(0, 0).real(), 0.0, 1.0);
  const double p1 = 1.0 - p0;
  const double r = profile.readout_error;

  DensityMatrix kept = DensityMatrix::Zero();  // record 0: left alone
  kept(0, 0) = p0 * (1.0 - r);
  kept(1, 1) = p1 * r;
  DensityMatrix flipped = DensityMatrix::Zero();  // record 1: X applied
  flipped(0, 0) = p0 * r;
  flipped(1, 1) = p1 * (1.0 - r);

  const double weight = flipped.trace().real();
  DensityMatrix out = kept;
  if (weight > 0.0) {
    const DensityMatrix branch = flipped / weight;
    out += weight * apply_noisy_unitary(branch, rotation<double>(Axis::X, std::numbers::pi), profile);
  }
  return thermal_relax(out, profile.t1, profile.t2, profile.t_meas_total);
}

}  // namespace

DensityMatrix post_reset_state(const GateSequence& seq, ResetMethod method,
                               const PlatformProfile& profile, double lambda) {
  DensityMatrix rho = evolve(ground_state(), seq, profile, 1.0);
  switch (method) {
    case ResetMethod::NoReset:
      rho = evolve(rho, seq, profile, 1.0);
      rho = evolve(rho, seq, profile, 1.0);
      break;
    case ResetMethod::MeasurementReset:
      rho = measure_and_flip(rho, profile);
      break;
    case ResetMethod::BlindReset:
      rho = evolve(rho, seq, profile, lambda);
      rho = evolve(rho, seq, profile, lambda);
      break;
  }
  return rho;
}

ResetOutcome run_reset_cycle(const GateSequence& seq, ResetMethod method,
                             const PlatformProfile& profile, long shots, Stream& stream,
                             std::optional<LambdaOptimum> calibration) {
  if (shots < 1) throw std::invalid_argument("run_reset_cycle: shots must be >= 1");
  const Unitary base = compose(seq);

  ResetOutcome out;
  out.backend = profile.name;
  out.method = method;
  out.seed = seq.seed;
  out.sequence_length = seq.length();
  out.shots = shots;

  double lambda = 1.0;
  switch (method) {
    case ResetMethod::NoReset:
      out.lambda_used = 1.0;
      out.unitary_error = residual_error(scale_and_double(seq, 1.0), base);
      break;
    case ResetMethod::MeasurementReset:
      out.unitary_error = residual_error(Unitary::Identity(), base);
      break;
    case ResetMethod::BlindReset: {
      const LambdaOptimum cal = calibration ? *calibration : optimize_lambda(seq);
      lambda = cal.lambda;
      out.lambda_used = cal.lambda;
      out.unitary_error = cal.epsilon;
      break;
    }
  }

  const DensityMatrix rho = post_reset_state(seq, method, profile, lambda);
  Stream z_stream(stream());
  Stream x_stream(stream());
  out.p_zero = measure_z(rho, profile.readout_error, shots, z_stream).fraction_zero();
  out.p_x = measure_x(rho, profile.readout_error, shots, x_stream).fraction_zero();
  return out;
}

double envelope(double epsilon, double p, std::size_t length) {
  const double coherent = (1.0 - epsilon) * (1.0 - epsilon) - 0.5;
  const double incoherent = std::pow(1.0 - p, 2.0 * static_cast<double>(length));
  return std::clamp(0.5 + coherent * incoherent, 0.0, 1.0);
}

EnvelopeVerdict envelope_check(const ResetOutcome& outcome, double gate_error_p, double margin) {
  EnvelopeVerdict v;
  v.bound = envelope(outcome.unitary_error, gate_error_p, outcome.sequence_length);
  v.delta = outcome.p_zero - v.bound - margin;
  v.violation = v.delta > 0.0;
  return v;
}

}  // namespace blindreset
