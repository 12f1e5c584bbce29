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

#include "blindreset/su2.hpp"

#include <numbers>
#include <stdexcept>

#include "blindreset/rng.hpp"

namespace blindreset {

namespace {
// Tag mixed into the sequence stream key so it never collides with shot streams.
constexpr std::uint64_t kSequenceTag = 0x53455155454e4345ULL;
}  // namespace

char axis_label(Axis axis) {
  switch (axis) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

GateSequence generate_sequence(std::uint64_t seed, std::size_t length) {
  if (length == 0) throw std::invalid_argument("generate_sequence: length must be >= 1");
  Stream stream = derive_stream({kSequenceTag, seed, length});
  GateSequence seq;
  seq.seed = seed;
  seq.gates.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const auto axis = static_cast<Axis>(uniform_index(stream, 3));
    const double angle = 2.0 * std::numbers::pi * uniform01(stream);
    seq.gates.push_back({axis, angle});
  }
  return seq;
}

Unitary compose(const GateSequence& seq) { return compose<double>(seq.gates); }

Unitary scale_and_double(const GateSequence& seq, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("scale_and_double: lambda must be finite and >= 0");
  }
  const Unitary half = compose<double>(seq.gates, lambda);
  return half * half;
}

double residual_error(const Unitary& reset, const Unitary& base, ResidualMode mode) {
  if (!is_unitary(reset) || !is_unitary(base)) {
    throw std::invalid_argument("residual_error: inputs must be unitary");
  }
  const Unitary m = reset * base;
  if (mode == ResidualMode::PhaseInvariant) {
    // min over phi of ||e^{i phi} M - I||_F^2 = ||M||_F^2 + 2 - 2 |tr M|.
    const double sq = m.squaredNorm() + 2.0 - 2.0 * std::abs(m.trace());
    return std::sqrt(std::max(sq, 0.0)) / 2.0;
  }
  return (m - Unitary::Identity()).norm() / 2.0;
}

}  // namespace blindreset
