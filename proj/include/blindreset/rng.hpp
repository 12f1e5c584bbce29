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

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace blindreset {

/// Random stream used everywhere a draw is made. The Mersenne twister output
/// sequence is fixed by the standard, and every conversion to floating point
/// below is done by hand, so results are identical across standard libraries.
using Stream = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// 64-bit FNV-1a over a byte string.
std::uint64_t fnv1a64(std::string_view text);

/// Stream for one independent cell, keyed by an ordered tuple of integers.
/// Cells never share state, so execution order cannot change any draw.
Stream derive_stream(std::initializer_list<std::uint64_t> key);

/// Uniform double on [0, 1) with 53 random bits.
inline double uniform01(Stream& stream) {
  return static_cast<double>(stream() >> 11) * 0x1.0p-53;
}

/// Uniform integer on [0, n) by rejection; n must be positive.
std::uint64_t uniform_index(Stream& stream, std::uint64_t n);

/// Bernoulli(p) draw.
inline bool bernoulli(Stream& stream, double p) { return uniform01(stream) < p; }

/// Standard normal via Box-Muller (one value per call, second discarded).
double standard_normal(Stream& stream);

}  // namespace blindreset
