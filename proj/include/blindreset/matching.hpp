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

// Space-time matching decoder for the distance-d repetition code.
//
// Check s (0 <= s < d-1) compares data bits s and s+1. A defect is a check
// whose record changes between consecutive rounds. Defects live on a grid of
// (round, check) and are paired at minimum total Manhattan distance, with
// either chain end available as a sink.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace blindreset {

using Bits = std::vector<std::uint8_t>;

struct Defect {
  int round = 0;
  int check = 0;
  friend bool operator==(const Defect&, const Defect&) = default;
};

/// Parities of adjacent data bits: out[s] = data[s] ^ data[s+1].
Bits parities(const Bits& data);

/// Changes between consecutive syndrome rounds, with an implicit all-zero
/// round before the first. When `final_readout` is given its parities are
/// appended as one last, noiseless round.
std::vector<Defect> detection_events(std::span<const Bits> rounds, int distance,
                                     const Bits* final_readout = nullptr);

/// Cost of routing defect `a` to the nearer chain end.
int boundary_weight(const Defect& a, int distance);

/// Cost of joining two defects: the direct space-time path, or both sent to
/// a boundary if that is cheaper.
int pair_weight(const Defect& a, const Defect& b, int distance);

struct MatchingResult {
  /// Partner index per defect, or -1 when matched to a boundary.
  std::vector<int> partner;
  long weight = 0;
  Bits correction;
};

/// Minimum-weight pairing of `defects` and the data-bit correction it implies.
MatchingResult match_defects(const std::vector<Defect>& defects, int distance);

/// Decodes a syndrome history (one row of d-1 records per round) into a
/// data correction. The optional final readout closes the history.
MatchingResult mwpm_proxy_decode(std::span<const Bits> rounds, int distance,
                                 const Bits* final_readout = nullptr);

}  // namespace blindreset
