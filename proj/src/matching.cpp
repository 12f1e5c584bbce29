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

#include "blindreset/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "blindreset/blossom.hpp"

namespace blindreset {

namespace {

void check_distance(int distance) {
  if (distance < 3 || distance % 2 == 0) {
    throw std::invalid_argument("repetition code distance must be odd and >= 3");
  }
}

// Flip the data bits that a chain from check s to the nearer end crosses.
void flip_to_boundary(Bits& correction, int check, int distance) {
  const int left = check + 1;
  const int right = distance - 1 - check;
  if (left <= right) {
    for (int i = 0; i <= check; ++i) correction[i] ^= 1;
  } else {
    for (int i = check + 1; i < distance; ++i) correction[i] ^= 1;
  }
}

void flip_between(Bits& correction, int a, int b) {
  if (a > b) std::swap(a, b);
  for (int i = a + 1; i <= b; ++i) correction[i] ^= 1;
}

}  // namespace

Bits parities(const Bits& data) {
  Bits out(data.size() > 0 ? data.size() - 1 : 0);
  for (std::size_t s = 0; s + 1 < data.size(); ++s) out[s] = data[s] ^ data[s + 1];
  return out;
}

std::vector<Defect> detection_events(std::span<const Bits> rounds, int distance,
                                     const Bits* final_readout) {
  check_distance(distance);
  const auto checks = static_cast<std::size_t>(distance - 1);
  std::vector<Defect> out;
  Bits prev(checks, 0);
  int r = 0;
  auto consume = [&](const Bits& row) {
    if (row.size() != checks) throw std::invalid_argument("syndrome row has wrong width");
    for (std::size_t s = 0; s < checks; ++s) {
      if (row[s] != prev[s]) out.push_back({r, static_cast<int>(s)});
    }
    prev = row;
    ++r;
  };
  for (const Bits& row : rounds) consume(row);
  if (final_readout != nullptr) {
    if (final_readout->size() != static_cast<std::size_t>(distance)) {
      throw std::invalid_argument("final readout has wrong width");
    }
    consume(parities(*final_readout));
  }
  return out;
}

int boundary_weight(const Defect& a, int distance) {
  return std::min(a.check + 1, distance - 1 - a.check);
}

int pair_weight(const Defect& a, const Defect& b, int distance) {
  const int direct = std::abs(a.check - b.check) + std::abs(a.round - b.round);
  return std::min(direct, boundary_weight(a, distance) + boundary_weight(b, distance));
}

MatchingResult match_defects(const std::vector<Defect>& defects, int distance) {
  check_distance(distance);
  MatchingResult res;
  res.correction.assign(distance, 0);
  const int n = static_cast<int>(defects.size());
  res.partner.assign(n, -1);
  if (n == 0) return res;

  // An odd defect count gets one extra vertex that stands for the boundary.
  const bool odd = (n % 2) == 1;
  const int vertices = odd ? n + 1 : n;
  std::vector<std::pair<std::pair<int, int>, std::int64_t>> costs;
  std::int64_t max_cost = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::int64_t c = pair_weight(defects[i], defects[j], distance);
      costs.push_back({{i, j}, c});
      max_cost = std::max(max_cost, c);
    }
    if (odd) {
      const std::int64_t c = boundary_weight(defects[i], distance);
      costs.push_back({{i, n}, c});
      max_cost = std::max(max_cost, c);
    }
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(costs.size());
  for (const auto& [uv, c] : costs) edges.push_back({uv.first, uv.second, max_cost + 1 - c});

  const std::vector<int> mate = max_weight_matching(vertices, edges, true);
  for (int i = 0; i < n; ++i) {
    const int j = mate[i];
    if (j < 0) throw std::logic_error("match_defects: matching is not perfect");
    if (j == n) {
      res.weight += boundary_weight(defects[i], distance);
      flip_to_boundary(res.correction, defects[i].check, distance);
      continue;
    }
    res.partner[i] = j;
    if (j < i) continue;
    const Defect& a = defects[i];
    const Defect& b = defects[j];
    const int direct = std::abs(a.check - b.check) + std::abs(a.round - b.round);
    const int via = boundary_weight(a, distance) + boundary_weight(b, distance);
    if (direct <= via) {
      res.weight += direct;
      flip_between(res.correction, a.check, b.check);
    } else {
      res.weight += via;
      flip_to_boundary(res.correction, a.check, distance);
      flip_to_boundary(res.correction, b.check, distance);
    }
  }
  return res;
}

MatchingResult mwpm_proxy_decode(std::span<const Bits> rounds, int distance, const Bits* final_readout) {
  if (rounds.empty() && final_readout == nullptr) {
    throw std::invalid_argument("mwpm_proxy_decode: empty syndrome history");
  }
  return match_defects(detection_events(rounds, distance, final_readout), distance);
}

}  // namespace blindreset
