// Copyright 2026 The blipsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "blip/hash.hpp"

namespace blip {

// std::uniform_*_distribution output is not pinned by the standard, so all
// draws go through these helpers to keep runs bit-reproducible across
// standard libraries.

inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Uniform index in [0, n). n must be > 0.
inline std::size_t pick_index(std::mt19937_64& g, std::size_t n) {
  return static_cast<std::size_t>(g() % static_cast<std::uint64_t>(n));
}

/// Exponential inter-arrival gap in ms for a rate given in events/ms.
inline double exp_gap_ms(std::mt19937_64& g, double rate_per_ms) {
  double u = uniform01(g);
  if (u >= 1.0) u = 0.9999999999999999;
  return -std::log(1.0 - u) / rate_per_ms;
}

/// Derives an independent substream seed from a master seed and a tag.
inline std::uint64_t substream_seed(std::uint64_t master, std::string_view tag) {
  std::uint64_t h = fnv1a64(tag);
  // splitmix64 finalizer over the combined value
  std::uint64_t z = master ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace blip
