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

#include "blip/coordinates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "blip/rng.hpp"

namespace blip {

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

double estimate_rtt(const VivaldiCoordinate& a, const VivaldiCoordinate& b) {
  return norm(a.position - b.position);
}

VivaldiCoordinate vivaldi_update(const VivaldiCoordinate& self,
                                 const RttSample& sample,
                                 std::mt19937_64& direction_stream,
                                 const VivaldiTuning& tuning) {
  const double rtt = sample.rtt_ms;
  const double dist = estimate_rtt(self, sample.peer_coordinate);

  // Confidence-weighted blend of the two endpoints' errors.
  const double w = self.error / (self.error + sample.peer_coordinate.error);
  const double sample_error = std::abs(dist - rtt) / rtt;

  VivaldiCoordinate next = self;
  next.error = std::min(
      1.0, sample_error * tuning.ce * w + self.error * (1.0 - tuning.ce * w));

  Vec2 direction;
  if (dist > 0.0) {
    direction = (1.0 / dist) * (self.position - sample.peer_coordinate.position);
  } else {
    // Coincident positions: deterministic unit vector from the seeded stream.
    const double angle = uniform01(direction_stream) * 2.0 * std::numbers::pi;
    direction = {std::cos(angle), std::sin(angle)};
  }

  const double step = tuning.cc * w * (rtt - dist);
  next.position = self.position + step * direction;
  return next;
}

CoordinateErrorStats coordinate_error_stats(
    const std::map<StampId, VivaldiCoordinate>& coords,
    const ValidatedTopology& truth) {
  std::vector<double> errors;
  for (auto a = coords.begin(); a != coords.end(); ++a) {
    for (auto b = std::next(a); b != coords.end(); ++b) {
      auto true_rtt = truth.rtt_ms(a->first, b->first);
      if (!true_rtt || *true_rtt <= 0.0) continue;
      const double est = estimate_rtt(a->second, b->second);
      errors.push_back(std::abs(est - *true_rtt) / *true_rtt);
    }
  }
  if (errors.empty()) {
    throw std::invalid_argument(
        "coordinate_error_stats: empty input, no reachable coordinate pair");
  }
  std::sort(errors.begin(), errors.end());
  auto nearest_rank = [&](double q) {
    std::size_t rank = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(errors.size())));
    if (rank == 0) rank = 1;
    return errors[rank - 1];
  };
  return {nearest_rank(0.5), nearest_rank(0.9)};
}

}  // namespace blip
