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

#include <map>
#include <random>

#include "blip/topology.hpp"

namespace blip {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

double norm(Vec2 v);

/// Synthetic 2-D network coordinate with a confidence weight.
/// error == 1.0 means no confidence; updates keep error in (0, 1].
struct VivaldiCoordinate {
  Vec2 position;
  double error = 1.0;
};

struct RttSample {
  StampId peer;
  VivaldiCoordinate peer_coordinate;
  double rtt_ms = 0.0;
};

/// Adaptive-timestep spring relaxation constants; config-overridable.
struct VivaldiTuning {
  double cc = 0.25;  // position step scale
  double ce = 0.25;  // error smoothing scale
};

/// Predicted RTT between two coordinates: Euclidean distance in ms-space.
double estimate_rtt(const VivaldiCoordinate& a, const VivaldiCoordinate& b);

/// One spring-relaxation step toward a measured peer RTT. Pure except for
/// the direction stream, consumed only when the two positions coincide.
VivaldiCoordinate vivaldi_update(const VivaldiCoordinate& self,
                                 const RttSample& sample,
                                 std::mt19937_64& direction_stream,
                                 const VivaldiTuning& tuning = {});

struct CoordinateErrorStats {
  double median_relative_error = 0.0;
  double p90_relative_error = 0.0;
};

/// Relative prediction error per reachable stamp pair:
/// |estimate − true RTT| / true RTT with true RTT = 2 × path_latency.
/// Throws std::invalid_argument on an empty input (fewer than two
/// coordinates or no reachable pair).
CoordinateErrorStats coordinate_error_stats(
    const std::map<StampId, VivaldiCoordinate>& coords,
    const ValidatedTopology& truth);

}  // namespace blip
