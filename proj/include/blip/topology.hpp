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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blip {

using StampId = std::string;

/// Proximity class of a compute location, declared per stamp.
enum class Tier { Edge, Periphery, Core };

const char* to_string(Tier tier);
std::optional<Tier> tier_from_string(const std::string& name);

/// A compute location, anything from a single device to a data centre.
struct StampDescriptor {
  StampId stamp_id;
  std::string provider_id;
  Tier tier = Tier::Edge;
  std::uint64_t capacity_units = 0;
  /// Ground-truth planar position in ms-space; simulation-only input.
  std::optional<std::array<double, 2>> true_position;
};

/// Undirected link carrying a single one-way latency weight.
struct NetworkLink {
  StampId endpoint_a;
  StampId endpoint_b;
  double one_way_latency_ms = 0.0;
  bool up = true;
};

struct NetworkTopology {
  std::vector<StampDescriptor> stamps;
  std::vector<NetworkLink> links;
  StampId ue_origin;
};

struct ValidationIssue {
  enum class Code {
    DuplicateStampId,
    DanglingLinkEndpoint,
    NonPositiveLatency,
    MissingUeOrigin,
    SelfLoopLink,
    DuplicateLink,
  };
  Code code;
  std::string element;  // the offending stamp id or "a--b" link token
  std::string message;
};

const char* to_string(ValidationIssue::Code code);

class TopologyError : public std::runtime_error {
 public:
  explicit TopologyError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

/// Checked, indexed topology. The graph structure is immutable after
/// validation; only the link up/down status may be flipped (partition
/// events), which is done by the single-threaded simulator that owns the
/// instance. Read-only sharing across threads is safe.
class ValidatedTopology {
 public:
  const std::vector<StampDescriptor>& stamps() const { return stamps_; }
  const std::vector<NetworkLink>& links() const { return links_; }
  const StampId& ue_origin() const { return ue_origin_; }

  bool has_stamp(const StampId& id) const;
  const StampDescriptor& stamp(const StampId& id) const;

  /// Flips a link's status; returns false when no such link exists.
  bool set_link_up(const StampId& a, const StampId& b, bool up);
  std::optional<bool> link_up(const StampId& a, const StampId& b) const;

  /// Minimum additive one-way latency over up links; 0 when from == to;
  /// nullopt when no up path exists.
  std::optional<double> path_latency(const StampId& from, const StampId& to) const;

  /// Round trip: 2 × path_latency.
  std::optional<double> rtt_ms(const StampId& from, const StampId& to) const;

  /// Shortest up path as (one-way latency, hop sequence including endpoints).
  std::optional<std::pair<double, std::vector<StampId>>> path_with_hops(
      const StampId& from, const StampId& to) const;

  /// Partition of all stamp ids into connected components over up links.
  /// Components are sorted by smallest member; members are sorted.
  std::vector<std::vector<StampId>> reachable_components() const;

  /// Same partition computed as if every link were up.
  std::vector<std::vector<StampId>> reachable_components_ignoring_status() const;

 private:
  friend ValidatedTopology validate_topology(NetworkTopology raw);

  std::vector<StampDescriptor> stamps_;
  std::vector<NetworkLink> links_;
  StampId ue_origin_;
  std::map<StampId, std::size_t> stamp_index_;
  // stamp index -> list of (neighbor stamp index, link index)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;

  std::vector<std::vector<StampId>> components(bool respect_status) const;
  std::optional<std::size_t> link_index(const StampId& a, const StampId& b) const;
};

/// Total check: reports every violation, not just the first.
std::vector<ValidationIssue> check_topology(const NetworkTopology& raw);

/// Throws TopologyError carrying all violations when the topology is invalid.
ValidatedTopology validate_topology(NetworkTopology raw);

}  // namespace blip
