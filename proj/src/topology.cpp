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

#include "blip/topology.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace blip {

const char* to_string(Tier tier) {
  switch (tier) {
    case Tier::Edge: return "Edge";
    case Tier::Periphery: return "Periphery";
    case Tier::Core: return "Core";
  }
  return "?";
}

std::optional<Tier> tier_from_string(const std::string& name) {
  if (name == "Edge") return Tier::Edge;
  if (name == "Periphery") return Tier::Periphery;
  if (name == "Core") return Tier::Core;
  return std::nullopt;
}

const char* to_string(ValidationIssue::Code code) {
  using Code = ValidationIssue::Code;
  switch (code) {
    case Code::DuplicateStampId: return "DuplicateStampId";
    case Code::DanglingLinkEndpoint: return "DanglingLinkEndpoint";
    case Code::NonPositiveLatency: return "NonPositiveLatency";
    case Code::MissingUeOrigin: return "MissingUeOrigin";
    case Code::SelfLoopLink: return "SelfLoopLink";
    case Code::DuplicateLink: return "DuplicateLink";
  }
  return "?";
}

namespace {

std::string link_token(const NetworkLink& link) {
  return link.endpoint_a + "--" + link.endpoint_b;
}

std::string describe(const std::vector<ValidationIssue>& issues) {
  std::ostringstream out;
  out << "invalid topology (" << issues.size() << " issue(s)):";
  for (const auto& issue : issues) {
    out << " [" << to_string(issue.code) << " " << issue.element << "] "
        << issue.message << ";";
  }
  return out.str();
}

}  // namespace

TopologyError::TopologyError(std::vector<ValidationIssue> issues)
    : std::runtime_error(describe(issues)), issues_(std::move(issues)) {}

std::vector<ValidationIssue> check_topology(const NetworkTopology& raw) {
  using Code = ValidationIssue::Code;
  std::vector<ValidationIssue> issues;

  std::set<StampId> seen;
  std::set<StampId> duplicates;
  for (const auto& stamp : raw.stamps) {
    if (!seen.insert(stamp.stamp_id).second) {
      duplicates.insert(stamp.stamp_id);
    }
  }
  for (const auto& id : duplicates) {
    issues.push_back({Code::DuplicateStampId, id,
                      "stamp id declared more than once"});
  }

  std::set<std::pair<StampId, StampId>> pairs;
  for (const auto& link : raw.links) {
    for (const auto* endpoint : {&link.endpoint_a, &link.endpoint_b}) {
      if (!seen.count(*endpoint)) {
        issues.push_back({Code::DanglingLinkEndpoint, *endpoint,
                          "link " + link_token(link) +
                              " references unknown stamp \"" + *endpoint + "\""});
      }
    }
    if (!(link.one_way_latency_ms > 0.0)) {
      issues.push_back({Code::NonPositiveLatency, link_token(link),
                        "one_way_latency_ms must be > 0"});
    }
    if (link.endpoint_a == link.endpoint_b) {
      issues.push_back({Code::SelfLoopLink, link_token(link),
                        "link endpoints must differ"});
    } else {
      auto key = std::minmax(link.endpoint_a, link.endpoint_b);
      if (!pairs.insert(key).second) {
        issues.push_back({Code::DuplicateLink, link_token(link),
                          "more than one link between the same endpoints"});
      }
    }
  }

  if (!seen.count(raw.ue_origin)) {
    issues.push_back({Code::MissingUeOrigin, raw.ue_origin,
                      "ue_origin \"" + raw.ue_origin + "\" is not a stamp"});
  }

  return issues;
}

ValidatedTopology validate_topology(NetworkTopology raw) {
  auto issues = check_topology(raw);
  if (!issues.empty()) throw TopologyError(std::move(issues));

  ValidatedTopology topo;
  topo.stamps_ = std::move(raw.stamps);
  topo.links_ = std::move(raw.links);
  topo.ue_origin_ = std::move(raw.ue_origin);
  for (std::size_t i = 0; i < topo.stamps_.size(); ++i) {
    topo.stamp_index_[topo.stamps_[i].stamp_id] = i;
  }
  topo.adjacency_.resize(topo.stamps_.size());
  for (std::size_t li = 0; li < topo.links_.size(); ++li) {
    const auto& link = topo.links_[li];
    auto a = topo.stamp_index_.at(link.endpoint_a);
    auto b = topo.stamp_index_.at(link.endpoint_b);
    topo.adjacency_[a].emplace_back(b, li);
    topo.adjacency_[b].emplace_back(a, li);
  }
  return topo;
}

bool ValidatedTopology::has_stamp(const StampId& id) const {
  return stamp_index_.count(id) != 0;
}

const StampDescriptor& ValidatedTopology::stamp(const StampId& id) const {
  auto it = stamp_index_.find(id);
  if (it == stamp_index_.end()) {
    throw std::out_of_range("unknown stamp \"" + id + "\"");
  }
  return stamps_[it->second];
}

std::optional<std::size_t> ValidatedTopology::link_index(const StampId& a,
                                                         const StampId& b) const {
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const auto& l = links_[i];
    if ((l.endpoint_a == a && l.endpoint_b == b) ||
        (l.endpoint_a == b && l.endpoint_b == a)) {
      return i;
    }
  }
  return std::nullopt;
}

bool ValidatedTopology::set_link_up(const StampId& a, const StampId& b, bool up) {
  auto idx = link_index(a, b);
  if (!idx) return false;
  links_[*idx].up = up;
  return true;
}

std::optional<bool> ValidatedTopology::link_up(const StampId& a,
                                               const StampId& b) const {
  auto idx = link_index(a, b);
  if (!idx) return std::nullopt;
  return links_[*idx].up;
}

std::optional<std::pair<double, std::vector<StampId>>>
ValidatedTopology::path_with_hops(const StampId& from, const StampId& to) const {
  auto fit = stamp_index_.find(from);
  auto tit = stamp_index_.find(to);
  if (fit == stamp_index_.end() || tit == stamp_index_.end()) {
    throw std::out_of_range("path query over unknown stamp");
  }
  const std::size_t src = fit->second, dst = tit->second;
  if (src == dst) return std::make_pair(0.0, std::vector<StampId>{from});

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(stamps_.size(), kInf);
  std::vector<std::size_t> parent(stamps_.size(), SIZE_MAX);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  dist[src] = 0.0;
  frontier.emplace(0.0, src);
  while (!frontier.empty()) {
    auto [d, node] = frontier.top();
    frontier.pop();
    if (d > dist[node]) continue;
    if (node == dst) break;
    for (auto [next, li] : adjacency_[node]) {
      if (!links_[li].up) continue;
      double nd = d + links_[li].one_way_latency_ms;
      if (nd < dist[next]) {
        dist[next] = nd;
        parent[next] = node;
        frontier.emplace(nd, next);
      }
    }
  }
  if (dist[dst] == kInf) return std::nullopt;

  std::vector<StampId> hops;
  for (std::size_t at = dst; at != SIZE_MAX; at = parent[at]) {
    hops.push_back(stamps_[at].stamp_id);
    if (at == src) break;
  }
  std::reverse(hops.begin(), hops.end());
  return std::make_pair(dist[dst], std::move(hops));
}

std::optional<double> ValidatedTopology::path_latency(const StampId& from,
                                                      const StampId& to) const {
  auto path = path_with_hops(from, to);
  if (!path) return std::nullopt;
  return path->first;
}

std::optional<double> ValidatedTopology::rtt_ms(const StampId& from,
                                                const StampId& to) const {
  auto one_way = path_latency(from, to);
  if (!one_way) return std::nullopt;
  return 2.0 * *one_way;
}

std::vector<std::vector<StampId>> ValidatedTopology::components(
    bool respect_status) const {
  std::vector<std::vector<StampId>> result;
  std::vector<bool> visited(stamps_.size(), false);
  for (std::size_t start = 0; start < stamps_.size(); ++start) {
    if (visited[start]) continue;
    std::vector<StampId> members;
    std::vector<std::size_t> stack{start};
    visited[start] = true;
    while (!stack.empty()) {
      auto node = stack.back();
      stack.pop_back();
      members.push_back(stamps_[node].stamp_id);
      for (auto [next, li] : adjacency_[node]) {
        if (respect_status && !links_[li].up) continue;
        if (!visited[next]) {
          visited[next] = true;
          stack.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return result;
}

std::vector<std::vector<StampId>> ValidatedTopology::reachable_components() const {
  return components(true);
}

std::vector<std::vector<StampId>>
ValidatedTopology::reachable_components_ignoring_status() const {
  return components(false);
}

}  // namespace blip
