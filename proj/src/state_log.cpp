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

#include "blip/state_log.hpp"

#include <algorithm>
#include <map>

namespace blip {

namespace {

void check_log(const std::vector<StateLogEntry>& log, const char* which) {
  std::map<StampId, std::uint64_t> last_counter;
  for (const auto& entry : log) {
    if (entry.lamport.stamp_id != entry.origin) {
      throw MalformedLogError(std::string("malformed log ") + which +
                              ": lamport stamp_id differs from entry origin \"" +
                              entry.origin + "\"");
    }
    auto it = last_counter.find(entry.origin);
    if (it != last_counter.end() && entry.lamport.counter <= it->second) {
      throw MalformedLogError(std::string("malformed log ") + which +
                              ": non-increasing counters for origin \"" +
                              entry.origin + "\"");
    }
    last_counter[entry.origin] = entry.lamport.counter;
  }
}

}  // namespace

std::vector<StateLogEntry> merge_state_logs(const std::vector<StateLogEntry>& a,
                                            const std::vector<StateLogEntry>& b) {
  check_log(a, "a");
  check_log(b, "b");

  std::map<std::pair<std::uint64_t, StampId>, const StateLogEntry*> merged;
  for (const auto* log : {&a, &b}) {
    for (const auto& entry : *log) {
      auto key = std::make_pair(entry.lamport.counter, entry.origin);
      auto [it, inserted] = merged.emplace(key, &entry);
      if (!inserted && !(*it->second == entry)) {
        throw MalformedLogError(
            "conflicting payloads for (origin, counter) = (\"" + entry.origin +
            "\", " + std::to_string(entry.lamport.counter) + ")");
      }
    }
  }

  std::vector<StateLogEntry> result;
  result.reserve(merged.size());
  for (const auto& [key, entry] : merged) result.push_back(*entry);
  return result;
}

}  // namespace blip
