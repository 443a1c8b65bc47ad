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

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "blip/topology.hpp"

namespace blip {

/// (counter, stamp_id) pair; totally ordered, so merges are deterministic.
struct LamportStamp {
  std::uint64_t counter = 0;
  StampId stamp_id;

  friend auto operator<=>(const LamportStamp&, const LamportStamp&) = default;
};

/// A request/response pair captured so later identical requests can be
/// replayed without leaving the stamp.
struct RecordedExchange {
  std::string request_key;  // canonical digest of (service, method, arguments)
  std::string response;
  LamportStamp recorded_at;

  friend bool operator==(const RecordedExchange&, const RecordedExchange&) = default;
};

struct KvWrite {
  std::string key;
  std::string value;

  friend bool operator==(const KvWrite&, const KvWrite&) = default;
};

/// One replicated store operation. Entries from one origin carry strictly
/// increasing counters.
struct StateLogEntry {
  StampId origin;
  LamportStamp lamport;
  std::variant<KvWrite, RecordedExchange> payload;

  friend bool operator==(const StateLogEntry&, const StateLogEntry&) = default;
};

class MalformedLogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Union of both logs, deduplicated by (origin, counter) and totally ordered
/// by (counter, origin). Commutative and idempotent. Throws MalformedLogError
/// when an input breaks per-origin monotonicity, carries a lamport whose
/// stamp_id differs from its origin, or two entries share (origin, counter)
/// with different payloads.
std::vector<StateLogEntry> merge_state_logs(const std::vector<StateLogEntry>& a,
                                            const std::vector<StateLogEntry>& b);

}  // namespace blip
