// Copyright 2026 The sblab Authors
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

#ifndef SBLAB_ENGINE_TELEMETRY_HPP_
#define SBLAB_ENGINE_TELEMETRY_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sblab::engine {

// One line per branched node.
struct TelemetryRow {
  std::int64_t node_id = 0;
  int depth = 0;
  double bound = 0.0;  // node LP value in the instance's objective sense
  int var = -1;
  int candidates = 0;
  double a0 = 0.0;
  double a1 = 0.0;
  bool operator==(const TelemetryRow&) const = default;
};

void write_telemetry_csv(std::ostream& out, const std::vector<TelemetryRow>& rows);
std::string telemetry_csv(const std::vector<TelemetryRow>& rows);

}  // namespace sblab::engine

#endif  // SBLAB_ENGINE_TELEMETRY_HPP_
