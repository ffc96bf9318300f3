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

#include "sblab/engine/telemetry.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace sblab::engine {

namespace {

std::string number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_telemetry_csv(std::ostream& out, const std::vector<TelemetryRow>& rows) {
  out << "node_id,depth,bound,var,candidates,a0,a1\n";
  for (const TelemetryRow& r : rows) {
    out << r.node_id << ',' << r.depth << ',' << number(r.bound) << ',' << r.var << ','
        << r.candidates << ',' << number(r.a0) << ',' << number(r.a1) << '\n';
  }
}

std::string telemetry_csv(const std::vector<TelemetryRow>& rows) {
  std::ostringstream out;
  write_telemetry_csv(out, rows);
  return out.str();
}

}  // namespace sblab::engine
