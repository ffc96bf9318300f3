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

#ifndef SBLAB_GENERATORS_GENERATORS_HPP_
#define SBLAB_GENERATORS_GENERATORS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sblab/model/instance.hpp"

namespace sblab::gen {

struct GenSpec {
  std::string kind;
  std::uint64_t seed = 0;
  // Dimension overrides; valid keys depend on the kind (see override_keys).
  std::map<std::string, double> overrides;
};

const std::vector<std::string>& generator_kinds();
// Override keys accepted by a kind. Throws ValidationError for unknown kinds.
const std::vector<std::string>& override_keys(std::string_view kind);

// Deterministic in (kind, seed, overrides). The instance is named
// "<kind>-<seed>". Throws ValidationError for unknown kinds, unknown keys and
// inconsistent dimensions.
model::Instance generate(const GenSpec& spec);

// Seeds base_seed .. base_seed + count - 1.
std::vector<model::Instance> sample_suite(std::string_view kind, int count,
                                          std::uint64_t base_seed,
                                          const std::map<std::string, double>& overrides = {});

}  // namespace sblab::gen

#endif  // SBLAB_GENERATORS_GENERATORS_HPP_
