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

#ifndef SBLAB_MODEL_JSON_CODEC_HPP_
#define SBLAB_MODEL_JSON_CODEC_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "sblab/model/instance.hpp"

namespace sblab::model {

// JSON instance codec. Top-level fields: name, sense, objective, bounds,
// var_kind, rows. Infinite bounds are written as null; each row is
// {"indices": [...], "values": [...], "relation": "<=" | "=" | ">=", "rhs": v}.
std::string to_json(const Instance& inst, int indent = -1);
Instance from_json(std::string_view text);

Instance load_json(const std::filesystem::path& path);
void save_json(const Instance& inst, const std::filesystem::path& path);

// Dispatches on extension: .json or .mps.
Instance load_instance(const std::filesystem::path& path);

}  // namespace sblab::model

#endif  // SBLAB_MODEL_JSON_CODEC_HPP_
