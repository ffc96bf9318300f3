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

#ifndef SBLAB_MODEL_MPS_HPP_
#define SBLAB_MODEL_MPS_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "sblab/model/instance.hpp"

namespace sblab::model {

// Free-format MPS. Supported sections: NAME, OBJSENSE, ROWS, COLUMNS (with
// MARKER INTORG/INTEND), RHS, BOUNDS, ENDATA. Integer-marked columns must end
// up with bounds [0,1]; an integer column with no explicit upper bound is
// read as binary. Anything else raises ParseError.
Instance load_mps(const std::filesystem::path& path);
Instance parse_mps(std::string_view text);

// Writes columns as C<j> and rows as R<i>; numbers are printed with 17
// significant digits so the reader recovers them exactly.
std::string write_mps(const Instance& inst);
void save_mps(const Instance& inst, const std::filesystem::path& path);

}  // namespace sblab::model

#endif  // SBLAB_MODEL_MPS_HPP_
