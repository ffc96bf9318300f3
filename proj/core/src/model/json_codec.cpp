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

#include "sblab/model/json_codec.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sblab/errors.hpp"
#include "sblab/model/mps.hpp"

namespace sblab::model {
namespace {

using nlohmann::json;

json bound_to_json(double v) {
  if (v == kInf || v == -kInf) return nullptr;
  return v;
}

double bound_from_json(const json& j, double if_null) {
  if (j.is_null()) return if_null;
  return j.get<double>();
}

Relation relation_from_string(const std::string& s) {
  if (s == "<=" || s == "L") return Relation::kLessEqual;
  if (s == ">=" || s == "G") return Relation::kGreaterEqual;
  if (s == "=" || s == "==" || s == "E") return Relation::kEqual;
  throw ParseError("invalid relation '" + s + "'", 0);
}

}  // namespace

std::string to_json(const Instance& inst, int indent) {
  json j;
  j["name"] = inst.name;
  j["sense"] = std::string(to_string(inst.sense));
  j["objective"] = inst.objective;
  json bounds = json::array();
  for (const Bounds& b : inst.bounds) {
    bounds.push_back(json::array({bound_to_json(b.lower), bound_to_json(b.upper)}));
  }
  j["bounds"] = std::move(bounds);
  json kinds = json::array();
  for (VarKind k : inst.var_kind) kinds.push_back(std::string(to_string(k)));
  j["var_kind"] = std::move(kinds);
  json rows = json::array();
  for (const Row& row : inst.rows) {
    rows.push_back({{"indices", row.indices},
                    {"values", row.values},
                    {"relation", std::string(to_string(row.relation))},
                    {"rhs", row.rhs}});
  }
  j["rows"] = std::move(rows);
  return j.dump(indent);
}

Instance from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  Instance inst;
  try {
    inst.name = j.value("name", std::string());
    const std::string sense = j.at("sense").get<std::string>();
    if (sense == "maximize" || sense == "max") {
      inst.sense = Sense::kMaximize;
    } else if (sense == "minimize" || sense == "min") {
      inst.sense = Sense::kMinimize;
    } else {
      throw ParseError("invalid sense '" + sense + "'", 0);
    }
    inst.objective = j.at("objective").get<std::vector<double>>();
    for (const json& b : j.at("bounds")) {
      if (!b.is_array() || b.size() != 2) throw ParseError("bounds entry must be [lo, hi]", 0);
      inst.bounds.push_back({bound_from_json(b[0], -kInf), bound_from_json(b[1], kInf)});
    }
    for (const json& k : j.at("var_kind")) {
      const std::string s = k.get<std::string>();
      if (s == "binary") {
        inst.var_kind.push_back(VarKind::kBinary);
      } else if (s == "continuous") {
        inst.var_kind.push_back(VarKind::kContinuous);
      } else {
        throw ParseError("unsupported var_kind '" + s + "'", 0);
      }
    }
    for (const json& r : j.at("rows")) {
      Row row;
      row.indices = r.at("indices").get<std::vector<int>>();
      row.values = r.at("values").get<std::vector<double>>();
      row.relation = relation_from_string(r.at("relation").get<std::string>());
      row.rhs = r.at("rhs").get<double>();
      inst.rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance JSON: ") + e.what(), 0);
  }
  try {
    validate(inst);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), 0);
  }
  return inst;
}

Instance load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open instance file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  Instance inst = from_json(buffer.str());
  if (inst.name.empty()) inst.name = path.stem().string();
  return inst;
}

void save_json(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write instance file " + path.string());
  out << to_json(inst) << "\n";
}

Instance load_instance(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".mps" || ext == ".MPS") return load_mps(path);
  return load_json(path);
}

}  // namespace sblab::model
