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

#include "sblab/model/mps.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "sblab/errors.hpp"

namespace sblab::model {
namespace {

enum class Section { kNone, kName, kObjSense, kRows, kColumns, kRhs, kBounds, kEnd };

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_number(std::string_view token, int line) {
  std::string s(token);
  if (s == "inf" || s == "+inf" || s == "Inf" || s == "Infinity" || s == "1e+30" ||
      s == "1e30") {
    return kInf;
  }
  if (s == "-inf" || s == "-Inf" || s == "-Infinity" || s == "-1e+30" || s == "-1e30") {
    return -kInf;
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("invalid number '" + s + "'", line);
  }
  return value;
}

struct ColumnData {
  double cost = 0.0;
  bool integer = false;
  bool lower_set = false;
  bool upper_set = false;
  Bounds bounds;
  std::vector<std::pair<int, double>> entries;
};

class MpsReader {
 public:
  Instance read(std::string_view text) {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      handle_line(line, line_no);
      if (section_ == Section::kEnd) break;
      if (end == text.size()) break;
    }
    if (!seen_rows_) throw ParseError("missing ROWS section", 0);
    if (!seen_columns_) throw ParseError("missing COLUMNS section", 0);
    if (section_ != Section::kEnd) throw ParseError("missing ENDATA", 0);
    return build(line_no);
  }

 private:
  void handle_line(std::string_view line, int line_no) {
    if (line.empty() || line[0] == '*') return;
    auto fields = split_fields(line);
    if (fields.empty()) return;
    const bool header = line[0] != ' ' && line[0] != '\t';
    if (header) {
      start_section(fields, line_no);
      return;
    }
    switch (section_) {
      case Section::kObjSense:
        set_sense(fields[0], line_no);
        break;
      case Section::kRows:
        add_row(fields, line_no);
        break;
      case Section::kColumns:
        add_column_entry(fields, line_no);
        break;
      case Section::kRhs:
        add_rhs(fields, line_no);
        break;
      case Section::kBounds:
        add_bound(fields, line_no);
        break;
      default:
        throw ParseError("data line outside of a section", line_no);
    }
  }

  void start_section(const std::vector<std::string_view>& fields, int line_no) {
    const std::string_view key = fields[0];
    if (key == "NAME") {
      section_ = Section::kName;
      if (fields.size() > 1) name_ = std::string(fields[1]);
    } else if (key == "OBJSENSE") {
      section_ = Section::kObjSense;
      if (fields.size() > 1) set_sense(fields[1], line_no);
    } else if (key == "ROWS") {
      section_ = Section::kRows;
      seen_rows_ = true;
    } else if (key == "COLUMNS") {
      if (!seen_rows_) throw ParseError("COLUMNS before ROWS", line_no);
      section_ = Section::kColumns;
      seen_columns_ = true;
    } else if (key == "RHS") {
      if (!seen_columns_) throw ParseError("RHS before COLUMNS", line_no);
      section_ = Section::kRhs;
    } else if (key == "BOUNDS") {
      if (!seen_columns_) throw ParseError("BOUNDS before COLUMNS", line_no);
      section_ = Section::kBounds;
    } else if (key == "ENDATA") {
      section_ = Section::kEnd;
    } else if (key == "RANGES" || key == "SOS" || key == "QUADOBJ" ||
               key == "INDICATORS") {
      throw ParseError("unsupported section " + std::string(key), line_no);
    } else {
      throw ParseError("unknown section " + std::string(key), line_no);
    }
  }

  void set_sense(std::string_view token, int line_no) {
    if (token == "MAX" || token == "MAXIMIZE") {
      sense_ = Sense::kMaximize;
    } else if (token == "MIN" || token == "MINIMIZE") {
      sense_ = Sense::kMinimize;
    } else {
      throw ParseError("invalid OBJSENSE '" + std::string(token) + "'", line_no);
    }
  }

  void add_row(const std::vector<std::string_view>& fields, int line_no) {
    if (fields.size() != 2) throw ParseError("ROWS entry needs type and name", line_no);
    const std::string row_name(fields[1]);
    if (fields[0] == "N") {
      if (objective_name_.empty()) {
        objective_name_ = row_name;
      } else {
        free_rows_.emplace(row_name, 0);
      }
      return;
    }
    Relation rel;
    if (fields[0] == "L") {
      rel = Relation::kLessEqual;
    } else if (fields[0] == "G") {
      rel = Relation::kGreaterEqual;
    } else if (fields[0] == "E") {
      rel = Relation::kEqual;
    } else {
      throw ParseError("invalid row type '" + std::string(fields[0]) + "'", line_no);
    }
    if (row_index_.count(row_name) || row_name == objective_name_) {
      throw ParseError("duplicate row '" + row_name + "'", line_no);
    }
    row_index_.emplace(row_name, static_cast<int>(rows_.size()));
    Row row;
    row.relation = rel;
    rows_.push_back(std::move(row));
  }

  void add_column_entry(const std::vector<std::string_view>& fields, int line_no) {
    if (fields.size() >= 3 && fields[1] == "'MARKER'") {
      if (fields[2] == "'INTORG'") {
        in_integer_block_ = true;
      } else if (fields[2] == "'INTEND'") {
        in_integer_block_ = false;
      } else {
        throw ParseError("invalid MARKER", line_no);
      }
      return;
    }
    if (fields.size() != 3 && fields.size() != 5) {
      throw ParseError("COLUMNS entry needs 3 or 5 fields", line_no);
    }
    const std::string col_name(fields[0]);
    auto it = col_index_.find(col_name);
    int j;
    if (it == col_index_.end()) {
      j = static_cast<int>(columns_.size());
      col_index_.emplace(col_name, j);
      columns_.emplace_back();
      columns_.back().integer = in_integer_block_;
    } else {
      j = it->second;
      if (j != static_cast<int>(columns_.size()) - 1) {
        throw ParseError("column '" + col_name + "' is not contiguous", line_no);
      }
    }
    for (std::size_t k = 1; k + 1 < fields.size(); k += 2) {
      const std::string row_name(fields[k]);
      const double value = parse_number(fields[k + 1], line_no);
      if (!std::isfinite(value)) throw ParseError("infinite coefficient", line_no);
      if (row_name == objective_name_) {
        columns_[j].cost = value;
      } else if (auto r = row_index_.find(row_name); r != row_index_.end()) {
        columns_[j].entries.emplace_back(r->second, value);
      } else if (!free_rows_.count(row_name)) {
        throw ParseError("unknown row '" + row_name + "'", line_no);
      }
    }
  }

  void add_rhs(const std::vector<std::string_view>& fields, int line_no) {
    // Either "set row value [row value]" or "row value" without a set name.
    std::size_t start = (fields.size() % 2 == 1) ? 1 : 0;
    if (fields.size() < 2) throw ParseError("RHS entry too short", line_no);
    for (std::size_t k = start; k + 1 < fields.size(); k += 2) {
      const std::string row_name(fields[k]);
      const double value = parse_number(fields[k + 1], line_no);
      if (row_name == objective_name_) continue;  // objective constant: ignored
      auto r = row_index_.find(row_name);
      if (r == row_index_.end()) {
        if (free_rows_.count(row_name)) continue;
        throw ParseError("unknown row '" + row_name + "' in RHS", line_no);
      }
      if (!std::isfinite(value)) throw ParseError("infinite right-hand side", line_no);
      rows_[r->second].rhs = value;
    }
  }

  void add_bound(const std::vector<std::string_view>& fields, int line_no) {
    if (fields.size() < 3) throw ParseError("BOUNDS entry too short", line_no);
    const std::string_view type = fields[0];
    const bool needs_value = !(type == "FR" || type == "MI" || type == "PL" || type == "BV");
    std::string col_name;
    std::string_view value_token;
    if (needs_value) {
      if (fields.size() != 4) throw ParseError("BOUNDS entry needs 4 fields", line_no);
      col_name = std::string(fields[2]);
      value_token = fields[3];
    } else {
      col_name = std::string(fields[fields.size() >= 4 ? 2 : fields.size() - 1]);
    }
    auto it = col_index_.find(col_name);
    if (it == col_index_.end()) {
      throw ParseError("unknown column '" + col_name + "' in BOUNDS", line_no);
    }
    ColumnData& col = columns_[it->second];
    const double value = needs_value ? parse_number(value_token, line_no) : 0.0;
    if (type == "UP") {
      col.bounds.upper = value;
      col.upper_set = true;
      if (value < 0.0 && !col.lower_set && col.bounds.lower == 0.0) {
        col.bounds.lower = -kInf;
      }
    } else if (type == "LO") {
      col.bounds.lower = value;
      col.lower_set = true;
    } else if (type == "FX") {
      col.bounds = {value, value};
      col.lower_set = col.upper_set = true;
    } else if (type == "FR") {
      col.bounds = {-kInf, kInf};
      col.lower_set = col.upper_set = true;
    } else if (type == "MI") {
      col.bounds.lower = -kInf;
      col.lower_set = true;
    } else if (type == "PL") {
      col.bounds.upper = kInf;
      col.upper_set = true;
    } else if (type == "BV") {
      col.bounds = {0.0, 1.0};
      col.integer = true;
      col.lower_set = col.upper_set = true;
    } else if (type == "LI" || type == "UI") {
      col.integer = true;
      if (type == "LI") {
        col.bounds.lower = value;
        col.lower_set = true;
      } else {
        col.bounds.upper = value;
        col.upper_set = true;
      }
    } else {
      throw ParseError("unsupported bound type '" + std::string(type) + "'", line_no);
    }
  }

  Instance build(int line_no) {
    Instance inst;
    inst.name = name_;
    inst.sense = sense_;
    const int n = static_cast<int>(columns_.size());
    inst.objective.resize(n);
    inst.bounds.resize(n);
    inst.var_kind.resize(n);
    inst.rows = std::move(rows_);
    for (int j = 0; j < n; ++j) {
      ColumnData& col = columns_[j];
      inst.objective[j] = col.cost;
      if (col.integer) {
        if (!col.upper_set) col.bounds.upper = 1.0;
        if (col.bounds.lower != 0.0 || col.bounds.upper != 1.0) {
          throw ParseError("general integer variable unsupported", line_no);
        }
        inst.var_kind[j] = VarKind::kBinary;
      } else {
        inst.var_kind[j] = VarKind::kContinuous;
      }
      inst.bounds[j] = col.bounds;
      for (const auto& [i, value] : col.entries) {
        inst.rows[i].indices.push_back(j);
        inst.rows[i].values.push_back(value);
      }
    }
    try {
      validate(inst);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), 0);
    }
    return inst;
  }

  Section section_ = Section::kNone;
  std::string name_;
  Sense sense_ = Sense::kMinimize;
  std::string objective_name_;
  std::unordered_map<std::string, int> row_index_;
  std::unordered_map<std::string, int> free_rows_;
  std::unordered_map<std::string, int> col_index_;
  std::vector<Row> rows_;
  std::vector<ColumnData> columns_;
  bool in_integer_block_ = false;
  bool seen_rows_ = false;
  bool seen_columns_ = false;
};

std::string fmt_number(double v) {
  if (v == kInf) return "1e+30";
  if (v == -kInf) return "-1e+30";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

Instance parse_mps(std::string_view text) { return MpsReader().read(text); }

Instance load_mps(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open MPS file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  Instance inst = parse_mps(buffer.str());
  if (inst.name.empty()) inst.name = path.stem().string();
  return inst;
}

std::string write_mps(const Instance& inst) {
  validate(inst);
  std::ostringstream out;
  out << "NAME " << (inst.name.empty() ? "unnamed" : inst.name) << "\n";
  if (inst.sense == Sense::kMaximize) out << "OBJSENSE\n    MAX\n";
  out << "ROWS\n N  OBJ\n";
  for (int i = 0; i < inst.num_rows(); ++i) {
    const char* type = "L";
    if (inst.rows[i].relation == Relation::kGreaterEqual) type = "G";
    if (inst.rows[i].relation == Relation::kEqual) type = "E";
    out << " " << type << "  R" << i << "\n";
  }
  // Column-major view of the rows.
  std::vector<std::vector<std::pair<int, double>>> cols(inst.num_vars());
  for (int i = 0; i < inst.num_rows(); ++i) {
    const Row& row = inst.rows[i];
    for (std::size_t k = 0; k < row.size(); ++k) {
      cols[row.indices[k]].emplace_back(i, row.values[k]);
    }
  }
  out << "COLUMNS\n";
  bool in_int = false;
  int marker = 0;
  for (int j = 0; j < inst.num_vars(); ++j) {
    const bool is_int = inst.is_binary(j);
    if (is_int != in_int) {
      out << "    MARKER" << marker++ << " 'MARKER' "
          << (is_int ? "'INTORG'" : "'INTEND'") << "\n";
      in_int = is_int;
    }
    out << "    C" << j << " OBJ " << fmt_number(inst.objective[j]) << "\n";
    for (const auto& [i, v] : cols[j]) {
      out << "    C" << j << " R" << i << " " << fmt_number(v) << "\n";
    }
  }
  if (in_int) out << "    MARKER" << marker++ << " 'MARKER' 'INTEND'\n";
  out << "RHS\n";
  for (int i = 0; i < inst.num_rows(); ++i) {
    if (inst.rows[i].rhs != 0.0) {
      out << "    RHS R" << i << " " << fmt_number(inst.rows[i].rhs) << "\n";
    }
  }
  out << "BOUNDS\n";
  for (int j = 0; j < inst.num_vars(); ++j) {
    const Bounds& b = inst.bounds[j];
    if (inst.is_binary(j)) {
      out << " UP BND C" << j << " 1\n";
      continue;
    }
    if (b.lower == -kInf && b.upper == kInf) {
      out << " FR BND C" << j << "\n";
      continue;
    }
    if (b.lower == b.upper) {
      out << " FX BND C" << j << " " << fmt_number(b.lower) << "\n";
      continue;
    }
    if (b.lower == -kInf) {
      out << " MI BND C" << j << "\n";
    } else if (b.lower != 0.0) {
      out << " LO BND C" << j << " " << fmt_number(b.lower) << "\n";
    }
    if (b.upper != kInf) out << " UP BND C" << j << " " << fmt_number(b.upper) << "\n";
  }
  out << "ENDATA\n";
  return out.str();
}

void save_mps(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write MPS file " + path.string());
  out << write_mps(inst);
}

}  // namespace sblab::model
