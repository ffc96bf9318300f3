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

#ifndef SBLAB_SIMPLEX_LP_MODEL_HPP_
#define SBLAB_SIMPLEX_LP_MODEL_HPP_

#include <memory>
#include <span>
#include <vector>

#include "sblab/model/instance.hpp"

namespace sblab::lp {

using model::Bounds;
using model::kInf;

// Column-oriented copy of an Instance's constraint matrix in the form
//   A x - r = 0,   l <= (x, r) <= u
// where r holds one logical (row activity) variable per row. Logical j = n + i
// has column -e_i and bounds derived from the row's relation and rhs.
class LpModel {
 public:
  explicit LpModel(const model::Instance& inst);

  int num_structural() const { return n_; }
  int num_rows() const { return m_; }
  int num_total() const { return n_ + m_; }

  const model::Instance& instance() const { return *inst_; }
  // Canonical (minimization) cost; logicals cost zero.
  double cost(int j) const { return j < n_ ? cost_[j] : 0.0; }
  std::span<const double> structural_cost() const { return cost_; }
  Bounds logical_bounds(int i) const { return row_bounds_[i]; }

  // Structural column j as parallel (row, value) spans.
  std::span<const int> col_rows(int j) const {
    return {col_row_.data() + col_start_[j], col_row_.data() + col_start_[j + 1]};
  }
  std::span<const double> col_values(int j) const {
    return {col_val_.data() + col_start_[j], col_val_.data() + col_start_[j + 1]};
  }
  int nnz() const { return static_cast<int>(col_row_.size()); }

 private:
  std::shared_ptr<const model::Instance> inst_;
  int n_ = 0;
  int m_ = 0;
  std::vector<double> cost_;
  std::vector<Bounds> row_bounds_;
  std::vector<int> col_start_;
  std::vector<int> col_row_;
  std::vector<double> col_val_;
};

// An LpModel plus the node-local overlay of (tightened) structural bounds.
class LpView {
 public:
  explicit LpView(std::shared_ptr<const LpModel> model);

  const LpModel& model() const { return *model_; }
  std::shared_ptr<const LpModel> model_ptr() const { return model_; }

  Bounds bounds(int j) const { return bounds_[j]; }
  std::span<const Bounds> structural_bounds() const { return bounds_; }
  // Replaces the bounds of structural variable j. An empty interval marks the
  // view trivially infeasible.
  void set_bounds(int j, Bounds b);
  bool trivially_infeasible() const { return empty_count_ > 0; }

 private:
  std::shared_ptr<const LpModel> model_;
  std::vector<Bounds> bounds_;
  int empty_count_ = 0;
};

}  // namespace sblab::lp

#endif  // SBLAB_SIMPLEX_LP_MODEL_HPP_
