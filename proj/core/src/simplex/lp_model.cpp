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

#include "sblab/simplex/lp_model.hpp"

#include <utility>

#include "sblab/errors.hpp"

namespace sblab::lp {

LpModel::LpModel(const model::Instance& inst)
    : inst_(std::make_shared<const model::Instance>(inst)),
      n_(inst.num_vars()),
      m_(inst.num_rows()),
      cost_(inst.canonical_cost()) {
  model::validate(inst);
  row_bounds_.reserve(m_);
  for (const model::Row& row : inst.rows) {
    switch (row.relation) {
      case model::Relation::kLessEqual:
        row_bounds_.push_back({-kInf, row.rhs});
        break;
      case model::Relation::kGreaterEqual:
        row_bounds_.push_back({row.rhs, kInf});
        break;
      case model::Relation::kEqual:
        row_bounds_.push_back({row.rhs, row.rhs});
        break;
    }
  }
  std::vector<int> count(n_ + 1, 0);
  for (const model::Row& row : inst.rows) {
    for (int j : row.indices) ++count[j + 1];
  }
  col_start_.assign(n_ + 1, 0);
  for (int j = 0; j < n_; ++j) col_start_[j + 1] = col_start_[j] + count[j + 1];
  col_row_.resize(col_start_[n_]);
  col_val_.resize(col_start_[n_]);
  std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
  for (int i = 0; i < m_; ++i) {
    const model::Row& row = inst.rows[i];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row.values[k] == 0.0) continue;
      const int pos = fill[row.indices[k]]++;
      col_row_[pos] = i;
      col_val_[pos] = row.values[k];
    }
  }
  // Drop slots left by explicit zeros.
  std::vector<int> start(n_ + 1, 0);
  int out = 0;
  for (int j = 0; j < n_; ++j) {
    start[j] = out;
    for (int p = col_start_[j]; p < fill[j]; ++p) {
      col_row_[out] = col_row_[p];
      col_val_[out] = col_val_[p];
      ++out;
    }
  }
  start[n_] = out;
  col_start_ = std::move(start);
  col_row_.resize(out);
  col_val_.resize(out);
}

LpView::LpView(std::shared_ptr<const LpModel> model) : model_(std::move(model)) {
  if (!model_) throw ContractViolation("LpView: null model");
  const auto& inst = model_->instance();
  bounds_ = inst.bounds;
  for (const Bounds& b : bounds_) {
    if (b.lower > b.upper) ++empty_count_;
  }
}

void LpView::set_bounds(int j, Bounds b) {
  if (j < 0 || j >= static_cast<int>(bounds_.size())) {
    throw ContractViolation("LpView::set_bounds: index out of range");
  }
  if (bounds_[j].lower > bounds_[j].upper) --empty_count_;
  bounds_[j] = b;
  if (b.lower > b.upper) ++empty_count_;
}

}  // namespace sblab::lp
