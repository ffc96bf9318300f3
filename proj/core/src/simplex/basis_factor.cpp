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

#include "simplex/basis_factor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sblab/errors.hpp"

namespace sblab::lp {

namespace {
constexpr double kMaxRefactorResidual = 1e-9;
}  // namespace

void BasisFactor::refactor(const LpModel& model, std::span<const int> head) {
  const int m = model.num_rows();
  const int n = model.num_structural();
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(m) * 2);
  for (int k = 0; k < m; ++k) {
    const int j = head[k];
    if (j < n) {
      auto rows = model.col_rows(j);
      auto vals = model.col_values(j);
      for (std::size_t p = 0; p < rows.size(); ++p) entries.emplace_back(rows[p], k, vals[p]);
    } else {
      entries.emplace_back(j - n, k, -1.0);
    }
  }
  auto lu = std::make_shared<Lu>();
  if (m > 0) {
    Eigen::SparseMatrix<double> basis(m, m);
    basis.setFromTriplets(entries.begin(), entries.end());
    basis.makeCompressed();
    lu->compute(basis);
    if (lu->info() != Eigen::Success) {
      throw NumericalFailure("singular basis during refactorization: " + lu->lastErrorMessage());
    }
    // SparseLU only reports exact zero pivots; a residual check catches the
    // near-singular ones.
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);
    const Eigen::VectorXd x = lu->solve(ones);
    const double residual = (basis * x - ones).lpNorm<Eigen::Infinity>();
    if (!(residual <= kMaxRefactorResidual * std::max(1.0, x.lpNorm<Eigen::Infinity>()))) {
      throw NumericalFailure("ill-conditioned basis during refactorization (residual " +
                             std::to_string(residual) + ")");
    }
  }
  m_ = m;
  lu_ = std::move(lu);
  etas_.clear();
}

void BasisFactor::apply_etas(Eigen::VectorXd& v) const {
  for (const auto& eta : etas_) {
    const double t = v[eta->row];
    if (t == 0.0) continue;
    v.noalias() += t * eta->values;
    v[eta->row] = t * eta->values[eta->row];
  }
}

void BasisFactor::ftran_column(const LpModel& model, int j,
                               Eigen::VectorXd& out) const {
  const int n = model.num_structural();
  Eigen::VectorXd a = Eigen::VectorXd::Zero(m_);
  if (j < n) {
    auto rows = model.col_rows(j);
    auto vals = model.col_values(j);
    for (std::size_t p = 0; p < rows.size(); ++p) a[rows[p]] = vals[p];
  } else {
    a[j - n] = -1.0;
  }
  out = a;
  ftran(out);
}

void BasisFactor::ftran(Eigen::VectorXd& v) const {
  if (m_ == 0) return;
  Eigen::VectorXd tmp = lu_->solve(v);
  apply_etas(tmp);
  v = std::move(tmp);
}

void BasisFactor::btran(Eigen::VectorXd& v) const {
  if (m_ == 0) return;
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    const Eta& eta = **it;
    v[eta.row] = v.dot(eta.values);
  }
  Eigen::VectorXd tmp = lu_->transpose().solve(v);
  v = std::move(tmp);
}

void BasisFactor::update(int r, const Eigen::VectorXd& alpha) {
  auto eta = std::make_shared<Eta>();
  eta->row = r;
  const double pivot = alpha[r];
  eta->values = -alpha / pivot;
  eta->values[r] = 1.0 / pivot;
  etas_.push_back(std::move(eta));
}

}  // namespace sblab::lp
