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

#ifndef SBLAB_SIMPLEX_BASIS_FACTOR_HPP_
#define SBLAB_SIMPLEX_BASIS_FACTOR_HPP_

#include <Eigen/Dense>
#include <Eigen/SparseLU>
#include <memory>
#include <span>
#include <vector>

#include "sblab/simplex/lp_model.hpp"

namespace sblab::lp {

// Sparse LU of the basis matrix followed by a product-form eta file. Copies
// share the LU and the etas, so strong-branching children start from a
// parent's factorization without refactoring.
class BasisFactor {
 public:
  // Factors B from the basis head. Throws NumericalFailure when the
  // basis is numerically singular.
  void refactor(const LpModel& model, std::span<const int> head);

  // out = B^{-1} a_j for structural or logical column j.
  void ftran_column(const LpModel& model, int j, Eigen::VectorXd& out) const;
  // v <- B^{-1} v.
  void ftran(Eigen::VectorXd& v) const;
  // v <- (v^T B^{-1})^T.
  void btran(Eigen::VectorXd& v) const;

  // Records the pivot on row r whose entering column is alpha = B^{-1} a_q.
  void update(int r, const Eigen::VectorXd& alpha);

  int num_updates() const { return static_cast<int>(etas_.size()); }
  bool empty() const { return lu_ == nullptr; }

 private:
  struct Eta {
    int row;
    Eigen::VectorXd values;
  };

  using Lu = Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>>;

  void apply_etas(Eigen::VectorXd& v) const;

  int m_ = 0;
  // transpose() on SparseLU is non-const; solves through it only read.
  std::shared_ptr<Lu> lu_;
  std::vector<std::shared_ptr<const Eta>> etas_;
};

}  // namespace sblab::lp

#endif  // SBLAB_SIMPLEX_BASIS_FACTOR_HPP_
