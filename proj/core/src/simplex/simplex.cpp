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

#include "sblab/simplex/simplex.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "sblab/errors.hpp"
#include "simplex/basis_factor.hpp"

namespace sblab::lp {

struct WarmStart {
  BasisFactor factor;
  std::vector<double> x;  // structural + logical values for the basis
};

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

constexpr double kDegenerateStep = 1e-12;
// Dual infeasibility above this makes the dual simplex hand over to the
// primal simplex instead of relying on Harris-style tolerance absorption.
constexpr double kDualStartTolerance = 1e-6;

class Simplex {
 public:
  Simplex(const LpView& view, const SimplexOptions& options)
      : model_(view.model()),
        opt_(options),
        n_(model_.num_structural()),
        m_(model_.num_rows()),
        total_(n_ + m_),
        lo_(total_),
        hi_(total_),
        x_(total_, 0.0),
        d_(total_, 0.0),
        status_(total_, VarStatus::kAtLower),
        head_(m_),
        pos_(total_, -1),
        alpha_row_(total_, 0.0) {
    for (int j = 0; j < n_; ++j) {
      const Bounds b = view.bounds(j);
      lo_[j] = b.lower;
      hi_[j] = b.upper;
    }
    for (int i = 0; i < m_; ++i) {
      const Bounds b = model_.logical_bounds(i);
      lo_[n_ + i] = b.lower;
      hi_[n_ + i] = b.upper;
    }
    max_iterations_ = opt_.max_iterations > 0
                          ? opt_.max_iterations
                          : 200LL * (total_ + 10) + 20000;
    bland_threshold_ = 3 * total_;
  }

  void start_from_slack() {
    for (int i = 0; i < m_; ++i) {
      head_[i] = n_ + i;
      pos_[n_ + i] = i;
      status_[n_ + i] = VarStatus::kBasic;
    }
    for (int j = 0; j < n_; ++j) {
      pos_[j] = -1;
      const bool lo_finite = std::isfinite(lo_[j]);
      const bool hi_finite = std::isfinite(hi_[j]);
      if (lo_[j] == hi_[j]) {
        status_[j] = VarStatus::kFixed;
      } else if (lo_finite && hi_finite) {
        status_[j] = model_.cost(j) >= 0.0 ? VarStatus::kAtLower : VarStatus::kAtUpper;
      } else if (lo_finite) {
        status_[j] = VarStatus::kAtLower;
      } else if (hi_finite) {
        status_[j] = VarStatus::kAtUpper;
      } else {
        status_[j] = VarStatus::kFree;
      }
    }
    refactor_now();
  }

  void start_from(const BasisSnapshot& snap) {
    if (static_cast<int>(snap.head.size()) != m_ ||
        static_cast<int>(snap.status.size()) != total_) {
      throw ContractViolation("basis snapshot does not match the LP dimensions");
    }
    head_ = snap.head;
    status_ = snap.status;
    std::fill(pos_.begin(), pos_.end(), -1);
    for (int k = 0; k < m_; ++k) pos_[head_[k]] = k;
    for (int j = 0; j < total_; ++j) {
      if (status_[j] != VarStatus::kBasic) normalize_nonbasic(j);
    }
    if (snap.warm) {
      factor_ = snap.warm->factor;
      x_ = snap.warm->x;
      for (int j = 0; j < total_; ++j) {
        if (status_[j] == VarStatus::kBasic) continue;
        const double v = nonbasic_value(j);
        const double delta = v - x_[j];
        if (delta == 0.0) continue;
        factor_.ftran_column(model_, j, col_);
        for (int k = 0; k < m_; ++k) x_[head_[k]] -= col_[k] * delta;
        x_[j] = v;
      }
    } else {
      refactor_now();
    }
  }

  bool dual_feasible() {
    compute_reduced_costs();
    return dual_infeasibility() <= kDualStartTolerance;
  }

  LpOutcome primal(std::optional<std::int64_t> cap) {
    const std::int64_t start = iterations_;
    Eigen::VectorXd y(m_);
    for (;;) {
      if (factor_.num_updates() >= opt_.refactor_period) refactor_now();
      bool phase1 = false;
      for (int k = 0; k < m_; ++k) {
        if (infeasibility(head_[k]) > opt_.primal_tol) {
          phase1 = true;
          break;
        }
      }
      for (int k = 0; k < m_; ++k) {
        const int b = head_[k];
        if (phase1) {
          y[k] = x_[b] < lo_[b] - opt_.primal_tol   ? -1.0
                 : x_[b] > hi_[b] + opt_.primal_tol ? 1.0
                                                    : 0.0;
        } else {
          y[k] = model_.cost(b);
        }
      }
      if (m_ > 0) factor_.btran(y);

      int q = -1;
      int dir = 0;
      double best = 0.0;
      for (int j = 0; j < total_; ++j) {
        const VarStatus st = status_[j];
        if (st == VarStatus::kBasic) continue;
        const double dj = (phase1 ? 0.0 : model_.cost(j)) - dot_column(y, j);
        d_[j] = dj;
        if (st == VarStatus::kFixed) continue;
        int want = 0;
        if (st == VarStatus::kAtLower && dj < -opt_.dual_tol) {
          want = 1;
        } else if (st == VarStatus::kAtUpper && dj > opt_.dual_tol) {
          want = -1;
        } else if (st == VarStatus::kFree && std::abs(dj) > opt_.dual_tol) {
          want = dj < 0.0 ? 1 : -1;
        }
        if (want == 0) continue;
        if (bland_) {
          q = j;
          dir = want;
          break;
        }
        if (std::abs(dj) > best) {
          best = std::abs(dj);
          q = j;
          dir = want;
        }
      }

      if (q < 0) {
        if (factor_.num_updates() > 0) {
          refactor_now();
          continue;
        }
        return finish(phase1 ? LpStatus::kInfeasible : LpStatus::kOptimal, start);
      }
      if (cap && iterations_ - start >= *cap) return iteration_limit(start);
      guard_iterations();

      factor_.ftran_column(model_, q, col_);
      int leave = -1;
      double step = kInf;
      double target = 0.0;
      primal_ratio_test(phase1, dir, leave, step, target);

      const bool boxed = std::isfinite(lo_[q]) && std::isfinite(hi_[q]);
      const double range = boxed ? hi_[q] - lo_[q] : kInf;
      if (leave < 0 && !boxed) {
        if (phase1) throw NumericalFailure("phase 1 ratio test found no blocking variable");
        return finish(LpStatus::kUnbounded, start);
      }
      const bool flip = boxed && (leave < 0 || range <= step);
      if (flip) step = range;

      for (int k = 0; k < m_; ++k) x_[head_[k]] -= col_[k] * dir * step;
      if (flip) {
        status_[q] = dir > 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
        x_[q] = dir > 0 ? hi_[q] : lo_[q];
      } else {
        x_[q] += dir * step;
        pivot(leave, q, target);
      }
      track_degeneracy(step);
      ++iterations_;
    }
  }

  LpOutcome dual(std::optional<std::int64_t> cap) {
    const std::int64_t start = iterations_;
    compute_reduced_costs();
    if (dual_infeasibility() > kDualStartTolerance) return primal_remaining(cap, start);
    for (;;) {
      if (factor_.num_updates() >= opt_.refactor_period) {
        refactor_now();
        compute_reduced_costs();
      }
      int r = -1;
      double worst = 0.0;
      for (int k = 0; k < m_; ++k) {
        const double infeas = infeasibility(head_[k]);
        if (infeas <= opt_.primal_tol) continue;
        if (bland_) {
          if (r < 0 || head_[k] < head_[r]) r = k;
        } else if (infeas > worst) {
          worst = infeas;
          r = k;
        }
      }
      if (r < 0) {
        if (factor_.num_updates() > 0) {
          refactor_now();
          compute_reduced_costs();
          continue;
        }
        if (dual_infeasibility() > opt_.dual_tol) return primal_remaining(cap, start);
        return finish(LpStatus::kOptimal, start);
      }
      if (cap && iterations_ - start >= *cap) return iteration_limit(start);
      guard_iterations();

      const int leaving = head_[r];
      const double sign = x_[leaving] < lo_[leaving] ? 1.0 : -1.0;
      const double target = sign > 0 ? lo_[leaving] : hi_[leaving];
      compute_pivot_row(r);
      const int q = dual_ratio_test(sign);
      if (q < 0) {
        if (factor_.num_updates() > 0) {
          refactor_now();
          compute_reduced_costs();
          continue;
        }
        return finish(LpStatus::kInfeasible, start);
      }
      factor_.ftran_column(model_, q, col_);
      const double pivot_value = col_[r];
      if (std::abs(pivot_value - alpha_row_[q]) > 1e-6 * (1.0 + std::abs(pivot_value)) ||
          std::abs(pivot_value) < opt_.pivot_tol) {
        if (factor_.num_updates() > 0) {
          refactor_now();
          compute_reduced_costs();
          continue;
        }
        throw NumericalFailure("dual simplex pivot element is unstable");
      }

      double dq = d_[q];
      if (status_[q] == VarStatus::kAtLower && dq < 0.0) dq = 0.0;
      if (status_[q] == VarStatus::kAtUpper && dq > 0.0) dq = 0.0;
      const double theta_dual = dq / alpha_row_[q];
      for (int j = 0; j < total_; ++j) {
        if (status_[j] != VarStatus::kBasic) d_[j] -= theta_dual * alpha_row_[j];
      }
      d_[q] = 0.0;

      const double delta = (x_[leaving] - target) / pivot_value;
      for (int k = 0; k < m_; ++k) x_[head_[k]] -= col_[k] * delta;
      x_[q] += delta;
      pivot(r, q, target);
      d_[leaving] = -theta_dual;
      track_degeneracy(std::abs(theta_dual));
      ++iterations_;
    }
  }

  std::shared_ptr<const WarmStart> warm_state() const {
    auto warm = std::make_shared<WarmStart>();
    warm->factor = factor_;
    warm->x = x_;
    return warm;
  }

 private:
  double nonbasic_value(int j) const {
    switch (status_[j]) {
      case VarStatus::kAtLower:
      case VarStatus::kFixed:
        return lo_[j];
      case VarStatus::kAtUpper:
        return hi_[j];
      case VarStatus::kFree:
      case VarStatus::kBasic:
        return 0.0;
    }
    return 0.0;
  }

  void normalize_nonbasic(int j) {
    const bool lo_finite = std::isfinite(lo_[j]);
    const bool hi_finite = std::isfinite(hi_[j]);
    if (lo_finite && hi_finite && lo_[j] == hi_[j]) {
      status_[j] = VarStatus::kFixed;
      return;
    }
    VarStatus st = status_[j];
    if (st == VarStatus::kFixed) st = VarStatus::kAtLower;
    if (st == VarStatus::kAtLower && !lo_finite) st = VarStatus::kAtUpper;
    if (st == VarStatus::kAtUpper && !hi_finite) st = lo_finite ? VarStatus::kAtLower : VarStatus::kFree;
    if (st == VarStatus::kFree && lo_finite) st = VarStatus::kAtLower;
    if (st == VarStatus::kFree && hi_finite) st = VarStatus::kAtUpper;
    status_[j] = st;
  }

  double infeasibility(int j) const {
    if (x_[j] < lo_[j]) return lo_[j] - x_[j];
    if (x_[j] > hi_[j]) return x_[j] - hi_[j];
    return 0.0;
  }

  double dot_column(const Eigen::VectorXd& v, int j) const {
    if (j >= n_) return -v[j - n_];
    double s = 0.0;
    auto rows = model_.col_rows(j);
    auto vals = model_.col_values(j);
    for (std::size_t p = 0; p < rows.size(); ++p) s += v[rows[p]] * vals[p];
    return s;
  }

  void refactor_now() {
    factor_.refactor(model_, head_);
    for (int j = 0; j < total_; ++j) {
      if (status_[j] != VarStatus::kBasic) x_[j] = nonbasic_value(j);
    }
    if (m_ == 0) return;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m_);
    for (int j = 0; j < total_; ++j) {
      if (status_[j] == VarStatus::kBasic || x_[j] == 0.0) continue;
      if (j >= n_) {
        rhs[j - n_] += x_[j];
        continue;
      }
      auto rows = model_.col_rows(j);
      auto vals = model_.col_values(j);
      for (std::size_t p = 0; p < rows.size(); ++p) rhs[rows[p]] -= vals[p] * x_[j];
    }
    factor_.ftran(rhs);
    for (int k = 0; k < m_; ++k) x_[head_[k]] = rhs[k];
  }

  void compute_reduced_costs() {
    Eigen::VectorXd y(m_);
    for (int k = 0; k < m_; ++k) y[k] = model_.cost(head_[k]);
    if (m_ > 0) factor_.btran(y);
    for (int j = 0; j < total_; ++j) {
      d_[j] = status_[j] == VarStatus::kBasic ? 0.0 : model_.cost(j) - dot_column(y, j);
    }
  }

  double dual_infeasibility() const {
    double worst = 0.0;
    for (int j = 0; j < total_; ++j) {
      switch (status_[j]) {
        case VarStatus::kAtLower:
          worst = std::max(worst, -d_[j]);
          break;
        case VarStatus::kAtUpper:
          worst = std::max(worst, d_[j]);
          break;
        case VarStatus::kFree:
          worst = std::max(worst, std::abs(d_[j]));
          break;
        default:
          break;
      }
    }
    return worst;
  }

  void compute_pivot_row(int r) {
    Eigen::VectorXd rho = Eigen::VectorXd::Zero(m_);
    rho[r] = 1.0;
    factor_.btran(rho);
    for (int j = 0; j < total_; ++j) {
      alpha_row_[j] = status_[j] == VarStatus::kBasic ? 0.0 : dot_column(rho, j);
    }
  }

  // Two-pass (Harris) ratio test over the basic variables for entering
  // direction `dir`. Sets leave < 0 when nothing blocks.
  void primal_ratio_test(bool phase1, int dir, int& leave, double& step, double& target) {
    const double tol = opt_.primal_tol;
    double theta_max = kInf;
    for (int k = 0; k < m_; ++k) {
      const double a = col_[k];
      if (std::abs(a) < opt_.pivot_tol) continue;
      const double g = -a * dir;
      const int b = head_[k];
      const double xb = x_[b];
      double relaxed = kInf;
      if (phase1 && xb < lo_[b] - tol) {
        if (g > 0.0) relaxed = (lo_[b] - xb) / g;
      } else if (phase1 && xb > hi_[b] + tol) {
        if (g < 0.0) relaxed = (xb - hi_[b]) / -g;
      } else if (g < 0.0 && std::isfinite(lo_[b])) {
        relaxed = (xb - lo_[b] + tol) / -g;
      } else if (g > 0.0 && std::isfinite(hi_[b])) {
        relaxed = (hi_[b] + tol - xb) / g;
      }
      theta_max = std::min(theta_max, relaxed);
    }
    leave = -1;
    if (!std::isfinite(theta_max)) return;
    double best_pivot = 0.0;
    double best_step = kInf;
    for (int k = 0; k < m_; ++k) {
      const double a = col_[k];
      if (std::abs(a) < opt_.pivot_tol) continue;
      const double g = -a * dir;
      const int b = head_[k];
      const double xb = x_[b];
      double exact = kInf;
      double bound = 0.0;
      if (phase1 && xb < lo_[b] - tol) {
        if (g > 0.0) {
          exact = (lo_[b] - xb) / g;
          bound = lo_[b];
        }
      } else if (phase1 && xb > hi_[b] + tol) {
        if (g < 0.0) {
          exact = (xb - hi_[b]) / -g;
          bound = hi_[b];
        }
      } else if (g < 0.0 && std::isfinite(lo_[b])) {
        exact = (xb - lo_[b]) / -g;
        bound = lo_[b];
      } else if (g > 0.0 && std::isfinite(hi_[b])) {
        exact = (hi_[b] - xb) / g;
        bound = hi_[b];
      }
      if (!std::isfinite(exact)) continue;
      exact = std::max(exact, 0.0);
      if (bland_) {
        if (exact < best_step - 1e-12 ||
            (std::abs(exact - best_step) <= 1e-12 && leave >= 0 && b < head_[leave])) {
          best_step = exact;
          leave = k;
          target = bound;
        }
        continue;
      }
      if (exact > theta_max) continue;
      if (std::abs(a) > best_pivot) {
        best_pivot = std::abs(a);
        best_step = exact;
        leave = k;
        target = bound;
      }
    }
    step = leave >= 0 ? best_step : kInf;
  }

  int dual_ratio_test(double sign) {
    const double tol = opt_.dual_tol;
    double theta_max = kInf;
    auto eligible = [&](int j, double a) {
      switch (status_[j]) {
        case VarStatus::kAtLower:
          return sign * a < -opt_.pivot_tol;
        case VarStatus::kAtUpper:
          return sign * a > opt_.pivot_tol;
        case VarStatus::kFree:
          return std::abs(a) > opt_.pivot_tol;
        default:
          return false;
      }
    };
    auto corrected = [&](int j) {
      switch (status_[j]) {
        case VarStatus::kAtLower:
          return std::max(d_[j], 0.0);
        case VarStatus::kAtUpper:
          return std::max(-d_[j], 0.0);
        default:
          return std::abs(d_[j]);
      }
    };
    for (int j = 0; j < total_; ++j) {
      const double a = alpha_row_[j];
      if (!eligible(j, a)) continue;
      theta_max = std::min(theta_max, (corrected(j) + tol) / std::abs(a));
    }
    int q = -1;
    double best_pivot = 0.0;
    double best_ratio = kInf;
    for (int j = 0; j < total_; ++j) {
      const double a = alpha_row_[j];
      if (!eligible(j, a)) continue;
      const double ratio = corrected(j) / std::abs(a);
      if (bland_) {
        if (ratio < best_ratio - 1e-12) {
          best_ratio = ratio;
          q = j;
        }
        continue;
      }
      if (ratio > theta_max) continue;
      if (std::abs(a) > best_pivot) {
        best_pivot = std::abs(a);
        q = j;
      }
    }
    return q;
  }

  void pivot(int r, int q, double target) {
    const int leaving = head_[r];
    x_[leaving] = target;
    status_[leaving] = lo_[leaving] == hi_[leaving] ? VarStatus::kFixed
                       : target == lo_[leaving]     ? VarStatus::kAtLower
                                                    : VarStatus::kAtUpper;
    pos_[leaving] = -1;
    head_[r] = q;
    pos_[q] = r;
    status_[q] = VarStatus::kBasic;
    factor_.update(r, col_);
  }

  void track_degeneracy(double progress) {
    if (progress <= kDegenerateStep) {
      if (++degenerate_run_ > bland_threshold_) bland_ = true;
    } else {
      degenerate_run_ = 0;
      bland_ = false;
    }
  }

  void guard_iterations() {
    if (iterations_ >= max_iterations_) {
      throw NumericalFailure("simplex exceeded " + std::to_string(max_iterations_) +
                             " iterations without converging");
    }
  }

  LpOutcome primal_remaining(std::optional<std::int64_t> cap, std::int64_t start) {
    std::optional<std::int64_t> rest;
    if (cap) rest = std::max<std::int64_t>(0, *cap - (iterations_ - start));
    LpOutcome out = primal(rest);
    out.iterations = iterations_ - start;
    return out;
  }

  double objective() const {
    double z = 0.0;
    for (int j = 0; j < n_; ++j) z += model_.cost(j) * x_[j];
    return z;
  }

  BasisSnapshot snapshot() const {
    BasisSnapshot snap;
    snap.head = head_;
    snap.status = status_;
    snap.warm = warm_state();
    return snap;
  }

  LpOutcome finish(LpStatus status, std::int64_t start) {
    LpOutcome out;
    out.status = status;
    out.iterations = iterations_ - start;
    out.basis = snapshot();
    switch (status) {
      case LpStatus::kOptimal:
        out.objective = objective();
        out.dual_bound = out.objective;
        out.primal.assign(x_.begin(), x_.begin() + n_);
        break;
      case LpStatus::kInfeasible:
        out.objective = kInf;
        out.dual_bound = kInf;
        break;
      case LpStatus::kUnbounded:
        out.objective = -kInf;
        out.dual_bound = -kInf;
        break;
      case LpStatus::kIterationLimit:
        break;
    }
    return out;
  }

  // Lagrangian bound min_{l <= z <= u} (c - y^T [A | -I]) z for the current
  // duals y; valid for any y, tight when the basis is dual feasible.
  LpOutcome iteration_limit(std::int64_t start) {
    compute_reduced_costs();
    double bound = 0.0;
    for (int j = 0; j < total_; ++j) {
      const double dj = d_[j];
      if (dj == 0.0) continue;
      const double edge = dj > 0.0 ? lo_[j] : hi_[j];
      if (std::isfinite(edge)) {
        bound += dj * edge;
      } else if (std::abs(dj) <= opt_.dual_tol) {
        bound += dj * x_[j];
      } else {
        bound = -kInf;
        break;
      }
    }
    LpOutcome out;
    out.status = LpStatus::kIterationLimit;
    out.iterations = iterations_ - start;
    out.objective = bound;
    out.dual_bound = bound;
    out.basis = snapshot();
    return out;
  }

  const LpModel& model_;
  SimplexOptions opt_;
  int n_;
  int m_;
  int total_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<double> x_;
  std::vector<double> d_;
  std::vector<VarStatus> status_;
  std::vector<int> head_;
  std::vector<int> pos_;
  std::vector<double> alpha_row_;
  BasisFactor factor_;
  Eigen::VectorXd col_;
  std::int64_t iterations_ = 0;
  std::int64_t max_iterations_ = 0;
  int degenerate_run_ = 0;
  int bland_threshold_ = 0;
  bool bland_ = false;
};

LpOutcome trivially_infeasible_outcome() {
  LpOutcome out;
  out.status = LpStatus::kInfeasible;
  out.objective = kInf;
  out.dual_bound = kInf;
  return out;
}

}  // namespace

LpOutcome solve_root(const LpView& view, const SimplexOptions& options) {
  if (view.trivially_infeasible()) return trivially_infeasible_outcome();
  Simplex simplex(view, options);
  simplex.start_from_slack();
  if (simplex.dual_feasible()) return simplex.dual(std::nullopt);
  return simplex.primal(std::nullopt);
}

LpOutcome resolve_from_basis(const BasisSnapshot& basis, const LpView& view,
                             std::optional<std::int64_t> iter_cap,
                             const SimplexOptions& options) {
  if (view.trivially_infeasible()) return trivially_infeasible_outcome();
  if (basis.empty()) {
    if (iter_cap) throw ContractViolation("resolve_from_basis: empty basis with iteration cap");
    return solve_root(view, options);
  }
  Simplex simplex(view, options);
  simplex.start_from(basis);
  if (simplex.dual_feasible()) return simplex.dual(iter_cap);
  return simplex.primal(iter_cap);
}

LpOutcome resolve_bound_change(const LpOutcome& parent, const LpView& parent_view, int var,
                               Bounds new_bounds, std::optional<std::int64_t> iter_cap,
                               const SimplexOptions& options) {
  if (parent.status != LpStatus::kOptimal) {
    throw ContractViolation("resolve_bound_change: parent LP is not optimal");
  }
  if (var < 0 || var >= parent_view.model().num_structural()) {
    throw ContractViolation("resolve_bound_change: variable index out of range");
  }
  LpView child(parent_view);
  child.set_bounds(var, new_bounds);
  if (child.trivially_infeasible()) return trivially_infeasible_outcome();
  Simplex simplex(child, options);
  simplex.start_from(parent.basis);
  return simplex.dual(iter_cap);
}

void attach_factorization(LpOutcome& outcome, const LpView& view,
                          const SimplexOptions& options) {
  if (outcome.basis.has_factorization() || outcome.basis.empty()) return;
  Simplex simplex(view, options);
  simplex.start_from(outcome.basis);
  outcome.basis.warm = simplex.warm_state();
}

}  // namespace sblab::lp
