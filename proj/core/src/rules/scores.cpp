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

#include "sblab/rules/scores.hpp"

#include <algorithm>
#include <cmath>

#include "sblab/errors.hpp"

namespace sblab::rules {

namespace {

// pow with 0^0 = 1 and inf^0 = 1, which keeps zero exponents neutral.
double power(double base, double exponent) {
  if (exponent == 0.0) return 1.0;
  return std::pow(base, exponent);
}

}  // namespace

double product_score(double q0, double q1, double a_min, double a_max) {
  return asymmetric_score(q0, q1, 0.0, 0.0, a_min, a_max);
}

double asymmetric_score(double q0, double q1, double a0, double a1, double a_min,
                        double a_max) {
  if (a0 < 0.0 || a1 < 0.0 || a_min < 0.0 || a_max < 0.0) {
    throw ContractViolation("score exponents must be nonnegative");
  }
  if (q0 < 0.0 || q1 < 0.0) throw ContractViolation("score gains must be nonnegative");
  const double lo = std::min(q0, q1);
  const double hi = std::max(q0, q1);
  return power(q0, a0) * power(q1, a1) * power(lo, a_min) * power(hi, a_max);
}

}  // namespace sblab::rules
