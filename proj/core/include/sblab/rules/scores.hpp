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

#ifndef SBLAB_RULES_SCORES_HPP_
#define SBLAB_RULES_SCORES_HPP_

namespace sblab::rules {

// min(q0,q1)^a_min * max(q0,q1)^a_max. With a_min = a_max = 0.5 this is the
// square root of the classic product q0*q1 and ranks candidates identically.
double product_score(double q0, double q1, double a_min, double a_max);

// q0^a0 * q1^a1 * min^a_min * max^a_max.
double asymmetric_score(double q0, double q1, double a0, double a1, double a_min,
                        double a_max);

}  // namespace sblab::rules

#endif  // SBLAB_RULES_SCORES_HPP_
