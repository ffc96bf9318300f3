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

#ifndef SBLAB_GENERATORS_RNG_HPP_
#define SBLAB_GENERATORS_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>

namespace sblab::gen {

// std::mt19937_64 with hand-rolled distributions. The standard library
// distributions are implementation-defined, so instances would differ between
// standard libraries; these helpers are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi], both inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // Uniform in [0, 1) with 53 random bits.
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  bool bernoulli(double p) { return uniform01() < p; }
  // Index drawn with probability proportional to the nonnegative weights.
  std::size_t weighted_index(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sblab::gen

#endif  // SBLAB_GENERATORS_RNG_HPP_
