// Copyright 2026 The ergse Authors.
//
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


// Small hand-rolled generators for property tests. Each property runs a fixed
// number of cases from a fixed seed, so failures reproduce exactly; the
// failing case index and the drawn values go into the doctest message.

#ifndef ERGSE_TESTS_GEN_HPP_
#define ERGSE_TESTS_GEN_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace ergse::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  // Uniform in log space, lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  // Path-loss exponents over the range the library is used in.
  double eta() { return uniform(2.2, 6.0); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Runs `body(gen, case_index)` for `cases` cases.
template <typename Body>
void for_all(int cases, std::uint64_t seed, Body&& body) {
  Gen gen(seed);
  for (int i = 0; i < cases; ++i) body(gen, i);
}

}  // namespace ergse::testing

#endif  // ERGSE_TESTS_GEN_HPP_
