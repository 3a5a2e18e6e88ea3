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

#ifndef ERGSE_ERRORS_HPP_
#define ERGSE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ergse {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative method (series, bracketing solver) did not converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature exhausted its subdivision budget. Carries the best
// estimate and its error bound so callers can decide what to do with it.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what),
        estimate_(estimate),
        error_bound_(error_bound) {}

  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// Failure inside one task of a parallel Monte-Carlo run.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(std::size_t index, const std::string& what)
      : std::runtime_error("geometry " + std::to_string(index) + ": " + what),
        index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace ergse

#endif  // ERGSE_ERRORS_HPP_
