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

// Global adaptive Gauss-Kronrod (7/15 point) quadrature.
//
// Interval endpoints are never evaluated, so integrable endpoint
// singularities are fine. An infinite upper limit is mapped onto [0, 1)
// with x = a + t / (1 - t), dx = dt / (1 - t)^2. A jump inside an interval
// can fall between nodes and go unnoticed by the error estimate, so callers
// split at known discontinuities.

#ifndef ERGSE_QUADRATURE_HPP_
#define ERGSE_QUADRATURE_HPP_

#include <functional>

namespace ergse {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Never throws on tolerance; inspect `converged`. Throws DomainError for a
/// malformed spec or interval.
QuadratureResult integrate_adaptive(const Integrand& f, double lower,
                                    double upper,
                                    const QuadratureSpec& spec = {});

/// Same, but throws ToleranceError (with the best estimate) when the spec is
/// not met. `upper` may be +infinity.
double integrate(const Integrand& f, double lower, double upper,
                 const QuadratureSpec& spec = {});

}  // namespace ergse

#endif  // ERGSE_QUADRATURE_HPP_
