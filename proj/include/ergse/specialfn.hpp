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

// Special functions used by the SIR and spectral-efficiency formulas.
//
// All functions are pure. Accuracy targets (relative error):
//   exp_integral_en     1e-10 on x in [1e-8, 700]
//   gauss_2f1           1e-9
//   kummer_1f1          1e-10 for |z| <= 10
//   erf                 1e-12

#ifndef ERGSE_SPECIALFN_HPP_
#define ERGSE_SPECIALFN_HPP_

#include <numbers>

namespace ergse {

inline constexpr double kLog2E = std::numbers::log2e;
inline constexpr double kEulerGamma = std::numbers::egamma;

/// Generalized exponential integral E_n(x) = int_1^inf t^-n e^-xt dt.
/// Throws DomainError for x < 0, n < 0, or (n <= 1, x == 0).
/// Returns 0 once e^-x underflows (x > ~700).
double exp_integral_en(int n, double x);

/// e^x E_n(x), finite for all x > 0 (no overflow for large x).
double exp_integral_en_scaled(int n, double x);

/// sum_{k>=0} (-x)^k / (k! (a+k)).
///
/// Equals x^-a * gamma(a, x) for x > 0 and stays real for x < 0, which is
/// the only combination the s* root condition needs. Throws
/// ConvergenceError if 500 terms do not reach tolerance.
double gamma_star_series(double a, double x);

/// Lower incomplete gamma continued to non-integer a (including a < 0)
/// through the everywhere-convergent series. Requires x >= 0.
double lower_gamma_continued(double a, double x);

/// Lower incomplete gamma gamma(a, x) = int_0^x t^(a-1) e^-t dt, a > 0, x >= 0.
double lower_gamma(double a, double x);

/// Upper incomplete gamma Gamma(a, x), a > 0, x >= 0.
double upper_gamma(double a, double x);

/// Gauss hypergeometric 2F1(a, b; c; z) for z < 1.
///
/// |z| < 1/2 sums the series directly; z < -1/2 goes through Pfaff's
/// transformation; arguments in [1/2, 1) use the 1 - z connection formula
/// (or a long direct series when c - a - b is an integer).
double gauss_2f1(double a, double b, double c, double z);

/// Plain power series of 2F1, valid for |z| < 1. Exposed for cross-checks.
double gauss_2f1_series(double a, double b, double c, double z);

/// Confluent hypergeometric 1F1(a; b; z). Negative z goes through Kummer's
/// transformation so the summed series has no cancellation.
double kummer_1f1(double a, double b, double z);

double erf(double x);

/// sin(pi d) / (pi d), with sinc_norm(0) = 1.
double sinc_norm(double d);

/// 1 / Gamma(x); zero at the poles.
double reciprocal_gamma(double x);

}  // namespace ergse

#endif  // ERGSE_SPECIALFN_HPP_
