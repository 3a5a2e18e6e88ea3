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

#include "ergse/specialfn.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ergse/errors.hpp"

namespace ergse {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 1000;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Series part of E_n for 0 < x <= 1 (without any exponential scaling).
double exp_integral_series(int n, double x) {
  const int nm1 = n - 1;
  double sum = nm1 != 0 ? 1.0 / nm1 : -std::log(x) - kEulerGamma;
  double fact = 1.0;
  for (int i = 1; i <= kMaxIterations; ++i) {
    fact *= -x / i;
    double del;
    if (i != nm1) {
      del = -fact / (i - nm1);
    } else {
      double psi = -kEulerGamma;
      for (int ii = 1; ii <= nm1; ++ii) psi += 1.0 / ii;
      del = fact * (-std::log(x) + psi);
    }
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps) return sum;
  }
  throw ConvergenceError("exp_integral_en: series did not converge");
}

// e^x E_n(x) for x > 1 via the modified Lentz continued fraction.
double exp_integral_cf_scaled(int n, double x) {
  const int nm1 = n - 1;
  double b = x + n;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double a = -static_cast<double>(i) * (nm1 + i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw ConvergenceError("exp_integral_en: continued fraction did not converge");
}

void check_exp_integral_args(int n, double x) {
  if (n < 0 || !(x >= 0.0) || (x == 0.0 && n <= 1)) {
    throw DomainError("exp_integral_en: invalid arguments n=" +
                      std::to_string(n) + ", x=" + std::to_string(x));
  }
}

// Sum of the 2F1 power series, |z| < 1.
double hyp2f1_power_series(double a, double b, double c, double z,
                           int max_terms) {
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < max_terms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= kEps * std::abs(sum) && k > 2) return sum;
  }
  throw ConvergenceError("gauss_2f1: series did not converge");
}

// 2F1 for 1/2 <= z < 1 via the connection formula around z = 1. Requires
// c - a - b to be safely away from an integer.
double hyp2f1_near_one(double a, double b, double c, double z) {
  const double s = c - a - b;
  const double w = 1.0 - z;
  const double gc = std::tgamma(c);
  const double t1 = gc * std::tgamma(s) * reciprocal_gamma(c - a) *
                    reciprocal_gamma(c - b) *
                    hyp2f1_power_series(a, b, 1.0 - s, w, 5000);
  const double t2 = std::pow(w, s) * gc * std::tgamma(-s) *
                    reciprocal_gamma(a) * reciprocal_gamma(b) *
                    hyp2f1_power_series(c - a, c - b, 1.0 + s, w, 5000);
  return t1 + t2;
}

// 2F1 on [0, 1).
double hyp2f1_unit_interval(double a, double b, double c, double z) {
  if (z < 0.5) return hyp2f1_power_series(a, b, c, z, 5000);
  const double s = c - a - b;
  if (std::abs(s - std::round(s)) < 1e-3) {
    // Logarithmic case of the connection formula: fall back to the direct
    // series, slow but convergent for z < 1.
    return hyp2f1_power_series(a, b, c, z, 200000);
  }
  return hyp2f1_near_one(a, b, c, z);
}

}  // namespace

double exp_integral_en(int n, double x) {
  check_exp_integral_args(n, x);
  if (n == 0) return std::exp(-x) / x;
  if (x == 0.0) return 1.0 / (n - 1);
  if (x > 1.0) return exp_integral_cf_scaled(n, x) * std::exp(-x);
  return exp_integral_series(n, x);
}

double exp_integral_en_scaled(int n, double x) {
  check_exp_integral_args(n, x);
  if (n == 0) return 1.0 / x;
  if (x == 0.0) return 1.0 / (n - 1);
  if (x > 1.0) return exp_integral_cf_scaled(n, x);
  return exp_integral_series(n, x) * std::exp(x);
}

double gamma_star_series(double a, double x) {
  if (is_nonpositive_integer(a)) {
    throw DomainError("gamma_star_series: a is a nonpositive integer");
  }
  double sum = 1.0 / a;
  double magnitude = std::abs(sum);
  double term = 1.0;  // (-x)^k / k!
  for (int k = 1; k <= 500; ++k) {
    term *= -x / k;
    const double contrib = term / (a + k);
    sum += contrib;
    magnitude += std::abs(contrib);
    if (k > std::abs(x) && std::abs(contrib) <= 1e-17 * magnitude) return sum;
  }
  throw ConvergenceError("gamma_star_series: no convergence within 500 terms");
}

double lower_gamma_continued(double a, double x) {
  if (x < 0.0) {
    throw DomainError(
        "lower_gamma_continued: negative x; use gamma_star_series");
  }
  if (x == 0.0) {
    if (a > 0.0) return 0.0;
    throw DomainError("lower_gamma_continued: x = 0 with a <= 0");
  }
  // The alternating series cancels badly for large x; the regular
  // algorithm covers a > 0.
  if (a > 0.0) return lower_gamma(a, x);
  return std::pow(x, a) * gamma_star_series(a, x);
}

double lower_gamma(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    throw DomainError("lower_gamma: requires a > 0 and x >= 0");
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return std::tgamma(a);
  if (x < a + 1.0) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int i = 0; i < kMaxIterations; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * kEps) {
        return sum * std::exp(-x + a * std::log(x));
      }
    }
    throw ConvergenceError("lower_gamma: series did not converge");
  }
  return std::tgamma(a) - upper_gamma(a, x);
}

double upper_gamma(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    throw DomainError("upper_gamma: requires a > 0 and x >= 0");
  }
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return std::tgamma(a) - lower_gamma(a, x);
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) {
      return std::exp(-x + a * std::log(x)) * h;
    }
  }
  throw ConvergenceError("upper_gamma: continued fraction did not converge");
}

double gauss_2f1_series(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("gauss_2f1: c is a nonpositive integer");
  }
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("gauss_2f1_series: requires |z| < 1");
  }
  return hyp2f1_power_series(a, b, c, z, 200000);
}

double gauss_2f1(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("gauss_2f1: c is a nonpositive integer");
  }
  if (!(z < 1.0)) throw DomainError("gauss_2f1: requires z < 1");
  if (z == 0.0) return 1.0;
  if (z >= -0.5) return hyp2f1_unit_interval(a, b, c, z);
  // Pfaff: 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1)), maps z < -1/2
  // into (1/3, 1).
  const double w = z / (z - 1.0);
  return std::pow(1.0 - z, -a) * hyp2f1_unit_interval(a, c - b, c, w);
}

double kummer_1f1(double a, double b, double z) {
  if (is_nonpositive_integer(b)) {
    throw DomainError("kummer_1f1: b is a nonpositive integer");
  }
  if (z == 0.0) return 1.0;
  if (z < 0.0) return std::exp(z) * kummer_1f1(b - a, b, -z);
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < 5000; ++k) {
    term *= (a + k) / (b + k) * z / (k + 1.0);
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= kEps * std::abs(sum) && k > z) return sum;
  }
  throw ConvergenceError("kummer_1f1: series did not converge");
}

double erf(double x) { return std::erf(x); }

double sinc_norm(double d) {
  if (d == 0.0) return 1.0;
  const double arg = std::numbers::pi * d;
  return std::sin(arg) / arg;
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

}  // namespace ergse
