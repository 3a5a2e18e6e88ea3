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


#include "ergse/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "ergse/errors.hpp"

namespace ergse {

namespace {

// QUADPACK qk15 abscissae and weights. xgk[1], xgk[3], ... are the 7-point
// Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

double checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw DomainError("integrate: integrand not finite at x = " +
                      std::to_string(x));
  }
  return y;
}

Segment kronrod15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, center);
  double result_k = fc * kWgk[7];
  double result_g = fc * kWg[3];
  double result_abs = std::abs(result_k);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = checked(f, center - dx);
    f2[j] = checked(f, center + dx);
    const double sum = f1[j] + f2[j];
    result_k += kWgk[j] * sum;
    result_abs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) result_g += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * result_k;
  double result_asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    result_asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  const double habs = std::abs(half);
  result_asc *= habs;
  result_abs *= habs;
  double err = std::abs((result_k - result_g) * half);
  if (result_asc != 0.0 && err != 0.0) {
    err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  if (result_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(err, 50.0 * kEps * result_abs);
  }
  return {a, b, result_k * half, err};
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureSpec& spec) {
  std::priority_queue<Segment> heap;
  Segment first = kronrod15(f, a, b);
  double total = first.value;
  double total_error = first.error;
  heap.push(first);
  int subdivisions = 0;
  auto tolerance = [&] {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
  };
  while (total_error > tolerance() && subdivisions < spec.max_subdivisions) {
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval at resolution
    heap.pop();
    Segment left = kronrod15(f, worst.a, mid);
    Segment right = kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }
  // Resum to shed the drift of the running updates.
  total = 0.0;
  total_error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_error += heap.top().error;
    heap.pop();
  }
  return {total, total_error, subdivisions, total_error <= tolerance()};
}

}  // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double lower,
                                    double upper, const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) ||
      spec.max_subdivisions < 1) {
    throw DomainError("integrate: invalid QuadratureSpec");
  }
  if (std::isnan(lower) || std::isnan(upper) || std::isinf(lower)) {
    throw DomainError("integrate: lower limit must be finite");
  }
  if (lower == upper) return {0.0, 0.0, 0, true};
  if (std::isinf(upper)) {
    if (upper < 0.0) throw DomainError("integrate: upper limit is -infinity");
    auto mapped = [&f, lower](double t) {
      const double s = 1.0 - t;
      // A node can round onto t = 1; a convergent integrand vanishes there.
      if (s <= 0.0) return 0.0;
      return f(lower + t / s) / (s * s);
    };
    return integrate_finite(mapped, 0.0, 1.0, spec);
  }
  if (upper < lower) {
    QuadratureResult r = integrate_finite(f, upper, lower, spec);
    r.value = -r.value;
    return r;
  }
  return integrate_finite(f, lower, upper, spec);
}

double integrate(const Integrand& f, double lower, double upper,
                 const QuadratureSpec& spec) {
  const QuadratureResult r = integrate_adaptive(f, lower, upper, spec);
  if (!r.converged) {
    throw ToleranceError("integrate: tolerance not met after " +
                             std::to_string(r.subdivisions) + " subdivisions",
                         r.value, r.error);
  }
  return r.value;
}

}  // namespace ergse
