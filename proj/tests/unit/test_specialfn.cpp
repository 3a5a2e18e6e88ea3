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


#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>

#include "doctest.h"
#include "gen.hpp"

#include "ergse/errors.hpp"
#include "ergse/specialfn.hpp"

namespace {

using ergse::testing::for_all;
using ergse::testing::Gen;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Euler's integral for 2F1, valid for c > b > 0 and z < 1. The upper half
// is reflected so both endpoint singularities sit at 0, where tanh-sinh
// nodes are exact.
double euler_2f1(double a, double b, double c, double z) {
  auto lower = [=](double t) {
    return std::pow(t, b - 1.0) * std::pow(1.0 - t, c - b - 1.0) *
           std::pow(1.0 - z * t, -a);
  };
  auto upper = [=](double u) {
    return std::pow(1.0 - u, b - 1.0) * std::pow(u, c - b - 1.0) *
           std::pow(1.0 - z * (1.0 - u), -a);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  const double integral =
      ts.integrate(lower, 0.0, 0.5, 1e-14) + ts.integrate(upper, 0.0, 0.5, 1e-14);
  return std::tgamma(c) / (std::tgamma(b) * std::tgamma(c - b)) * integral;
}

}  // namespace

TEST_CASE("exp_integral_en: anchor values") {
  CHECK(ergse::exp_integral_en(3, 0.0) == doctest::Approx(0.5));
  CHECK(ergse::exp_integral_en(1, 1.0) == doctest::Approx(0.2193839).epsilon(1e-7));
  // Small-x expansion -gamma - ln x + x - x^2/4.
  CHECK(ergse::exp_integral_en(1, 1e-6) ==
        doctest::Approx(-ergse::kEulerGamma - std::log(1e-6) + 1e-6 - 0.25e-12).epsilon(1e-14));
  CHECK(std::abs(ergse::exp_integral_en(1, 1e-6) - 13.2386) < 5e-4);
  CHECK_THROWS_AS(ergse::exp_integral_en(1, 0.0), ergse::DomainError);
  CHECK_THROWS_AS(ergse::exp_integral_en(2, -1.0), ergse::DomainError);
  CHECK(ergse::exp_integral_en(1, 800.0) == 0.0);
}

TEST_CASE("exp_integral_en: matches boost expint over orders and arguments") {
  for_all(400, 11, [](Gen& g, int i) {
    const int n = g.integer(1, 9);
    const double x = g.log_uniform(1e-6, 60.0);
    const double want = boost::math::expint(n, x);
    INFO("case " << i << " n=" << n << " x=" << x);
    CHECK(rel_err(ergse::exp_integral_en(n, x), want) < 1e-12);
    CHECK(rel_err(ergse::exp_integral_en_scaled(n, x), std::exp(x) * want) <
          1e-12);
  });
}

TEST_CASE("exp_integral_en: recurrence n E_{n+1} = e^-x - x E_n") {
  for (int n = 1; n <= 8; ++n) {
    for (double x = 0.1; x <= 10.0001; x += 0.1) {
      const double lhs = n * ergse::exp_integral_en(n + 1, x);
      const double rhs = std::exp(-x) - x * ergse::exp_integral_en(n, x);
      INFO("n=" << n << " x=" << x);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }
}

TEST_CASE("exp_integral_en_scaled: finite where the unscaled value underflows") {
  const double v = ergse::exp_integral_en_scaled(1, 1e4);
  CHECK(v == doctest::Approx(1.0 / 1e4).epsilon(1e-3));
}

TEST_CASE("gamma_star_series: anchors") {
  CHECK(ergse::gamma_star_series(-0.5, 0.0) == doctest::Approx(-2.0));
  // Root of the s* condition at eta = 4 to three decimals.
  CHECK(std::abs(ergse::gamma_star_series(-0.5, -0.854)) < 5e-3);
  CHECK_THROWS_AS(ergse::gamma_star_series(-1.0, 0.3), ergse::DomainError);
}

TEST_CASE("gamma_star_series: matches the regularized integral for a in (-1, 0)") {
  // sum_k (-x)^k / (k! (a+k)) = 1/a + int_0^1 t^(a-1) (e^(-xt) - 1) dt.
  boost::math::quadrature::tanh_sinh<double> ts;
  for_all(60, 12, [&](Gen& g, int i) {
    const double a = -g.uniform(0.05, 0.95);
    const double x = -g.uniform(0.0, 5.0);
    // t^a * (e^(-xt) - 1)/t, written so tiny t stays finite.
    auto f = [=](double t) {
      const double ratio = x * t == 0.0 ? -x : std::expm1(-x * t) / t;
      return std::pow(t, a) * ratio;
    };
    const double want = 1.0 / a + ts.integrate(f, 0.0, 1.0, 1e-14);
    INFO("case " << i << " a=" << a << " x=" << x);
    CHECK(std::abs(ergse::gamma_star_series(a, x) - want) < 1e-9 * (1.0 + std::abs(want)));
  });
}

TEST_CASE("gamma_star_series: increasing in -s for negative a") {
  for_all(50, 13, [](Gen& g, int i) {
    const double a = -g.uniform(0.1, 0.9);
    double prev = ergse::gamma_star_series(a, 0.0);
    for (double s = -0.05; s >= -5.0; s -= 0.05) {
      const double v = ergse::gamma_star_series(a, s);
      INFO("case " << i << " a=" << a << " s=" << s);
      CHECK(v > prev);
      prev = v;
    }
  });
}

TEST_CASE("lower and upper incomplete gamma") {
  CHECK(ergse::lower_gamma(0.5, 1.0) ==
        doctest::Approx(std::sqrt(std::numbers::pi) * std::erf(1.0)).epsilon(1e-12));
  CHECK(ergse::lower_gamma(0.5, 1.0) == doctest::Approx(1.493648).epsilon(1e-6));
  for_all(300, 14, [](Gen& g, int i) {
    const double a = g.uniform(0.05, 6.0);
    const double x = g.log_uniform(1e-4, 50.0);
    INFO("case " << i << " a=" << a << " x=" << x);
    CHECK(rel_err(ergse::lower_gamma(a, x), boost::math::tgamma_lower(a, x)) < 1e-11);
    CHECK(rel_err(ergse::upper_gamma(a, x), boost::math::tgamma(a, x)) < 1e-10);
    CHECK(rel_err(ergse::lower_gamma_continued(a, x),
                  boost::math::tgamma_lower(a, x)) < 1e-11);
  });
  CHECK(ergse::lower_gamma(0.5, std::numeric_limits<double>::infinity()) ==
        doctest::Approx(std::tgamma(0.5)));
  CHECK(ergse::upper_gamma(0.5, std::numeric_limits<double>::infinity()) == 0.0);
  CHECK_THROWS_AS(ergse::lower_gamma(-0.5, 1.0), ergse::DomainError);
  CHECK_THROWS_AS(ergse::lower_gamma_continued(0.5, -1.0), ergse::DomainError);
}

TEST_CASE("gauss_2f1: anchors") {
  CHECK(ergse::gauss_2f1(0.3, 1.7, 2.2, 0.0) == 1.0);
  CHECK(ergse::gauss_2f1(1, 1, 2, 0.5) == doctest::Approx(-std::log(0.5) / 0.5).epsilon(1e-12));
  const double v = ergse::gauss_2f1(1.0, 1.5, 3.0, -2.44);
  CHECK(v > 0.0);
  CHECK(v == doctest::Approx(euler_2f1(1.0, 1.5, 3.0, -2.44)).epsilon(1e-10));
  CHECK_THROWS_AS(ergse::gauss_2f1(1, 1, 2, 1.0), ergse::DomainError);
  CHECK_THROWS_AS(ergse::gauss_2f1(1, 1, -2.0, 0.2), ergse::DomainError);
}

TEST_CASE("gauss_2f1: matches boost pFq over the argument ranges in use") {
  // z <= 0 with (1, d+1; 2d+2), and 0 <= z < 1 with (1, 1; 1-d).
  for_all(300, 15, [](Gen& g, int i) {
    const double d = g.uniform(0.2, 0.95);
    const double z = -g.log_uniform(1e-3, 1e4);
    // boost pFq stops at |z| = 1; beyond it the Euler integral takes over.
    const double want =
        z > -0.9 ? boost::math::hypergeometric_pFq({1.0, d + 1.0}, {2.0 * d + 2.0}, z)
                 : euler_2f1(1.0, d + 1.0, 2.0 * d + 2.0, z);
    INFO("case " << i << " d=" << d << " z=" << z);
    CHECK(rel_err(ergse::gauss_2f1(1.0, d + 1.0, 2.0 * d + 2.0, z), want) < 1e-9);
  });
  for_all(300, 16, [](Gen& g, int i) {
    const double d = g.uniform(0.2, 0.95);
    const double z = g.uniform(0.0, 0.999);
    const double want = boost::math::hypergeometric_pFq({1.0, 1.0}, {1.0 - d}, z);
    INFO("case " << i << " d=" << d << " z=" << z);
    CHECK(rel_err(ergse::gauss_2f1(1.0, 1.0, 1.0 - d, z), want) < 1e-9);
  });
}

TEST_CASE("gauss_2f1: Euler integral oracle for general parameters") {
  for_all(80, 17, [](Gen& g, int i) {
    const double a = g.uniform(-1.5, 2.5);
    const double b = g.uniform(0.3, 2.5);
    const double c = b + g.uniform(0.3, 2.5);
    const double z = g.uniform(-20.0, 0.95);
    INFO("case " << i << " a=" << a << " b=" << b << " c=" << c << " z=" << z);
    CHECK(rel_err(ergse::gauss_2f1(a, b, c, z), euler_2f1(a, b, c, z)) < 1e-8);
  });
}

TEST_CASE("gauss_2f1: Pfaff and direct series agree where both converge") {
  for_all(200, 18, [](Gen& g, int i) {
    const double a = g.uniform(0.1, 2.0);
    const double b = g.uniform(0.1, 2.0);
    const double c = g.uniform(0.5, 4.0);
    const double z = g.uniform(-0.9, -0.5);
    const double direct = ergse::gauss_2f1_series(a, b, c, z);
    const double w = z / (z - 1.0);
    const double pfaff =
        std::pow(1.0 - z, -a) * ergse::gauss_2f1_series(a, c - b, c, w);
    INFO("case " << i);
    CHECK(std::abs(direct - pfaff) < 1e-8 * std::max(1.0, std::abs(direct)));
    CHECK(std::abs(ergse::gauss_2f1(a, b, c, z) - direct) <
          1e-8 * std::max(1.0, std::abs(direct)));
  });
}

TEST_CASE("kummer_1f1") {
  CHECK(ergse::kummer_1f1(0.3, 1.2, 0.0) == 1.0);
  CHECK(ergse::kummer_1f1(0.5, 1.5, -1.0) ==
        doctest::Approx(std::sqrt(std::numbers::pi) * std::erf(1.0) / 2.0).epsilon(1e-12));
  CHECK(ergse::kummer_1f1(0.5, 1.5, -1.0) == doctest::Approx(0.7468241).epsilon(1e-7));
  // Term-by-term series at a small argument.
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < 60; ++k) {
    term *= (0.5 + k) / (1.5 + k) * -0.25 / (k + 1.0);
    sum += term;
  }
  CHECK(std::abs(ergse::kummer_1f1(0.5, 1.5, -0.25) - sum) < 1e-12);
  for_all(200, 19, [](Gen& g, int i) {
    const double a = g.uniform(0.05, 3.0);
    const double b = g.uniform(0.5, 4.0);
    const double z = g.uniform(-10.0, 10.0);
    INFO("case " << i << " a=" << a << " b=" << b << " z=" << z);
    CHECK(rel_err(ergse::kummer_1f1(a, b, z),
                  boost::math::hypergeometric_1F1(a, b, z)) < 1e-10);
  });
}

TEST_CASE("erf, sinc_norm, reciprocal_gamma") {
  CHECK(ergse::erf(0.0) == 0.0);
  CHECK(ergse::erf(1.0) == doctest::Approx(0.8427008).epsilon(1e-7));
  // Taylor series oracle for erf(1).
  double s = 0.0;
  double p = 1.0;
  for (int n = 0; n < 30; ++n) {
    if (n > 0) p *= -1.0 / n;
    s += p / (2 * n + 1);
  }
  CHECK(ergse::erf(1.0) == doctest::Approx(2.0 / std::sqrt(std::numbers::pi) * s).epsilon(1e-14));
  for_all(100, 20, [](Gen& g, int) {
    const double x = g.uniform(-4.0, 4.0);
    CHECK(rel_err(ergse::erf(x), boost::math::erf(x)) < 1e-12);
  });
  CHECK(ergse::sinc_norm(0.0) == 1.0);
  CHECK(ergse::sinc_norm(0.5) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-15));
  CHECK(ergse::reciprocal_gamma(-2.0) == 0.0);
  CHECK(ergse::reciprocal_gamma(0.0) == 0.0);
  CHECK(ergse::reciprocal_gamma(3.0) == doctest::Approx(0.5));
}
