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
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "gen.hpp"

#include "ergse/errors.hpp"
#include "ergse/quadrature.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ClosedForm {
  std::string name;
  std::function<double(double)> f;
  double lo;
  double hi;
  double value;
};

}  // namespace

TEST_CASE("integrate: simple anchors") {
  CHECK(ergse::integrate([](double x) { return std::exp(-x); }, 0.0, kInf) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ergse::integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-8));
  CHECK(ergse::integrate([](double t) { return 0.5 * std::pow(t, -1.5); }, 1.0, kInf) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("integrate: closed-form suite") {
  const double pi = std::numbers::pi;
  const std::vector<ClosedForm> suite = {
      {"x^2 on [0,3]", [](double x) { return x * x; }, 0.0, 3.0, 9.0},
      {"sin on [0,pi]", [](double x) { return std::sin(x); }, 0.0, pi, 2.0},
      {"1/(1+x^2) on [0,inf)", [](double x) { return 1.0 / (1.0 + x * x); }, 0.0, kInf, pi / 2},
      {"log on (0,1]", [](double x) { return std::log(x); }, 0.0, 1.0, -1.0},
      {"x e^-x on [0,inf)", [](double x) { return x * std::exp(-x); }, 0.0, kInf, 1.0},
      {"gaussian half line", [](double x) { return std::exp(-x * x); }, 0.0, kInf, std::sqrt(pi) / 2},
      {"1/x on [1,e]", [](double x) { return 1.0 / x; }, 1.0, std::exp(1.0), 1.0},
      {"cos^2 on [0,2pi]", [](double x) { return std::cos(x) * std::cos(x); }, 0.0, 2 * pi, pi},
      {"x^-0.9 on (0,1]", [](double x) { return std::pow(x, -0.9); }, 0.0, 1.0, 10.0},
      {"e^x on [-1,2]", [](double x) { return std::exp(x); }, -1.0, 2.0, std::exp(2.0) - std::exp(-1.0)},
  };
  for (const auto& c : suite) {
    INFO(c.name);
    const ergse::QuadratureResult r = ergse::integrate_adaptive(c.f, c.lo, c.hi);
    CHECK(r.converged);
    const double tol = std::max(1e-10, 1e-8 * std::abs(c.value));
    CHECK(std::abs(r.value - c.value) <= 10 * tol);
  }
}

TEST_CASE("integrate: Kronrod rule is exact for polynomials up to degree 22") {
  ergse::testing::for_all(100, 31, [](ergse::testing::Gen& g, int i) {
    const int degree = g.integer(0, 22);
    std::vector<double> coef(static_cast<std::size_t>(degree) + 1);
    for (double& c : coef) c = g.uniform(-1.0, 1.0);
    const double lo = g.uniform(-2.0, 0.0);
    const double hi = lo + g.uniform(0.1, 2.0);
    auto poly = [&](double x) {
      double v = 0.0;
      for (std::size_t k = coef.size(); k-- > 0;) v = v * x + coef[k];
      return v;
    };
    double exact = 0.0;
    for (std::size_t k = 0; k < coef.size(); ++k) {
      exact += coef[k] * (std::pow(hi, k + 1.0) - std::pow(lo, k + 1.0)) / (k + 1.0);
    }
    ergse::QuadratureSpec one;
    one.max_subdivisions = 1;
    const ergse::QuadratureResult r = ergse::integrate_adaptive(poly, lo, hi, one);
    INFO("case " << i << " degree " << degree);
    CHECK(std::abs(r.value - exact) < 1e-12 * (1.0 + std::abs(exact)));
  });
}

TEST_CASE("integrate: agrees with boost gauss_kronrod on smooth random integrands") {
  ergse::testing::for_all(50, 32, [](ergse::testing::Gen& g, int i) {
    const double a = g.uniform(0.1, 3.0);
    const double b = g.uniform(-2.0, 2.0);
    auto f = [=](double x) { return std::exp(-a * x) * std::cos(b * x) / (1.0 + x); };
    const double want =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, kInf, 15, 1e-13);
    INFO("case " << i);
    CHECK(ergse::integrate(f, 0.0, kInf) == doctest::Approx(want).epsilon(1e-8));
  });
}

TEST_CASE("integrate: reversed limits flip the sign") {
  auto f = [](double x) { return x * x; };
  CHECK(ergse::integrate(f, 2.0, 0.0) == doctest::Approx(-8.0 / 3.0));
  CHECK(ergse::integrate(f, 1.0, 1.0) == 0.0);
}

TEST_CASE("integrate: failures") {
  ergse::QuadratureSpec tight;
  tight.max_subdivisions = 3;
  tight.abs_tol = 1e-14;
  tight.rel_tol = 1e-14;
  auto wiggly = [](double x) { return std::sin(200.0 * x) / (x + 1e-3); };
  const ergse::QuadratureResult r = ergse::integrate_adaptive(wiggly, 0.0, 10.0, tight);
  CHECK_FALSE(r.converged);
  try {
    ergse::integrate(wiggly, 0.0, 10.0, tight);
    FAIL("expected ToleranceError");
  } catch (const ergse::ToleranceError& e) {
    CHECK(e.estimate() == doctest::Approx(r.value));
    CHECK(e.error_bound() > 0.0);
  }
  CHECK_THROWS_AS(ergse::integrate([](double) { return std::nan(""); }, 0.0, 1.0),
                  ergse::DomainError);
  CHECK_THROWS_AS(ergse::integrate([](double x) { return x; }, -kInf, 1.0),
                  ergse::DomainError);
  ergse::QuadratureSpec bad;
  bad.max_subdivisions = 0;
  CHECK_THROWS_AS(ergse::integrate([](double x) { return x; }, 0.0, 1.0, bad),
                  ergse::DomainError);
}
