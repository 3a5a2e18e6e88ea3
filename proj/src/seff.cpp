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


#include "ergse/seff.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ergse/errors.hpp"
#include "ergse/specialfn.hpp"

namespace ergse {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_factorial(int k) { return std::lgamma(k + 1.0); }

double log_binomial(int n, int k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

// Collapses the triple sum into weights w_q so that
// C(rho) = log2(e) sum_q w_q e^x E_{q+1}(x), x = N_t / rho.
std::vector<double> mimo_weights(const MimoConfig& cfg) {
  const int m = cfg.m();
  const int n = cfg.n();
  std::vector<double> w(static_cast<std::size_t>(n + m), 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      for (int l = 0; l <= 2 * j; ++l) {
        const double log_mag =
            log_binomial(2 * i - 2 * j, i - j) +
            log_binomial(2 * j + 2 * n - 2 * m, 2 * j - l) +
            log_factorial(2 * j) + log_factorial(n - m + l) -
            (2 * i - l) * std::numbers::ln2 - log_factorial(j) -
            log_factorial(l) - log_factorial(n - m + j);
        const double coef = (l % 2 == 0 ? 1.0 : -1.0) * std::exp(log_mag);
        for (int q = 0; q <= n - m + l; ++q) w[static_cast<std::size_t>(q)] += coef;
      }
    }
  }
  return w;
}

void require_positive(double rho, const char* who) {
  if (!(rho > 0.0)) throw DomainError(std::string(who) + ": requires rho > 0");
}

// x^-d gamma(d, x), finite at x = 0 where it equals 1/d.
double scaled_lower_gamma(double d, double x) {
  if (x < 1.0) return gamma_star_series(d, x);
  return lower_gamma(d, x) * std::pow(x, -d);
}

}  // namespace

MimoConfig::MimoConfig(int n_t, int n_r) : n_t_(n_t), n_r_(n_r) {
  if (n_t < 1 || n_r < 1 || n_t > 8 || n_r > 8) {
    throw DomainError("MimoConfig: antenna counts must be in [1, 8]");
  }
}

double c_siso(double rho) {
  require_positive(rho, "c_siso");
  if (rho < 1e-3) {
    return rho * (1.0 - rho + 2.0 * rho * rho - 6.0 * rho * rho * rho) *
           kLog2E;
  }
  return exp_integral_en_scaled(1, 1.0 / rho) * kLog2E;
}

double c_siso_approx(double rho) {
  if (!(rho >= 0.0)) throw DomainError("c_siso_approx: requires rho >= 0");
  return 1.4 * std::log1p(0.82 * rho);
}

double rho_from_c(double c) {
  if (!(c >= 0.0)) throw DomainError("rho_from_c: requires c >= 0");
  return std::expm1(c / 1.4) / 0.82;
}

double c_mimo(const MimoConfig& cfg, double rho) {
  require_positive(rho, "c_mimo");
  const double x = cfg.n_t() / rho;
  const std::vector<double> w = mimo_weights(cfg);
  double sum = 0.0;
  for (std::size_t q = 0; q < w.size(); ++q) {
    if (w[q] == 0.0) continue;
    sum += w[q] * exp_integral_en_scaled(static_cast<int>(q) + 1, x);
  }
  return sum * kLog2E;
}

double c_mimo_2x2(double rho) {
  require_positive(rho, "c_mimo_2x2");
  const double x = 2.0 / rho;
  return 2.0 * (exp_integral_en_scaled(1, x) + exp_integral_en_scaled(3, x)) *
         kLog2E;
}

double c_mimo_2x2_approx(double rho) {
  if (!(rho >= 0.0)) throw DomainError("c_mimo_2x2_approx: requires rho >= 0");
  if (rho == 0.0) return 0.0;
  return 2.8 * std::log1p(0.41 * rho) + std::exp(-1.0 / rho) * kLog2E;
}

SeCurve SeCurve::siso() {
  return SeCurve(CurveKind::SisoExact, c_siso, "siso", 1);
}

SeCurve SeCurve::siso_approx() {
  return SeCurve(CurveKind::SisoApprox, c_siso_approx, "siso-approx", 1);
}

SeCurve SeCurve::mimo(const MimoConfig& cfg) {
  if (cfg.n_t() == 1 && cfg.n_r() == 1) return siso();
  const std::vector<double> w = mimo_weights(cfg);
  const int n_t = cfg.n_t();
  auto fn = [w, n_t](double rho) {
    require_positive(rho, "c_mimo");
    const double x = n_t / rho;
    double sum = 0.0;
    for (std::size_t q = 0; q < w.size(); ++q) {
      if (w[q] != 0.0) {
        sum += w[q] * exp_integral_en_scaled(static_cast<int>(q) + 1, x);
      }
    }
    return sum * kLog2E;
  };
  return SeCurve(CurveKind::MimoExact, fn,
                 "mimo-" + std::to_string(cfg.n_r()) + "x" +
                     std::to_string(cfg.n_t()),
                 cfg.n_r());
}

SeCurve SeCurve::mimo_2x2_approx() {
  return SeCurve(CurveKind::Mimo2x2Approx, c_mimo_2x2_approx,
                 "mimo-2x2-approx", 2);
}

SeCurve SeCurve::custom(std::function<double(double)> fn, std::string label,
                        int receive_antennas) {
  if (receive_antennas < 1) {
    throw DomainError("SeCurve::custom: receive_antennas must be >= 1");
  }
  return SeCurve(CurveKind::Custom, std::move(fn), std::move(label),
                 receive_antennas);
}

double SeCurve::inverse(double c) const {
  if (std::isnan(c)) throw DomainError("SeCurve::inverse: NaN");
  if (c <= 0.0) return 0.0;
  if (kind_ == CurveKind::SisoApprox) return rho_from_c(c);
  constexpr double kLo = 1e-9;
  constexpr double kHi = 1e9;
  const double c_lo = fn_(kLo);
  if (c <= c_lo) return kLo * c / c_lo;  // linear regime
  if (c >= fn_(kHi)) return kInf;
  double lo = std::log(kLo);
  double hi = std::log(kHi);
  for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (fn_(std::exp(mid)) < c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

double se_cdf(const PathModel& model, const SectorModel& sect,
              const SeCurve& curve, double gamma) {
  if (std::isnan(gamma)) throw DomainError("se_cdf: gamma is NaN");
  if (gamma <= 0.0) return 0.0;
  const double cap = sect.cap();
  if (std::isfinite(cap) && gamma >= curve(cap)) return 1.0;
  return sector_sir_cdf(model, sect, curve.inverse(gamma));
}

TailValue coverage_tail(const PathModel& model, int n_r, double gamma) {
  if (n_r < 1 || !(gamma > 0.0)) {
    throw DomainError("coverage_tail: requires n_r >= 1 and gamma > 0");
  }
  TailValue out;
  out.probability = std::exp(1.15 * model.s_star() * n_r / gamma);
  out.outside_validity = out.probability > model.a_delta();
  return out;
}

double coverage_quantile(const PathModel& model, int n_r, double xi) {
  if (n_r < 1) throw DomainError("coverage_quantile: requires n_r >= 1");
  if (!(xi > 0.0) || xi > model.a_delta()) {
    throw DomainError("coverage_quantile: requires 0 < xi <= a_delta");
  }
  return 1.15 * model.s_star() * n_r / std::log(xi);
}

double coverage_quantile_numeric(const PathModel& model,
                                 const SectorModel& sect, const SeCurve& curve,
                                 double xi) {
  return curve(sir_quantile(model, sect, xi));
}

double inst_sir_cdf_eta4(double theta) {
  if (std::isnan(theta)) throw DomainError("inst_sir_cdf_eta4: NaN");
  if (theta <= 0.0) return 0.0;
  if (std::isinf(theta)) return 1.0;
  const double t = std::sqrt(theta);
  return 1.0 - 1.0 / (1.0 + t * std::atan(t));
}

double inst_sir_coverage_se_eta4(double xi) {
  if (!(xi > 0.0 && xi < 1.0)) {
    throw DomainError("inst_sir_coverage_se_eta4: requires 0 < xi < 1");
  }
  // Solve t atan(t) = 1/(1-xi) - 1 for t = sqrt(theta).
  const double k = 1.0 / (1.0 - xi) - 1.0;
  double lo = 0.0;
  double hi = 4.0 * k / std::numbers::pi + 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::atan(mid) < k) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t = 0.5 * (lo + hi);
  return std::log2(1.0 + t * t);
}

double expected_over_sir(const PathModel& model, const SectorModel& sect,
                         const std::function<double(double)>& g,
                         const QuadratureSpec& spec) {
  auto gs = [&](double rho) { return g(sect.to_sectorized(rho)); };
  const double s = model.s_star();
  const double d = model.delta();
  const double bp = model.lower_breakpoint();

  // Lower branch, u = 1/theta: dF = -s e^{s u} du on u > 1/bp.
  const double lower = integrate(
      [&](double u) {
        const double w = std::exp(s * u);
        if (w == 0.0) return 0.0;  // before g: avoids 0 * -inf
        return -s * w * gs(1.0 / u);
      },
      1.0 / bp, kInf, spec);

  double middle = 0.0;
  if (model.mode() == BranchMode::FourBranch) {
    middle = integrate(
        [&](double theta) { return gs(theta) * sir_pdf(model, theta).density; },
        0.5, 1.0, spec);
  }

  // Pareto tail, u = 1/theta: dF = d sinc(d) u^{d-1} du on (0, 1].
  const double tail = integrate(
      [&](double u) {
        return d * model.sinc() * std::pow(u, d - 1.0) * gs(1.0 / u);
      },
      0.0, 1.0, spec);

  return lower + middle + tail;
}

LognormalFit lognormal_fit(const PathModel& model, const SectorModel& sect,
                           const SeCurve& curve, BranchMode averaging_mode,
                           const QuadratureSpec& spec) {
  const PathModel m = model.with_mode(averaging_mode);
  LognormalFit fit;
  fit.mu = expected_over_sir(
      m, sect, [&](double rho) { return std::log(curve(rho)); }, spec);
  fit.sigma2 = expected_over_sir(
      m, sect,
      [&](double rho) {
        const double e = std::log(curve(rho)) - fit.mu;
        return e * e;
      },
      spec);
  return fit;
}

double mean_se(const PathModel& model, const SectorModel& sect,
               const SeCurve& curve, BranchMode averaging_mode,
               const QuadratureSpec& spec) {
  return expected_over_sir(model.with_mode(averaging_mode), sect,
                           [&](double rho) { return curve(rho); }, spec);
}

double mean_se_2x2_closed_eta4() {
  const double r = std::sqrt(0.41);
  const double pi = std::numbers::pi;
  return 0.26 + kLog2E / std::sqrt(pi) * std::erf(1.0) +
         5.6 / pi * (r * (pi - 2.0 * std::atan(r)) + std::log(1.41));
}

double mean_se_general(const MimoConfig& cfg, const PathModel& model,
                       const QuadratureSpec& spec) {
  const double s = model.s_star();
  const double d = model.delta();
  const double sinc = model.sinc();
  const double big_d = s / std::log(1.0 - sinc);
  const double n_t = cfg.n_t();
  const std::vector<double> w = mimo_weights(cfg);
  double total = 0.0;
  for (std::size_t q = 0; q < w.size(); ++q) {
    if (w[q] == 0.0) continue;
    const double power = static_cast<double>(q) + 1.0;
    const double inner = integrate(
        [&](double g) {
          const double x = g * n_t;
          const double lower = s / (s - x) * std::exp((s - x) / big_d);
          const double tail = d * sinc * scaled_lower_gamma(d, x);
          return std::pow(1.0 + g, -power) * (lower + tail);
        },
        0.0, kInf, spec);
    total += w[q] * inner;
  }
  return total * kLog2E;
}

double mean_se_cub(const PathModel& model, const QuadratureSpec& spec) {
  const double d = model.delta();
  return integrate(
      [d](double g) {
        return kLog2E / gauss_2f1(1.0, 1.0, 1.0 - d, g / (1.0 + g));
      },
      0.0, kInf, spec);
}

}  // namespace ergse
