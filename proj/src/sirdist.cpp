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


#include "ergse/sirdist.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "ergse/errors.hpp"
#include "ergse/specialfn.hpp"

namespace ergse {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double b_delta_prefactor(double d) {
  const double s = sinc_norm(d);
  const double g = std::tgamma(d + 1.0);
  return d * s * s * g * g / std::tgamma(2.0 * d + 2.0);
}

double b_delta_raw(double d, double x) {
  if (!(x > 0.0)) throw DomainError("b_delta: requires x > 0");
  if (std::isinf(x)) return 0.0;
  const double k = b_delta_prefactor(d);
  if (x < 1.0) {
    // Pfaff form, keeps x^(-1-2d) from overflowing as x -> 0.
    return k * std::pow(x, -2.0 * d) / (1.0 + x) *
           gauss_2f1(1.0, d + 1.0, 2.0 * d + 2.0, 1.0 / (1.0 + x));
  }
  return k * std::pow(x, -1.0 - 2.0 * d) *
         gauss_2f1(1.0, d + 1.0, 2.0 * d + 2.0, -1.0 / x);
}

double b_delta_derivative_raw(double d, double x) {
  if (!(x > 0.0)) throw DomainError("b_delta_derivative: requires x > 0");
  if (std::isinf(x)) return 0.0;
  const double k = b_delta_prefactor(d);
  const double z = -1.0 / x;
  const double f = gauss_2f1(1.0, d + 1.0, 2.0 * d + 2.0, z);
  // d/dz 2F1(1, d+1; 2d+2; z) = 2F1(2, d+2; 2d+3; z) / 2, dz/dx = 1/x^2.
  const double fp = 0.5 * gauss_2f1(2.0, d + 2.0, 2.0 * d + 3.0, z);
  return k * (-(1.0 + 2.0 * d) * std::pow(x, -2.0 - 2.0 * d) * f +
              std::pow(x, -3.0 - 2.0 * d) * fp);
}

double tail_cdf(const PathModel& m, double theta) {
  return 1.0 - std::pow(theta, -m.delta()) * m.sinc();
}

// FourBranch piece on [1/2, 1).
double middle_cdf(const PathModel& m, double theta) {
  return tail_cdf(m, theta) + b_delta(m, theta / (1.0 - theta));
}

double middle_pdf(const PathModel& m, double theta) {
  const double d = m.delta();
  const double one_minus = 1.0 - theta;
  return d * m.sinc() * std::pow(theta, -d - 1.0) +
         b_delta_derivative(m, theta / one_minus) / (one_minus * one_minus);
}

// Smallest theta with F(theta) >= p for the unsectorized law.
double unsectorized_quantile(const PathModel& m, double p) {
  const double a = m.a_delta();
  if (p <= a) return m.s_star() / std::log(p);
  const double top = 1.0 - m.sinc();
  if (p > top) return std::pow(m.sinc() / (1.0 - p), 1.0 / m.delta());
  if (m.mode() == BranchMode::ThreeBranch) return 1.0;
  // Middle FourBranch piece rises from a at 1/2 to top at 1.
  double lo = 0.5;
  double hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (middle_cdf(m, mid) >= p) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

double solve_s_star(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("solve_s_star: requires 0 < delta < 1");
  }
  auto f = [delta](double s) { return gamma_star_series(-delta, s); };
  const double lo = -5.0;
  const double hi = -1e-6;
  const double flo = f(lo);
  const double fhi = f(hi);
  if (!(flo > 0.0 && fhi < 0.0)) {
    throw ConvergenceError("solve_s_star: root not bracketed in [-5, -1e-6]");
  }
  std::uintmax_t iterations = 200;
  auto tol = [](double a, double b) { return std::abs(a - b) <= 1e-15; };
  const auto bracket =
      boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iterations);
  const double root = 0.5 * (bracket.first + bracket.second);
  if (std::abs(f(root)) > 1e-10) {
    throw ConvergenceError("solve_s_star: residual above 1e-10");
  }
  return root;
}

PathModel::PathModel(double eta, BranchMode mode) : eta_(eta), mode_(mode) {
  if (!(eta > 2.0) || std::isinf(eta)) {
    throw DomainError("PathModel: requires 2 < eta < inf");
  }
  delta_ = 2.0 / eta;
  s_star_ = solve_s_star(delta_);
  sinc_ = sinc_norm(delta_);
  a3_ = 1.0 - sinc_;
  a4_ = 1.0 - std::pow(2.0, delta_) * sinc_ + b_delta_raw(delta_, 1.0);
  if (!(a4_ > 0.0 && a4_ < 1.0)) {
    throw DomainError("PathModel: constant level outside (0, 1)");
  }
  // The lower tail and the constant segment must meet exactly.
  const double join = std::exp(s_star_ / lower_breakpoint());
  if (std::abs(join - a_delta()) > 1e-12) {
    throw ConvergenceError("PathModel: lower join mismatch");
  }
}

double PathModel::a_delta() const {
  return mode_ == BranchMode::FourBranch ? a4_ : a3_;
}

double PathModel::lower_breakpoint() const {
  return s_star_ / std::log(a_delta());
}

PathModel PathModel::with_mode(BranchMode mode) const {
  PathModel copy = *this;
  copy.mode_ = mode;
  return copy;
}

double b_delta(const PathModel& model, double x) {
  return b_delta_raw(model.delta(), x);
}

double b_delta_derivative(const PathModel& model, double x) {
  return b_delta_derivative_raw(model.delta(), x);
}

double sir_cdf(const PathModel& model, double theta) {
  if (std::isnan(theta)) throw DomainError("sir_cdf: theta is NaN");
  if (theta <= 0.0) return 0.0;
  if (theta >= 1.0) return tail_cdf(model, theta);
  if (theta < model.lower_breakpoint()) {
    return std::exp(model.s_star() / theta);
  }
  if (model.mode() == BranchMode::ThreeBranch || theta < 0.5) {
    return model.a_delta();
  }
  return middle_cdf(model, theta);
}

PdfValue sir_pdf(const PathModel& model, double theta) {
  if (!(theta > 0.0)) throw DomainError("sir_pdf: requires theta > 0");
  const double bp = model.lower_breakpoint();
  const bool four = model.mode() == BranchMode::FourBranch;
  PdfValue out;
  out.at_breakpoint = theta == bp || theta == 1.0 || (four && theta == 0.5);
  if (theta >= 1.0) {
    out.density = model.delta() * model.sinc() *
                  std::pow(theta, -model.delta() - 1.0);
  } else if (theta < bp) {
    const double s = model.s_star();
    out.density = -std::exp(s / theta) * s / (theta * theta);
  } else if (!four || theta < 0.5) {
    out.density = 0.0;
  } else {
    out.density = middle_pdf(model, theta);
  }
  return out;
}

double shifted_sir_cdf(const PathModel& model, double theta, double shift) {
  if (!(shift > 0.0)) throw DomainError("shifted_sir_cdf: requires shift > 0");
  return sir_cdf(model, theta / shift);
}

SectorModel::SectorModel(int sectors, double front_to_back_linear)
    : sectors_(sectors), q_(front_to_back_linear) {
  if (sectors < 1) throw DomainError("SectorModel: requires S >= 1");
  if (!(front_to_back_linear >= 1.0)) {
    throw DomainError("SectorModel: requires Q >= 1");
  }
  const double s = sectors;
  ratio_ = (s - 1.0) / q_;  // zero for Q = inf
  gain_in_ = s / (1.0 + ratio_);
  gain_out_ = std::isinf(q_) ? 0.0 : s / (q_ + s - 1.0);
}

SectorModel SectorModel::from_db(int sectors, double front_to_back_db) {
  return SectorModel(sectors, std::pow(10.0, front_to_back_db / 10.0));
}

double SectorModel::cap() const {
  if (ratio_ == 0.0) return kInf;
  return 1.0 / ratio_;
}

double SectorModel::to_unsectorized(double theta) const {
  if (theta >= cap()) return kInf;
  return theta * (1.0 + ratio_) / (1.0 - theta * ratio_);
}

double SectorModel::to_sectorized(double rho) const {
  if (std::isinf(rho)) return cap();
  return rho / (ratio_ * rho + 1.0 + ratio_);
}

double SectorModel::antenna_gain(double angle_from_boresight) const {
  if (sectors_ == 1) return 1.0;
  const double two_pi = 2.0 * std::numbers::pi;
  double a = std::remainder(angle_from_boresight, two_pi);
  return std::abs(a) < std::numbers::pi / sectors_ ? gain_in_ : gain_out_;
}

double sector_sir_cdf(const PathModel& model, const SectorModel& sect,
                      double theta) {
  if (theta <= 0.0) return 0.0;
  if (theta >= sect.cap()) return 1.0;
  return sir_cdf(model, sect.to_unsectorized(theta));
}

PdfValue sector_sir_pdf(const PathModel& model, const SectorModel& sect,
                        double theta) {
  if (!(theta > 0.0)) throw DomainError("sector_sir_pdf: requires theta > 0");
  if (theta >= sect.cap()) return {0.0, theta == sect.cap()};
  const double x = sect.to_unsectorized(theta);
  // dT/dtheta = (1+r)/(1-theta r)^2 = (x / theta)^2 / (1 + r).
  const double r = sect.sectors() == 1 ? 0.0
                                       : (sect.sectors() - 1.0) /
                                             sect.front_to_back();
  const double denom = 1.0 - theta * r;
  PdfValue inner = sir_pdf(model, x);
  inner.density *= (1.0 + r) / (denom * denom);
  return inner;
}

double sir_quantile(const PathModel& model, const SectorModel& sect,
                    double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("sir_quantile: requires 0 < p < 1");
  }
  return sect.to_sectorized(unsectorized_quantile(model, p));
}

}  // namespace ergse
