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


// Ergodic spectral efficiency C(rho) of a Rayleigh-faded link with
// Gaussian-treated interference, and its distribution and averages over
// network locations.

#ifndef ERGSE_SEFF_HPP_
#define ERGSE_SEFF_HPP_

#include <functional>
#include <string>
#include <utility>

#include "ergse/quadrature.hpp"
#include "ergse/sirdist.hpp"

namespace ergse {

class MimoConfig {
 public:
  MimoConfig() : MimoConfig(1, 1) {}
  /// 1 <= n_t, n_r <= 8.
  MimoConfig(int n_t, int n_r);

  int n_t() const { return n_t_; }
  int n_r() const { return n_r_; }
  int m() const { return n_t_ < n_r_ ? n_t_ : n_r_; }
  int n() const { return n_t_ < n_r_ ? n_r_ : n_t_; }

 private:
  int n_t_;
  int n_r_;
};

/// e^{1/rho} E_1(1/rho) log2(e).
double c_siso(double rho);
/// 1.4 ln(1 + 0.82 rho) and its exact inverse.
double c_siso_approx(double rho);
double rho_from_c(double c);
/// Triple-sum formula for N_r x N_t with IID Rayleigh entries, equal power
/// per transmit antenna.
double c_mimo(const MimoConfig& cfg, double rho);
/// 2 e^{2/rho} [E_1(2/rho) + E_3(2/rho)] log2(e).
double c_mimo_2x2(double rho);
/// 2.8 ln(1 + 0.41 rho) + e^{-1/rho} log2(e).
double c_mimo_2x2_approx(double rho);

enum class CurveKind { SisoExact, SisoApprox, MimoExact, Mimo2x2Approx, Custom };

/// A strictly increasing map rho -> bits/s/Hz with its numerical inverse.
class SeCurve {
 public:
  static SeCurve siso();
  static SeCurve siso_approx();
  static SeCurve mimo(const MimoConfig& cfg);
  static SeCurve mimo_2x2_approx();
  /// `receive_antennas` sets the low-SNR slope used by coverage scaling.
  static SeCurve custom(std::function<double(double)> fn, std::string label,
                        int receive_antennas = 1);

  double operator()(double rho) const { return fn_(rho); }
  /// rho with curve(rho) = c. Closed form for SisoApprox, otherwise
  /// bisection in log(rho) over [1e-9, 1e9] (tolerance 1e-10 relative,
  /// at most 200 steps). Returns +inf above curve(1e9).
  double inverse(double c) const;

  CurveKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  int receive_antennas() const { return n_r_; }

 private:
  SeCurve(CurveKind kind, std::function<double(double)> fn, std::string label,
          int n_r)
      : kind_(kind), fn_(std::move(fn)), label_(std::move(label)), n_r_(n_r) {}

  CurveKind kind_;
  std::function<double(double)> fn_;
  std::string label_;
  int n_r_;
};

/// Share of locations with C below gamma: F_rhoS(curve^-1(gamma)). Exactly 1
/// at and above the sector cap curve(Q/(S-1)).
double se_cdf(const PathModel& model, const SectorModel& sect,
              const SeCurve& curve, double gamma);

struct TailValue {
  double probability = 0.0;
  /// Result exceeds the constant level a_delta, where the tail form stops
  /// being meaningful.
  bool outside_validity = false;
};

/// Lower tail F_C(gamma) ~ exp(1.15 s* n_r / gamma).
TailValue coverage_tail(const PathModel& model, int n_r, double gamma);

/// gamma achievable at all but a share xi of locations, from the tail form:
/// 1.15 s* n_r / ln(xi). Requires 0 < xi <= a_delta.
double coverage_quantile(const PathModel& model, int n_r, double xi);

/// Same quantity from the full CDF: curve(sir_quantile(xi)).
double coverage_quantile_numeric(const PathModel& model,
                                 const SectorModel& sect, const SeCurve& curve,
                                 double xi);

/// Instantaneous SIR law for eta = 4: 1 - 1 / (1 + sqrt(t) atan(sqrt(t))).
double inst_sir_cdf_eta4(double theta);
/// log2(1 + theta_xi) with theta_xi the xi-quantile of inst_sir_cdf_eta4.
double inst_sir_coverage_se_eta4(double xi);

/// E[g(rho_S)] over network locations. `model` carries the branch family.
double expected_over_sir(const PathModel& model, const SectorModel& sect,
                         const std::function<double(double)>& g,
                         const QuadratureSpec& spec = {});

struct LognormalFit {
  double mu = 0.0;      // mean of ln C
  double sigma2 = 0.0;  // variance of ln C
};

/// Moments of ln C(rho_S). Branch family of the density as given by
/// `averaging_mode`.
LognormalFit lognormal_fit(const PathModel& model, const SectorModel& sect,
                           const SeCurve& curve,
                           BranchMode averaging_mode = BranchMode::ThreeBranch,
                           const QuadratureSpec& spec = {});

/// Spatial average of C per sector (multiply by S for a whole site).
double mean_se(const PathModel& model, const SectorModel& sect,
               const SeCurve& curve,
               BranchMode averaging_mode = BranchMode::ThreeBranch,
               const QuadratureSpec& spec = {});

/// eta = 4, 2x2 closed form built on the 2x2 approximation.
double mean_se_2x2_closed_eta4();

/// Average of the triple-sum MIMO curve against the ThreeBranch density,
/// reduced to one integral per (q) term.
double mean_se_general(const MimoConfig& cfg, const PathModel& model,
                       const QuadratureSpec& spec = {});

/// Average of the upper bound that assumes interferer fading is known:
/// int_0^inf log2(e) / 2F1(1, 1; 1 - delta; g / (1 + g)) dg.
double mean_se_cub(const PathModel& model, const QuadratureSpec& spec = {});

}  // namespace ergse

#endif  // ERGSE_SEFF_HPP_
