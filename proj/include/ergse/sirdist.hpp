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


// Distribution of the local-average SIR rho over network locations, for a
// Poisson field of base stations with path-loss exponent eta, with and
// without sectorized antennas.
//
// Two closed families are provided. FourBranch keeps the exact expression
// on [1/2, 1) and the e^{s*/theta} lower tail up to where it meets the
// constant A_delta. ThreeBranch stretches the lower tail up to where it
// meets 1 - sinc(delta) and is what the closed-form averages integrate.
// Both are exact for theta >= 1.

#ifndef ERGSE_SIRDIST_HPP_
#define ERGSE_SIRDIST_HPP_

namespace ergse {

enum class BranchMode { FourBranch, ThreeBranch };

/// Unique negative root of gamma_star_series(-delta, s), 0 < delta < 1.
/// Residual below 1e-10.
double solve_s_star(double delta);

class PathModel {
 public:
  /// eta > 2. Throws DomainError otherwise.
  explicit PathModel(double eta, BranchMode mode = BranchMode::FourBranch);

  double eta() const { return eta_; }
  double delta() const { return delta_; }
  double s_star() const { return s_star_; }
  double sinc() const { return sinc_; }
  BranchMode mode() const { return mode_; }

  /// Level of the constant segment: 1 - 2^d sinc d + B_d(1) for FourBranch,
  /// 1 - sinc d for ThreeBranch.
  double a_delta() const;
  /// Where the e^{s*/theta} tail meets the constant segment.
  double lower_breakpoint() const;

  /// Same exponent (and s*), other branch family. Cheap: no re-solve.
  PathModel with_mode(BranchMode mode) const;

 private:
  double eta_;
  double delta_;
  double s_star_;
  double sinc_;
  double a4_;  // FourBranch constant level
  double a3_;  // ThreeBranch constant level
  BranchMode mode_;
};

/// delta sinc^2(delta) Gamma^2(delta+1) 2F1(1, delta+1; 2delta+2; -1/x)
///   / (x^(1+2delta) Gamma(2delta+2)),  x > 0.
double b_delta(const PathModel& model, double x);
/// d/dx of b_delta.
double b_delta_derivative(const PathModel& model, double x);

double sir_cdf(const PathModel& model, double theta);

struct PdfValue {
  double density = 0.0;
  /// theta sits on a branch join; density is the right limit there.
  bool at_breakpoint = false;
};

/// Piecewise derivative of sir_cdf. The families have no jumps, so this
/// integrates to one on its own.
PdfValue sir_pdf(const PathModel& model, double theta);

/// F(theta / shift): the PPP law moved right by 10 log10(shift) dB.
double shifted_sir_cdf(const PathModel& model, double theta, double shift);

/// S sectors with front-to-back ratio Q. In-sector gain G = QS/(Q+S-1),
/// out-of-sector gain g = S/(Q+S-1). Q may be +infinity (ideal sectors).
class SectorModel {
 public:
  SectorModel() : SectorModel(1, 1.0) {}
  SectorModel(int sectors, double front_to_back_linear);
  static SectorModel from_db(int sectors, double front_to_back_db);

  int sectors() const { return sectors_; }
  double front_to_back() const { return q_; }
  double gain_in() const { return gain_in_; }
  double gain_out() const { return gain_out_; }

  /// Largest reachable rho_S, Q/(S-1). Infinite for S = 1 or ideal sectors.
  double cap() const;

  /// Unsectorized rho that a sectorized user with rho_S = theta needs:
  /// (Q+S-1) / (Q/theta - S + 1). Infinite at and beyond the cap.
  double to_unsectorized(double theta) const;
  /// Inverse of to_unsectorized, maps [0, inf) onto [0, cap).
  double to_sectorized(double rho) const;

  /// Horizontal pattern: G within +-pi/S of boresight, g elsewhere.
  double antenna_gain(double angle_from_boresight) const;

 private:
  int sectors_;
  double q_;
  double ratio_;  // (S-1)/Q
  double gain_in_;
  double gain_out_;
};

double sector_sir_cdf(const PathModel& model, const SectorModel& sect,
                      double theta);
PdfValue sector_sir_pdf(const PathModel& model, const SectorModel& sect,
                        double theta);

/// Smallest theta with sector_sir_cdf(theta) >= p, 0 < p < 1. On a flat
/// segment that is the segment's left endpoint.
double sir_quantile(const PathModel& model, const SectorModel& sect, double p);

}  // namespace ergse

#endif  // ERGSE_SIRDIST_HPP_
