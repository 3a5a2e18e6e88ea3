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


// Simulation baselines: PPP and shadowed-lattice geometries, local-average
// SIR samples, the exact mutual information under non-Gaussian interference
// and the known-interferer-fading upper bound.
//
// Lengths are in meters, densities in base stations per km^2. Received
// powers are gain * r^-eta with transmit power 1, and `noise_over_p` is the
// noise power in those same units.

#ifndef ERGSE_MONTECARLO_HPP_
#define ERGSE_MONTECARLO_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "ergse/quadrature.hpp"
#include "ergse/random.hpp"
#include "ergse/seff.hpp"
#include "ergse/sirdist.hpp"

namespace ergse {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct GeometrySample {
  std::vector<double> distances;  // ascending, meters
  std::optional<std::vector<double>> shadow_gains;  // linear, per distance
  /// Orientation of sector 0 of each site relative to the direction of the
  /// user, radians.
  std::optional<std::vector<double>> sector_offsets;
  std::size_t serving_index = 0;
  /// Sites beyond this radius (meters) are not listed; with a positive
  /// outer_density their mean interference is added back as a constant.
  double outer_radius = 0.0;
  double outer_density = 0.0;  // per m^2

  /// gain_k * r_k^-eta.
  std::vector<double> powers(double eta) const;
  /// Mean interference of a PPP of outer_density beyond outer_radius,
  /// 2 pi lambda R^(2-eta) / (eta - 2).
  double background_power(double eta) const;
};

struct SimConfig {
  double density = 1.0;  // per km^2
  /// Disk radius in km; 0 picks the radius holding 1000 sites on average.
  double region_radius = 0.0;
  std::optional<int> lattice_rings;  // hexagonal rings around the origin
  int lattice_target_count = 977;    // used when lattice_rings is unset
  double shadow_sigma_db = 0.0;
  std::uint64_t seed = 1;
  int n_geometries = 500;
  int n_fading = 2000;
  int n_mixture = 512;
  /// Interferers simulated with fading; the rest enter through their mean
  /// power. 0 keeps everything.
  int truncate_interferers = 100;
  /// Add the mean interference of the PPP beyond the disk.
  bool far_field_compensation = true;
  int workers = 1;

  double effective_radius_km() const;
};

struct EstimateWithError {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
  bool starved = false;
  /// Half-width of the normal 99% interval.
  double ci99() const { return 2.5758293035489004 * std_error; }
};

/// Sites of a PPP in the disk, user at the origin, nearest first.
GeometrySample sample_ppp(const SimConfig& config, Rng& rng);

/// Mean distance to the k-th nearest PPP point (k = 0 is the nearest),
/// Gamma(k+1.5) / (sqrt(pi lambda) Gamma(k+1)), in meters.
double expected_kth_distance(int k, double density);

/// Serving site at r0, interferers at expected_kth_distance(1..n).
GeometrySample expected_geometry(double r0, int n_interferers, double density);

/// Distance between neighbouring sites of a triangular lattice with the
/// given density, meters.
double lattice_pitch(double density);

/// Triangular-lattice sites (hexagonal cells) around the origin, nearest
/// first. Either full hexagonal rings, or the `lattice_target_count` sites
/// closest to the origin.
std::vector<Point> build_lattice(const SimConfig& config);

/// Uniform position in the lattice cell attached to the origin. Any
/// fundamental cell gives the stationary user law; this one is the
/// parallelogram spanned by the two basis vectors.
Point drop_user_in_center_cell(double pitch, Rng& rng);

/// Distances from `user`, lognormal gains 10^{X/10} with X ~ N(0, sigma^2)
/// (unit median), serving site = strongest received power.
GeometrySample apply_shadowing(const std::vector<Point>& sites, Point user,
                               double sigma_db, double eta, Rng& rng);

/// Uniform orientations for every site of the sample.
void assign_sector_orientations(GeometrySample& sample, Rng& rng);

/// Local-average SINR of the serving sector. With S sectors every site
/// radiates G + (S-1) g = S in total, whatever the orientation; the
/// serving site contributes its own out-of-sector leakage.
double local_avg_sir(const GeometrySample& sample, double eta,
                     const SectorModel& sect = {}, double noise_over_p = 0.0);

struct EntropyBudget {
  int n_fading = 2000;
  int n_mixture = 512;
  int n_batches = 40;  // batch means for the standard error, >= 30 advised
  double max_std_error = std::numeric_limits<double>::infinity();
};

/// Mutual information of the serving link when interference is the true
/// Gaussian scale mixture rather than a Gaussian, bits/s/Hz.
EstimateWithError c_exact_siso(const GeometrySample& sample, double eta,
                               double noise_over_p, int truncate_interferers,
                               const EntropyBudget& budget, Rng& rng);

/// N_r x N_t version, transmit power split evenly across antennas.
EstimateWithError c_exact_mimo(const GeometrySample& sample, double eta,
                               const MimoConfig& cfg, double noise_over_p,
                               int truncate_interferers,
                               const EntropyBudget& budget, Rng& rng);

/// E[log2(1 + |H0|^2 x0 / (sum |H_k|^2 x_k + N))] by quadrature of
/// int_0^inf e^{-t N/x0} / (1+t) prod_k 1/(1 + t x_k/x0) dt.
double c_ub_realization(const GeometrySample& sample, double eta,
                        double noise_over_p, int truncate_interferers,
                        const QuadratureSpec& spec = {});

/// E[log2 det(I + R^-1 A)] with A the serving and R the interferer
/// covariance, by direct sampling.
EstimateWithError c_ub_mimo(const GeometrySample& sample, double eta,
                            const MimoConfig& cfg, double noise_over_p,
                            int truncate_interferers, int n_samples,
                            int n_batches, Rng& rng);

/// sup |F_n - F| over the sample points.
double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf);
double ks_distance_two_sample(std::vector<double> a, std::vector<double> b);

enum class GeometryKind { Ppp, Lattice };
enum class Quantity { Rho, CAnalytic, CExact, CUb };

struct Scenario {
  GeometryKind geometry = GeometryKind::Ppp;
  double eta = 4.0;
  SectorModel sectors;
  MimoConfig mimo;
  double noise_over_p = 0.0;
};

struct DistributionEstimate {
  std::vector<double> samples;     // one per geometry, in geometry order
  std::vector<double> std_errors;  // Monte-Carlo error per sample, if any
  EstimateWithError mean;          // over geometries
  bool starved = false;            // some per-geometry estimate starved
};

/// One geometry for the scenario, drawn from `rng`. `lattice` must hold
/// build_lattice(config) for lattice scenarios.
GeometrySample draw_geometry(const Scenario& scenario, const SimConfig& config,
                             const std::vector<Point>& lattice, Rng& rng);

/// Evaluates `quantity` on config.n_geometries independent geometries.
/// Geometry i draws from make_substream(config.seed, i).
DistributionEstimate estimate_distribution(Quantity quantity,
                                           const Scenario& scenario,
                                           const SimConfig& config);

/// Spatial mean of C_exact as mean C(rho) over `pilot_geometries` cheap
/// geometries plus the mean gap C_exact - C(rho) over config.n_geometries.
/// The gap varies far less across geometries than C itself.
EstimateWithError mean_c_exact(const Scenario& scenario,
                               const SimConfig& config,
                               int pilot_geometries);

}  // namespace ergse

#endif  // ERGSE_MONTECARLO_HPP_
