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


#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "ergse/errors.hpp"
#include "ergse/montecarlo.hpp"

namespace ergse {

namespace {

constexpr double kPi = std::numbers::pi;

double per_square_meter(double density_per_km2) {
  return density_per_km2 * 1e-6;
}

std::size_t strongest(const std::vector<double>& p) {
  return static_cast<std::size_t>(
      std::distance(p.begin(), std::max_element(p.begin(), p.end())));
}

}  // namespace

std::vector<double> GeometrySample::powers(double eta) const {
  std::vector<double> p(distances.size());
  for (std::size_t k = 0; k < distances.size(); ++k) {
    p[k] = std::pow(distances[k], -eta);
    if (shadow_gains) p[k] *= (*shadow_gains)[k];
  }
  return p;
}

double GeometrySample::background_power(double eta) const {
  if (!(outer_radius > 0.0) || !(outer_density > 0.0)) return 0.0;
  return 2.0 * kPi * outer_density * std::pow(outer_radius, 2.0 - eta) /
         (eta - 2.0);
}

double SimConfig::effective_radius_km() const {
  if (region_radius > 0.0) return region_radius;
  return std::sqrt(1000.0 / (kPi * density));
}

GeometrySample sample_ppp(const SimConfig& config, Rng& rng) {
  if (!(config.density > 0.0)) throw DomainError("sample_ppp: density <= 0");
  const double radius_km = config.effective_radius_km();
  const double radius_m = radius_km * 1000.0;
  std::poisson_distribution<long> count(config.density * kPi * radius_km *
                                        radius_km);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  GeometrySample g;
  long n = 0;
  do {
    n = count(rng);
  } while (n < 2);
  g.distances.resize(static_cast<std::size_t>(n));
  for (auto& r : g.distances) r = radius_m * std::sqrt(unif(rng));
  std::sort(g.distances.begin(), g.distances.end());
  if (config.far_field_compensation) {
    g.outer_radius = radius_m;
    g.outer_density = per_square_meter(config.density);
  }
  return g;
}

double expected_kth_distance(int k, double density) {
  if (k < 0 || !(density > 0.0)) {
    throw DomainError("expected_kth_distance: requires k >= 0, density > 0");
  }
  return std::exp(std::lgamma(k + 1.5) - std::lgamma(k + 1.0)) /
         std::sqrt(kPi * per_square_meter(density));
}

GeometrySample expected_geometry(double r0, int n_interferers, double density) {
  if (!(r0 > 0.0) || n_interferers < 0) {
    throw DomainError("expected_geometry: requires r0 > 0");
  }
  GeometrySample g;
  g.distances.push_back(r0);
  for (int k = 1; k <= n_interferers; ++k) {
    g.distances.push_back(expected_kth_distance(k, density));
  }
  if (n_interferers > 0 && !(r0 < g.distances[1])) {
    throw DomainError("expected_geometry: r0 must be below the first "
                      "interferer distance");
  }
  return g;
}

double lattice_pitch(double density) {
  if (!(density > 0.0)) throw DomainError("lattice_pitch: density <= 0");
  // Hexagonal cell area sqrt(3)/2 a^2 equals 1 / lambda.
  return std::sqrt(2.0 / (std::sqrt(3.0) * per_square_meter(density)));
}

std::vector<Point> build_lattice(const SimConfig& config) {
  const double a = lattice_pitch(config.density);
  const double h = std::sqrt(3.0) / 2.0;
  struct Site {
    Point p;
    double r;
    double angle;
  };
  std::vector<Site> sites;
  int span = 0;
  if (config.lattice_rings) {
    span = *config.lattice_rings;
    if (span < 0) throw DomainError("build_lattice: negative ring count");
  } else {
    if (config.lattice_target_count < 1) {
      throw DomainError("build_lattice: target count must be >= 1");
    }
    span = static_cast<int>(
               std::ceil(std::sqrt(config.lattice_target_count / 2.0))) +
           2;
  }
  for (int i = -2 * span; i <= 2 * span; ++i) {
    for (int j = -2 * span; j <= 2 * span; ++j) {
      if (config.lattice_rings &&
          std::max({std::abs(i), std::abs(j), std::abs(i + j)}) > span) {
        continue;
      }
      const Point p{a * (i + 0.5 * j), a * h * j};
      sites.push_back({p, std::hypot(p.x, p.y), std::atan2(p.y, p.x)});
    }
  }
  std::sort(sites.begin(), sites.end(), [](const Site& u, const Site& v) {
    if (u.r != v.r) return u.r < v.r;
    return u.angle < v.angle;
  });
  std::size_t keep = sites.size();
  if (!config.lattice_rings) {
    keep = std::min<std::size_t>(
        sites.size(), static_cast<std::size_t>(config.lattice_target_count));
    // Keep whole shells so the truncation stays a disk.
    const double edge = sites[keep - 1].r;
    while (keep < sites.size() && sites[keep].r <= edge * (1.0 + 1e-12)) {
      ++keep;
    }
  }
  std::vector<Point> out;
  out.reserve(keep);
  for (std::size_t k = 0; k < keep; ++k) out.push_back(sites[k].p);
  return out;
}

Point drop_user_in_center_cell(double pitch, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(rng);
  const double v = unif(rng);
  return {pitch * (u + 0.5 * v), pitch * (std::sqrt(3.0) / 2.0) * v};
}

GeometrySample apply_shadowing(const std::vector<Point>& sites, Point user,
                               double sigma_db, double eta, Rng& rng) {
  if (!(sigma_db >= 0.0)) throw DomainError("apply_shadowing: sigma_db < 0");
  if (sites.size() < 2) throw DomainError("apply_shadowing: need 2+ sites");
  const std::size_t n = sites.size();
  std::vector<double> r(n);
  for (std::size_t k = 0; k < n; ++k) {
    r[k] = std::hypot(sites[k].x - user.x, sites[k].y - user.y);
    if (!(r[k] > 0.0)) throw DomainError("apply_shadowing: user on a site");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&r](std::size_t i, std::size_t j) { return r[i] < r[j]; });
  GeometrySample g;
  g.distances.resize(n);
  for (std::size_t k = 0; k < n; ++k) g.distances[k] = r[order[k]];
  if (sigma_db > 0.0) {
    std::normal_distribution<double> normal(0.0, sigma_db);
    std::vector<double> gains(n);
    for (auto& x : gains) x = std::pow(10.0, normal(rng) / 10.0);
    g.shadow_gains = std::move(gains);
    g.serving_index = strongest(g.powers(eta));
  }
  return g;
}

void assign_sector_orientations(GeometrySample& sample, Rng& rng) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::vector<double> offsets(sample.distances.size());
  for (auto& o : offsets) o = angle(rng);
  sample.sector_offsets = std::move(offsets);
}

double local_avg_sir(const GeometrySample& sample, double eta,
                     const SectorModel& sect, double noise_over_p) {
  const std::vector<double> p = sample.powers(eta);
  const std::size_t serving = sample.serving_index;
  if (serving >= p.size()) throw DomainError("local_avg_sir: bad serving index");
  const double background = sample.background_power(eta);
  if (p.size() < 2 && background == 0.0 && noise_over_p == 0.0) {
    throw DomainError("local_avg_sir: no interference and no noise");
  }
  const int s_count = sect.sectors();
  // Aggregate gain of site k toward the user, and the serving site's split
  // between the serving sector and the others.
  auto site_gain = [&](std::size_t k) {
    if (s_count == 1) return 1.0;
    if (!sample.sector_offsets) return static_cast<double>(s_count);
    double total = 0.0;
    for (int s = 0; s < s_count; ++s) {
      total += sect.antenna_gain((*sample.sector_offsets)[k] +
                                 2.0 * kPi * s / s_count);
    }
    return total;
  };
  double interference = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k != serving) interference += site_gain(k) * p[k];
  }
  interference += s_count * background;
  const double x0 = p[serving];
  const double useful = sect.gain_in() * x0;
  const double leak = (site_gain(serving) - sect.gain_in()) * x0;
  return useful / (std::max(0.0, leak) + interference + noise_over_p);
}

double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_distance: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

double ks_distance_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_distance: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return d;
}

}  // namespace ergse
