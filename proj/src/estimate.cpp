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
#include <random>
#include <vector>

#include "ergse/errors.hpp"
#include "ergse/montecarlo.hpp"
#include "ergse/parallel.hpp"

namespace ergse {

namespace {

EstimateWithError sample_mean(const std::vector<double>& v) {
  EstimateWithError out;
  out.n_samples = v.size();
  if (v.empty()) return out;
  double s = 0.0;
  for (double x : v) s += x;
  out.value = s / static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - out.value) * (x - out.value);
    out.std_error = std::sqrt(ss / static_cast<double>(v.size() - 1) /
                              static_cast<double>(v.size()));
  }
  return out;
}

EntropyBudget budget_of(const SimConfig& config) {
  EntropyBudget b;
  b.n_fading = config.n_fading;
  b.n_mixture = config.n_mixture;
  b.n_batches = std::min(40, config.n_fading);
  return b;
}

void check_config(const SimConfig& config) {
  if (config.n_geometries < 1 || config.n_fading < 1 || config.n_mixture < 1 ||
      config.truncate_interferers < 0 || !(config.density > 0.0) ||
      !(config.shadow_sigma_db >= 0.0)) {
    throw DomainError("SimConfig: counts must be >= 1, density > 0, "
                      "sigma >= 0");
  }
}

SeCurve curve_of(const Scenario& scenario) {
  return SeCurve::mimo(scenario.mimo);
}

}  // namespace

GeometrySample draw_geometry(const Scenario& scenario, const SimConfig& config,
                             const std::vector<Point>& lattice, Rng& rng) {
  GeometrySample g;
  if (scenario.geometry == GeometryKind::Lattice) {
    const Point user =
        drop_user_in_center_cell(lattice_pitch(config.density), rng);
    g = apply_shadowing(lattice, user, config.shadow_sigma_db, scenario.eta,
                        rng);
  } else {
    g = sample_ppp(config, rng);
    if (config.shadow_sigma_db > 0.0) {
      std::normal_distribution<double> normal(0.0, config.shadow_sigma_db);
      std::vector<double> gains(g.distances.size());
      for (auto& x : gains) x = std::pow(10.0, normal(rng) / 10.0);
      g.shadow_gains = std::move(gains);
      const std::vector<double> p = g.powers(scenario.eta);
      g.serving_index = static_cast<std::size_t>(
          std::max_element(p.begin(), p.end()) - p.begin());
      // The far-field mean would need E[chi]; leave it out when shadowed.
      g.outer_density = 0.0;
    }
  }
  if (scenario.sectors.sectors() > 1) assign_sector_orientations(g, rng);
  return g;
}

DistributionEstimate estimate_distribution(Quantity quantity,
                                           const Scenario& scenario,
                                           const SimConfig& config) {
  check_config(config);
  const bool sectorized = scenario.sectors.sectors() > 1;
  if (sectorized && (quantity == Quantity::CExact || quantity == Quantity::CUb)) {
    throw DomainError("estimate_distribution: exact and upper-bound "
                      "estimators are unsectorized");
  }
  const std::vector<Point> lattice = scenario.geometry == GeometryKind::Lattice
                                         ? build_lattice(config)
                                         : std::vector<Point>{};
  const SeCurve curve = curve_of(scenario);
  const bool siso = scenario.mimo.n_t() == 1 && scenario.mimo.n_r() == 1;
  const EntropyBudget budget = budget_of(config);
  const std::size_t n = static_cast<std::size_t>(config.n_geometries);

  DistributionEstimate out;
  out.samples.assign(n, 0.0);
  out.std_errors.assign(n, 0.0);
  std::vector<char> starved(n, 0);

  parallel_for(n, config.workers, [&](std::size_t i) {
    Rng rng = make_substream(config.seed, i);
    const GeometrySample g = draw_geometry(scenario, config, lattice, rng);
    switch (quantity) {
      case Quantity::Rho:
        out.samples[i] = local_avg_sir(g, scenario.eta, scenario.sectors,
                                       scenario.noise_over_p);
        break;
      case Quantity::CAnalytic:
        out.samples[i] = curve(local_avg_sir(g, scenario.eta, scenario.sectors,
                                             scenario.noise_over_p));
        break;
      case Quantity::CExact: {
        const EstimateWithError e =
            siso ? c_exact_siso(g, scenario.eta, scenario.noise_over_p,
                                config.truncate_interferers, budget, rng)
                 : c_exact_mimo(g, scenario.eta, scenario.mimo,
                                scenario.noise_over_p,
                                config.truncate_interferers, budget, rng);
        out.samples[i] = e.value;
        out.std_errors[i] = e.std_error;
        starved[i] = e.starved;
        break;
      }
      case Quantity::CUb:
        if (siso) {
          out.samples[i] = c_ub_realization(g, scenario.eta,
                                            scenario.noise_over_p,
                                            config.truncate_interferers);
        } else {
          const EstimateWithError e = c_ub_mimo(
              g, scenario.eta, scenario.mimo, scenario.noise_over_p,
              config.truncate_interferers, config.n_fading,
              budget.n_batches, rng);
          out.samples[i] = e.value;
          out.std_errors[i] = e.std_error;
        }
        break;
    }
  });

  out.mean = sample_mean(out.samples);
  for (char s : starved) out.starved = out.starved || s != 0;
  out.mean.starved = out.starved;
  return out;
}

EstimateWithError mean_c_exact(const Scenario& scenario,
                               const SimConfig& config, int pilot_geometries) {
  check_config(config);
  if (pilot_geometries < 1) {
    throw DomainError("mean_c_exact: pilot_geometries must be >= 1");
  }
  if (scenario.sectors.sectors() > 1) {
    throw DomainError("mean_c_exact: unsectorized only");
  }
  // Phase 1: C(rho) on its own stream family.
  SimConfig pilot = config;
  pilot.seed = substream_seed(config.seed, 0xC0FFEEULL);
  pilot.n_geometries = pilot_geometries;
  const EstimateWithError base =
      estimate_distribution(Quantity::CAnalytic, scenario, pilot).mean;

  // Phase 2: the gap C_exact - C(rho), same geometry for both terms.
  const std::vector<Point> lattice = scenario.geometry == GeometryKind::Lattice
                                         ? build_lattice(config)
                                         : std::vector<Point>{};
  const SeCurve curve = curve_of(scenario);
  const bool siso = scenario.mimo.n_t() == 1 && scenario.mimo.n_r() == 1;
  const EntropyBudget budget = budget_of(config);
  const std::size_t n = static_cast<std::size_t>(config.n_geometries);
  std::vector<double> gap(n, 0.0);
  std::vector<char> starved(n, 0);
  parallel_for(n, config.workers, [&](std::size_t i) {
    Rng rng = make_substream(config.seed, i);
    const GeometrySample g = draw_geometry(scenario, config, lattice, rng);
    const double c = curve(local_avg_sir(g, scenario.eta, {},
                                         scenario.noise_over_p));
    const EstimateWithError e =
        siso ? c_exact_siso(g, scenario.eta, scenario.noise_over_p,
                            config.truncate_interferers, budget, rng)
             : c_exact_mimo(g, scenario.eta, scenario.mimo,
                            scenario.noise_over_p,
                            config.truncate_interferers, budget, rng);
    gap[i] = e.value - c;
    starved[i] = e.starved;
  });
  const EstimateWithError delta = sample_mean(gap);

  EstimateWithError out;
  out.value = base.value + delta.value;
  out.std_error = std::hypot(base.std_error, delta.std_error);
  out.n_samples = n;
  for (char s : starved) out.starved = out.starved || s != 0;
  return out;
}

}  // namespace ergse
