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


// Monte-Carlo entropy differences for the serving link.
//
// Given interferer fading the interference-plus-noise z is complex Gaussian
// with variance (covariance) V, so its density is a Gaussian scale mixture.
// We evaluate that density exactly up to the mixture average, which runs
// over a fixed pool of independent V draws. Received powers are normalized
// so the serving site has power 1.
//
// The per-sample difference D = log f_z(z) - log f_y(y) is paired with
// G = ln(1 + a / Vbar), whose mean C(rho) ln 2 is known; the estimator is
// C(rho) + mean(D - G) / ln 2. With no interferers D = G exactly.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "ergse/errors.hpp"
#include "ergse/montecarlo.hpp"
#include "ergse/seff.hpp"
#include "ergse/specialfn.hpp"

namespace ergse {

namespace {

constexpr double kLnPi = 1.1447298858494002;  // ln(pi)

// Interferer powers relative to the serving one: the `truncate` strongest
// are kept for fading; the rest plus background and noise form `floor`.
struct NormalizedLink {
  std::vector<double> x;
  double floor = 0.0;
  double mean_total() const {
    double s = floor;
    for (double v : x) s += v;
    return s;
  }
};

NormalizedLink normalize(const GeometrySample& sample, double eta,
                         double noise_over_p, int truncate) {
  const std::vector<double> p = sample.powers(eta);
  if (sample.serving_index >= p.size()) {
    throw DomainError("mutual information: bad serving index");
  }
  const double x0 = p[sample.serving_index];
  NormalizedLink link;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k != sample.serving_index) link.x.push_back(p[k] / x0);
  }
  std::sort(link.x.begin(), link.x.end(), std::greater<>());
  double rest = sample.background_power(eta) + noise_over_p;
  if (truncate > 0 && link.x.size() > static_cast<std::size_t>(truncate)) {
    for (std::size_t k = static_cast<std::size_t>(truncate); k < link.x.size();
         ++k) {
      rest += link.x[k] * x0;
    }
    link.x.resize(static_cast<std::size_t>(truncate));
  }
  link.floor = rest / x0;
  if (link.x.empty() && link.floor == 0.0) {
    throw DomainError("mutual information: no interference and no noise");
  }
  return link;
}

double log_mean_exp(const std::vector<double>& v) {
  const double m = *std::max_element(v.begin(), v.end());
  double s = 0.0;
  for (double t : v) s += std::exp(t - m);
  return m + std::log(s / static_cast<double>(v.size()));
}

// Batch-means estimate of the mean of `e`, scaled to bits.
EstimateWithError batch_estimate(const std::vector<double>& e, int n_batches,
                                 double offset_bits, double max_se) {
  const std::size_t n = e.size();
  const std::size_t nb = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(1, n_batches)), 1, n);
  const std::size_t per = n / nb;
  std::vector<double> means(nb, 0.0);
  double total = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t i = b * per; i < (b + 1) * per; ++i) means[b] += e[i];
    means[b] /= static_cast<double>(per);
  }
  for (double v : e) total += v;
  const double mean = total / static_cast<double>(n);
  double ss = 0.0;
  for (double m : means) ss += (m - mean) * (m - mean);
  const double se =
      nb > 1 ? std::sqrt(ss / static_cast<double>(nb - 1) / static_cast<double>(nb))
             : 0.0;
  EstimateWithError out;
  out.value = offset_bits + mean * kLog2E;
  out.std_error = se * kLog2E;
  out.n_samples = n;
  out.starved = out.std_error > max_se;
  return out;
}

void check_budget(const EntropyBudget& budget) {
  if (budget.n_fading < 1 || budget.n_mixture < 1 || budget.n_batches < 1 ||
      budget.n_fading < budget.n_batches) {
    throw DomainError("EntropyBudget: counts must be >= 1 and "
                      "n_fading >= n_batches");
  }
}

using CMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                              Eigen::Dynamic, 0, 8, 8>;
using CVector =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 1, 0, 8, 1>;

struct ComplexNormal {
  std::normal_distribution<double> n{0.0, std::sqrt(0.5)};
  std::complex<double> operator()(Rng& rng) { return {n(rng), n(rng)}; }
};

CMatrix random_channel(int rows, int cols, Rng& rng, ComplexNormal& cn) {
  CMatrix h(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) h(i, j) = cn(rng);
  }
  return h;
}

// floor I + sum_k x_k / N_t H_k H_k^H.
CMatrix interference_covariance(const NormalizedLink& link,
                                const MimoConfig& cfg, Rng& rng,
                                ComplexNormal& cn) {
  const int nr = cfg.n_r();
  CMatrix r = CMatrix::Identity(nr, nr) * link.floor;
  CVector h(nr);
  for (double xk : link.x) {
    const double w = xk / cfg.n_t();
    for (int t = 0; t < cfg.n_t(); ++t) {
      for (int i = 0; i < nr; ++i) h(i) = cn(rng);
      r.noalias() += w * h * h.adjoint();
    }
  }
  return r;
}

double log_det_hpd(const Eigen::LLT<CMatrix>& llt) {
  double s = 0.0;
  const auto& l = llt.matrixLLT();
  for (int i = 0; i < l.rows(); ++i) s += std::log(l(i, i).real());
  return 2.0 * s;
}

}  // namespace

EstimateWithError c_exact_siso(const GeometrySample& sample, double eta,
                               double noise_over_p, int truncate_interferers,
                               const EntropyBudget& budget, Rng& rng) {
  check_budget(budget);
  const NormalizedLink link =
      normalize(sample, eta, noise_over_p, truncate_interferers);
  const double vbar = link.mean_total();
  std::exponential_distribution<double> expo(1.0);
  auto draw_v = [&] {
    double v = link.floor;
    for (double xk : link.x) v += xk * expo(rng);
    return v;
  };

  const std::size_t nm = static_cast<std::size_t>(budget.n_mixture);
  std::vector<double> pool(nm);
  std::vector<double> pool_log(nm);
  for (std::size_t j = 0; j < nm; ++j) {
    pool[j] = draw_v();
    pool_log[j] = std::log(pool[j]) + kLnPi;
  }

  std::vector<double> e(static_cast<std::size_t>(budget.n_fading));
  std::vector<double> ty(nm);
  std::vector<double> tz(nm);
  for (auto& ei : e) {
    const double a = expo(rng);  // |H0|^2
    const double v = draw_v();
    const double w2 = expo(rng);  // |w|^2, w ~ CN(0, 1)
    const double y2 = (a + v) * w2;
    const double z2 = v * w2;
    for (std::size_t j = 0; j < nm; ++j) {
      const double s = a + pool[j];
      ty[j] = -y2 / s - std::log(s) - kLnPi;
      tz[j] = -z2 / pool[j] - pool_log[j];
    }
    const double d = log_mean_exp(tz) - log_mean_exp(ty);
    ei = d - std::log1p(a / vbar);
  }
  return batch_estimate(e, budget.n_batches, c_siso(1.0 / vbar),
                        budget.max_std_error);
}

EstimateWithError c_exact_mimo(const GeometrySample& sample, double eta,
                               const MimoConfig& cfg, double noise_over_p,
                               int truncate_interferers,
                               const EntropyBudget& budget, Rng& rng) {
  check_budget(budget);
  const NormalizedLink link =
      normalize(sample, eta, noise_over_p, truncate_interferers);
  const double vbar = link.mean_total();
  const int nr = cfg.n_r();
  const int nt = cfg.n_t();
  ComplexNormal cn;

  const std::size_t nm = static_cast<std::size_t>(budget.n_mixture);
  std::vector<CMatrix> pool;
  std::vector<Eigen::LLT<CMatrix>> pool_llt;
  std::vector<double> pool_logdet(nm);
  pool.reserve(nm);
  pool_llt.reserve(nm);
  for (std::size_t j = 0; j < nm; ++j) {
    pool.push_back(interference_covariance(link, cfg, rng, cn));
    pool_llt.emplace_back(pool.back());
    if (pool_llt.back().info() != Eigen::Success) {
      throw DomainError("c_exact_mimo: singular interference covariance");
    }
    pool_logdet[j] = log_det_hpd(pool_llt.back()) + nr * kLnPi;
  }

  std::vector<double> e(static_cast<std::size_t>(budget.n_fading));
  std::vector<double> ty(nm);
  std::vector<double> tz(nm);
  const CMatrix identity = CMatrix::Identity(nr, nr);
  for (auto& ei : e) {
    const CMatrix h0 = random_channel(nr, nt, rng, cn);
    const CMatrix a = h0 * h0.adjoint() / static_cast<double>(nt);
    const CMatrix r = interference_covariance(link, cfg, rng, cn);
    CVector w(nr);
    for (int i = 0; i < nr; ++i) w(i) = cn(rng);
    const Eigen::LLT<CMatrix> llt_y(a + r);
    const Eigen::LLT<CMatrix> llt_z(r);
    if (llt_y.info() != Eigen::Success || llt_z.info() != Eigen::Success) {
      throw DomainError("c_exact_mimo: singular covariance");
    }
    const CVector y = llt_y.matrixL() * w;
    const CVector z = llt_z.matrixL() * w;
    for (std::size_t j = 0; j < nm; ++j) {
      const Eigen::LLT<CMatrix> m(a + pool[j]);
      const CVector uy = m.matrixL().solve(y);
      ty[j] = -uy.squaredNorm() - log_det_hpd(m) - nr * kLnPi;
      const CVector uz = pool_llt[j].matrixL().solve(z);
      tz[j] = -uz.squaredNorm() - pool_logdet[j];
    }
    const double d = log_mean_exp(tz) - log_mean_exp(ty);
    const Eigen::LLT<CMatrix> g(identity + a / vbar);
    ei = d - log_det_hpd(g);
  }
  return batch_estimate(e, budget.n_batches, c_mimo(cfg, 1.0 / vbar),
                        budget.max_std_error);
}

double c_ub_realization(const GeometrySample& sample, double eta,
                        double noise_over_p, int truncate_interferers,
                        const QuadratureSpec& spec) {
  const NormalizedLink link =
      normalize(sample, eta, noise_over_p, truncate_interferers);
  auto f = [&link](double t) {
    double s = -t * link.floor - std::log1p(t);
    for (double xk : link.x) s -= std::log1p(t * xk);
    return std::exp(s);
  };
  return integrate(f, 0.0, std::numeric_limits<double>::infinity(), spec) *
         kLog2E;
}

EstimateWithError c_ub_mimo(const GeometrySample& sample, double eta,
                            const MimoConfig& cfg, double noise_over_p,
                            int truncate_interferers, int n_samples,
                            int n_batches, Rng& rng) {
  if (n_samples < 1 || n_batches < 1 || n_samples < n_batches) {
    throw DomainError("c_ub_mimo: invalid sample counts");
  }
  const NormalizedLink link =
      normalize(sample, eta, noise_over_p, truncate_interferers);
  const int nr = cfg.n_r();
  const int nt = cfg.n_t();
  ComplexNormal cn;
  std::vector<double> e(static_cast<std::size_t>(n_samples));
  for (auto& ei : e) {
    const CMatrix h0 = random_channel(nr, nt, rng, cn);
    const CMatrix a = h0 * h0.adjoint() / static_cast<double>(nt);
    const CMatrix r = interference_covariance(link, cfg, rng, cn);
    const Eigen::LLT<CMatrix> lr(r);
    const Eigen::LLT<CMatrix> lar(a + r);
    if (lr.info() != Eigen::Success || lar.info() != Eigen::Success) {
      throw DomainError("c_ub_mimo: singular interference covariance");
    }
    ei = log_det_hpd(lar) - log_det_hpd(lr);
  }
  return batch_estimate(e, n_batches, 0.0,
                        std::numeric_limits<double>::infinity());
}

}  // namespace ergse
