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


#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ergse/errors.hpp"
#include "ergse/montecarlo.hpp"
#include "ergse/parallel.hpp"
#include "ergse/seff.hpp"
#include "ergse/sirdist.hpp"
#include "ergse/specialfn.hpp"

namespace ergse::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  double eta = 4.0;
  std::string eta_range;
  int sectors = 1;
  double q_db = 20.0;
  int nt = 1;
  int nr = 1;
  std::string grid;
  bool grid_set = false;
  std::string mode;
  std::string curve = "auto";
  double shift = 1.0;
  std::string geometry = "ppp";
  std::string quantity = "rho";
  double density = 1.0;
  double radius = 0.0;
  int lattice_count = 977;
  int lattice_rings = 0;
  double sigma_db = 0.0;
  std::uint64_t seed = 1;
  int geometries = 500;
  int fading = 2000;
  int mixture = 512;
  int truncate = 100;
  int pilot = 20000;
  int mc_geometries = 0;
  std::string mc_quantity = "exact";
  double max_stderr = 0.0;
  bool no_far_field = false;
  int workers = 1;
  std::string out;
};

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["eta"] = c.eta;
  j["eta_range"] = c.eta_range;
  j["sectors"] = c.sectors;
  j["q_db"] = c.q_db;
  j["nt"] = c.nt;
  j["nr"] = c.nr;
  j["grid"] = c.grid;
  j["mode"] = c.mode;
  j["curve"] = c.curve;
  j["shift"] = c.shift;
  j["geometry"] = c.geometry;
  j["quantity"] = c.quantity;
  j["density"] = c.density;
  j["radius"] = c.radius;
  j["lattice_count"] = c.lattice_count;
  j["lattice_rings"] = c.lattice_rings;
  j["sigma_db"] = c.sigma_db;
  j["seed"] = c.seed;
  j["geometries"] = c.geometries;
  j["fading"] = c.fading;
  j["mixture"] = c.mixture;
  j["truncate"] = c.truncate;
  j["pilot"] = c.pilot;
  j["mc_geometries"] = c.mc_geometries;
  j["mc_quantity"] = c.mc_quantity;
  j["max_stderr"] = c.max_stderr;
  j["no_far_field"] = c.no_far_field;
  j["workers"] = c.workers;
  j["out"] = c.out;
  return j;
}

std::string fmt9(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// "min:max:points[:lin|log]".
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3 && parts.size() != 4) {
    throw UsageError("grid must be min:max:points[:lin|log], got '" + spec +
                     "'");
  }
  double lo = 0.0;
  double hi = 0.0;
  long points = 0;
  try {
    std::size_t used = 0;
    lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("min");
    hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("max");
    points = std::stol(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("points");
  } catch (const std::exception&) {
    throw UsageError("grid '" + spec + "' has a malformed number");
  }
  const std::string scale = parts.size() == 4 ? parts[3] : "lin";
  if (scale != "lin" && scale != "log") {
    throw UsageError("grid scale must be lin or log");
  }
  if (!(lo < hi) || points < 2 || points > 10000000) {
    throw UsageError("grid needs min < max and points >= 2");
  }
  if (scale == "log" && !(lo > 0.0)) {
    throw UsageError("log grid needs min > 0");
  }
  std::vector<double> out(static_cast<std::size_t>(points));
  for (long i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    out[static_cast<std::size_t>(i)] =
        scale == "log" ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                       : lo + t * (hi - lo);
  }
  out.back() = hi;
  return out;
}

std::vector<double> eta_values(const RunConfig& c) {
  if (c.eta_range.empty()) return {c.eta};
  std::vector<double> v = parse_grid(c.eta_range);
  // Snap to the decimal grid users type, so 3.5:4.2:8 prints 3.6, 3.7, ...
  for (double& e : v) e = std::round(e * 1e9) / 1e9;
  return v;
}

BranchMode parse_mode(const std::string& mode, BranchMode fallback) {
  if (mode.empty()) return fallback;
  if (mode == "four") return BranchMode::FourBranch;
  if (mode == "three") return BranchMode::ThreeBranch;
  throw UsageError("--mode must be four or three");
}

SeCurve make_curve(const RunConfig& c) {
  const MimoConfig cfg(c.nt, c.nr);
  if (c.curve == "auto" || c.curve == "mimo") return SeCurve::mimo(cfg);
  if (c.curve == "siso") return SeCurve::siso();
  if (c.curve == "siso-approx") return SeCurve::siso_approx();
  if (c.curve == "mimo-2x2-approx") return SeCurve::mimo_2x2_approx();
  throw UsageError("--curve must be auto, siso, siso-approx, mimo or "
                   "mimo-2x2-approx");
}

SectorModel make_sectors(const RunConfig& c) {
  return SectorModel::from_db(c.sectors, c.q_db);
}

void validate(const RunConfig& c) {
  if (!(c.eta > 2.0)) throw UsageError("--eta must exceed 2");
  if (c.sectors < 1) throw UsageError("--sectors must be >= 1");
  if (!(c.q_db >= 0.0)) throw UsageError("--q-db must be >= 0");
  if (c.nt < 1 || c.nt > 8 || c.nr < 1 || c.nr > 8) {
    throw UsageError("--nt and --nr must be in [1, 8]");
  }
  if (!(c.shift > 0.0)) throw UsageError("--shift must be positive");
  if (c.geometries < 1 || c.fading < 1 || c.mixture < 1 || c.pilot < 1 ||
      c.mc_geometries < 0 || c.truncate < 0 || c.workers < 1) {
    throw UsageError("simulation counts must be positive");
  }
  if (!(c.density > 0.0) || !(c.sigma_db >= 0.0) || !(c.radius >= 0.0)) {
    throw UsageError("--density must be positive, --sigma-db and --radius "
                     "nonnegative");
  }
}

SimConfig sim_config(const RunConfig& c, int n_geometries) {
  SimConfig s;
  s.density = c.density;
  s.region_radius = c.radius;
  if (c.lattice_rings > 0) s.lattice_rings = c.lattice_rings;
  s.lattice_target_count = c.lattice_count;
  s.shadow_sigma_db = c.sigma_db;
  s.seed = c.seed;
  s.n_geometries = n_geometries;
  s.n_fading = c.fading;
  s.n_mixture = c.mixture;
  s.truncate_interferers = c.truncate;
  s.far_field_compensation = !c.no_far_field;
  s.workers = c.workers;
  return s;
}

Scenario scenario_of(const RunConfig& c, double eta) {
  Scenario sc;
  if (c.geometry == "ppp") {
    sc.geometry = GeometryKind::Ppp;
  } else if (c.geometry == "lattice") {
    sc.geometry = GeometryKind::Lattice;
  } else {
    throw UsageError("--geometry must be ppp or lattice");
  }
  sc.eta = eta;
  sc.sectors = make_sectors(c);
  sc.mimo = MimoConfig(c.nt, c.nr);
  return sc;
}

// Writes CSV to the --out file (plus its manifest) or to `out`.
class CsvSink {
 public:
  CsvSink(const RunConfig& c, std::ostream& out) : config_(c), out_(out) {}

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) buffer_ << ',';
      buffer_ << cells[i];
    }
    buffer_ << '\n';
  }

  void finish() {
    if (config_.out.empty()) {
      out_ << buffer_.str();
      return;
    }
    std::ofstream f(config_.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + config_.out);
    f << buffer_.str();
    nlohmann::ordered_json m;
    m["tool"] = "ergse";
    m["version"] = ERGSE_VERSION;
    m["seed"] = config_.seed;
    m["config"] = to_json(config_);
    std::ofstream mf(config_.out + ".manifest.json", std::ios::binary);
    if (!mf) throw UsageError("cannot write manifest for " + config_.out);
    mf << m.dump(2) << '\n';
  }

 private:
  const RunConfig& config_;
  std::ostream& out_;
  std::ostringstream buffer_;
};

// Human-readable lines go to stdout only when stdout is not the CSV target.
std::ostream& summary_stream(const RunConfig& c, std::ostream& out,
                             std::ostream& err) {
  return c.out.empty() ? err : out;
}

int cmd_sir_cdf(const RunConfig& c, std::ostream& out, std::ostream&) {
  const PathModel model(c.eta, parse_mode(c.mode, BranchMode::FourBranch));
  const SectorModel sect = make_sectors(c);
  const std::vector<double> grid =
      parse_grid(!c.grid_set ? "0.001:100:200:log" : c.grid);
  CsvSink csv(c, out);
  csv.row({"theta", "F_rho"});
  for (double t : grid) {
    csv.row({fmt9(t), fmt9(sector_sir_cdf(model, sect, t / c.shift))});
  }
  csv.finish();
  return kOk;
}

int cmd_se_cdf(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const PathModel model(c.eta, parse_mode(c.mode, BranchMode::FourBranch));
  const SectorModel sect = make_sectors(c);
  const SeCurve curve = make_curve(c);
  const std::vector<double> grid =
      parse_grid(!c.grid_set ? "0.01:10:200:log" : c.grid);

  std::vector<double> mc;
  bool starved = false;
  if (c.mc_geometries > 0) {
    Quantity q = Quantity::CAnalytic;
    if (c.mc_quantity == "exact") {
      q = sect.sectors() > 1 ? Quantity::CAnalytic : Quantity::CExact;
    } else if (c.mc_quantity != "analytic") {
      throw UsageError("--mc-quantity must be exact or analytic");
    }
    const DistributionEstimate d = estimate_distribution(
        q, scenario_of(c, c.eta), sim_config(c, c.mc_geometries));
    mc = d.samples;
    starved = d.starved;
    std::sort(mc.begin(), mc.end());
  }

  CsvSink csv(c, out);
  csv.row({"gamma", "F_C", "F_C_mc", "mc_stderr"});
  for (double g : grid) {
    double f_mc = kNaN;
    double se = kNaN;
    if (!mc.empty()) {
      const double n = static_cast<double>(mc.size());
      f_mc = static_cast<double>(std::upper_bound(mc.begin(), mc.end(), g) -
                                 mc.begin()) /
             n;
      se = std::sqrt(f_mc * (1.0 - f_mc) / n);
    }
    csv.row({fmt9(g), fmt9(se_cdf(model, sect, curve, g)), fmt9(f_mc),
             fmt9(se)});
  }
  csv.finish();
  if (starved) {
    summary_stream(c, out, err) << "monte-carlo budget exhausted\n";
    return kBudget;
  }
  return kOk;
}

int cmd_coverage(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const PathModel model(c.eta, parse_mode(c.mode, BranchMode::FourBranch));
  const SectorModel sect = make_sectors(c);
  const SeCurve curve = make_curve(c);
  const std::vector<double> grid =
      parse_grid(!c.grid_set ? "0.001:0.15:30:log" : c.grid);
  for (double xi : grid) {
    if (!(xi > 0.0 && xi < 1.0)) throw UsageError("coverage grid must lie in (0, 1)");
  }
  CsvSink csv(c, out);
  csv.row({"xi", "gamma_approx", "gamma_exact"});
  for (double xi : grid) {
    const double approx = xi <= model.a_delta()
                              ? coverage_quantile(model, curve.receive_antennas(), xi)
                              : kNaN;
    csv.row({fmt9(xi), fmt9(approx),
             fmt9(coverage_quantile_numeric(model, sect, curve, xi))});
  }
  csv.finish();
  std::ostream& s = summary_stream(c, out, err);
  s << "gamma at 99% coverage: approx "
    << fmt4(coverage_quantile(model, curve.receive_antennas(), 0.01))
    << ", exact " << fmt4(coverage_quantile_numeric(model, sect, curve, 0.01))
    << '\n';
  if (c.eta == 4.0) {
    s << "instantaneous-SIR 99% coverage: " << fmt4(inst_sir_coverage_se_eta4(0.01))
      << '\n';
  }
  return kOk;
}

int cmd_mean_se(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const SectorModel sect = make_sectors(c);
  const SeCurve curve = make_curve(c);
  const BranchMode mode = parse_mode(c.mode, BranchMode::ThreeBranch);
  const bool siso = curve.kind() == CurveKind::SisoExact;
  CsvSink csv(c, out);
  csv.row({"eta", "C_bar", "C_bar_ub", "C_bar_exact", "ci99"});
  std::ostream& s = summary_stream(c, out, err);
  bool starved = false;
  for (double eta : eta_values(c)) {
    const PathModel model(eta, mode);
    const double cbar = mean_se(model, sect, curve, mode);
    const double ub = siso && sect.sectors() == 1 ? mean_se_cub(model) : kNaN;
    double exact = kNaN;
    double ci = kNaN;
    if (c.mc_geometries > 0 && sect.sectors() == 1) {
      const EstimateWithError e = mean_c_exact(
          scenario_of(c, eta), sim_config(c, c.mc_geometries), c.pilot);
      exact = e.value;
      ci = e.ci99();
      starved = starved || e.starved ||
                (c.max_stderr > 0.0 && e.std_error > c.max_stderr);
    }
    csv.row({fmt9(eta), fmt9(cbar), fmt9(ub), fmt9(exact), fmt9(ci)});
    s << "eta " << eta << ": C_bar " << fmt4(cbar);
    if (sect.sectors() > 1) s << " per sector, " << fmt4(cbar * sect.sectors()) << " per site";
    if (!std::isnan(ub)) s << ", C_bar_ub " << fmt4(ub);
    if (!std::isnan(exact)) s << ", C_bar_exact " << fmt4(exact) << " +- " << fmt4(ci);
    s << '\n';
  }
  csv.finish();
  if (starved) {
    s << "monte-carlo budget exhausted\n";
    return kBudget;
  }
  return kOk;
}

int cmd_lognormal(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const SectorModel sect = make_sectors(c);
  const SeCurve curve = make_curve(c);
  const BranchMode mode = parse_mode(c.mode, BranchMode::ThreeBranch);
  CsvSink csv(c, out);
  csv.row({"eta", "mu", "sigma2"});
  std::ostream& s = summary_stream(c, out, err);
  for (double eta : eta_values(c)) {
    const LognormalFit fit =
        lognormal_fit(PathModel(eta, mode), sect, curve, mode);
    csv.row({fmt9(eta), fmt9(fit.mu), fmt9(fit.sigma2)});
    s << "eta " << eta << ": mu " << fmt4(fit.mu) << ", sigma2 "
      << fmt4(fit.sigma2) << '\n';
  }
  csv.finish();
  return kOk;
}

int cmd_table_sstar(RunConfig c, std::ostream& out, std::ostream& err) {
  if (c.eta_range.empty()) c.eta_range = "3.5:4.2:8";
  CsvSink csv(c, out);
  csv.row({"eta", "delta", "s_star"});
  std::ostream& s = summary_stream(c, out, err);
  for (double eta : eta_values(c)) {
    if (!(eta > 2.0)) throw UsageError("eta values must exceed 2");
    const double d = 2.0 / eta;
    const double ss = solve_s_star(d);
    csv.row({fmt9(eta), fmt9(d), fmt9(ss)});
    s << "eta " << eta << "  delta " << fmt4(d) << "  s* " << fmt4(ss) << '\n';
  }
  csv.finish();
  return kOk;
}

int cmd_table_mimo(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const PathModel model(c.eta, BranchMode::ThreeBranch);
  CsvSink csv(c, out);
  csv.row({"n_t", "n_r", "C_bar"});
  std::ostream& s = summary_stream(c, out, err);
  for (int nt = 1; nt <= c.nt; ++nt) {
    for (int nr = 1; nr <= c.nr; ++nr) {
      const double v = mean_se_general(MimoConfig(nt, nr), model);
      csv.row({std::to_string(nt), std::to_string(nr), fmt9(v)});
      s << fmt4(v) << (nr == c.nr ? '\n' : ' ');
    }
  }
  csv.finish();
  return kOk;
}

int cmd_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Quantity q;
  if (c.quantity == "rho") {
    q = Quantity::Rho;
  } else if (c.quantity == "c") {
    q = Quantity::CAnalytic;
  } else if (c.quantity == "exact") {
    q = Quantity::CExact;
  } else if (c.quantity == "ub") {
    q = Quantity::CUb;
  } else {
    throw UsageError("--quantity must be rho, c, exact or ub");
  }
  const Scenario sc = scenario_of(c, c.eta);
  const DistributionEstimate d =
      estimate_distribution(q, sc, sim_config(c, c.geometries));
  CsvSink csv(c, out);
  csv.row({"index", "value", "std_error"});
  for (std::size_t i = 0; i < d.samples.size(); ++i) {
    csv.row({std::to_string(i), fmt9(d.samples[i]), fmt9(d.std_errors[i])});
  }
  csv.finish();
  std::ostream& s = summary_stream(c, out, err);
  s << "mean " << fmt4(d.mean.value) << " +- " << fmt4(d.mean.ci99())
    << " (99%, " << d.samples.size() << " geometries)\n";
  const PathModel model(c.eta, parse_mode(c.mode, BranchMode::FourBranch));
  if (q == Quantity::Rho) {
    s << "KS vs analytic: "
      << fmt4(ks_distance(d.samples, [&](double t) {
           return sector_sir_cdf(model, sc.sectors, t / c.shift);
         }))
      << '\n';
  } else if (q == Quantity::CAnalytic) {
    const SeCurve curve = SeCurve::mimo(sc.mimo);
    s << "KS vs analytic: "
      << fmt4(ks_distance(d.samples, [&](double g) {
           const double r = curve.inverse(g);
           return sector_sir_cdf(model, sc.sectors, r / c.shift);
         }))
      << '\n';
  }
  const bool over_cap = c.max_stderr > 0.0 && d.mean.std_error > c.max_stderr;
  if (d.starved || over_cap) {
    s << "monte-carlo budget exhausted\n";
    return kBudget;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig c;
  c.workers = default_workers();

  CLI::App app{"Spectral efficiency distributions for Poisson cellular "
               "networks",
               "ergse"};
  app.set_version_flag("--version", std::string(ERGSE_VERSION));
  app.set_config("--config", "", "key=value file; flags override it");
  app.require_subcommand(1);

  app.add_option("--eta", c.eta, "path-loss exponent")->capture_default_str();
  app.add_option("--eta-range", c.eta_range, "min:max:points");
  app.add_option("--sectors", c.sectors, "sectors per site")->capture_default_str();
  app.add_option("--q-db", c.q_db, "front-to-back ratio, dB")->capture_default_str();
  app.add_option("--nt", c.nt, "transmit antennas")->capture_default_str();
  app.add_option("--nr", c.nr, "receive antennas")->capture_default_str();
  CLI::Option* grid_opt =
      app.add_option("--grid", c.grid, "min:max:points[:lin|log]");
  app.add_option("--mode", c.mode, "CDF branch family: four or three");
  app.add_option("--curve", c.curve,
                 "auto, siso, siso-approx, mimo, mimo-2x2-approx")
      ->capture_default_str();
  app.add_option("--shift", c.shift, "divide theta by this factor")
      ->capture_default_str();
  app.add_option("--geometry", c.geometry, "ppp or lattice")->capture_default_str();
  app.add_option("--quantity", c.quantity, "rho, c, exact or ub")
      ->capture_default_str();
  app.add_option("--density", c.density, "sites per km^2")->capture_default_str();
  app.add_option("--radius", c.radius, "disk radius in km, 0 = 1000 sites")
      ->capture_default_str();
  app.add_option("--lattice-count", c.lattice_count, "lattice sites kept")
      ->capture_default_str();
  app.add_option("--lattice-rings", c.lattice_rings,
                 "hexagonal rings instead of a site count");
  app.add_option("--sigma-db", c.sigma_db, "shadowing deviation, dB")
      ->capture_default_str();
  app.add_option("--seed", c.seed, "master seed")->capture_default_str();
  app.add_option("--geometries", c.geometries, "geometries for simulate")
      ->capture_default_str();
  app.add_option("--fading", c.fading, "outer fading samples per geometry")
      ->capture_default_str();
  app.add_option("--mixture", c.mixture, "mixture pool size")
      ->capture_default_str();
  app.add_option("--truncate", c.truncate, "interferers with fading, 0 = all")
      ->capture_default_str();
  app.add_option("--pilot", c.pilot, "geometries for the C(rho) part of "
                                     "the exact mean")
      ->capture_default_str();
  app.add_option("--mc-geometries", c.mc_geometries,
                 "Monte-Carlo geometries for se-cdf and mean-se, 0 = off")
      ->capture_default_str();
  app.add_option("--mc-quantity", c.mc_quantity, "exact or analytic")
      ->capture_default_str();
  app.add_option("--max-stderr", c.max_stderr,
                 "fail with exit 4 above this standard error, 0 = off");
  app.add_flag("--no-far-field", c.no_far_field,
               "do not add the mean interference beyond the PPP disk");
  app.add_option("--workers", c.workers, "worker threads (ERGSE_WORKERS)");
  app.add_option("--out", c.out, "CSV path; a manifest is written next to it");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  struct Command {
    const char* name;
    const char* help;
    std::function<int(const RunConfig&, std::ostream&, std::ostream&)> fn;
  };
  const std::vector<Command> commands = {
      {"sir-cdf", "local-average SIR CDF", cmd_sir_cdf},
      {"se-cdf", "spectral-efficiency CDF", cmd_se_cdf},
      {"coverage", "spectral efficiency at a coverage level", cmd_coverage},
      {"mean-se", "spatially averaged spectral efficiency", cmd_mean_se},
      {"lognormal", "lognormal fit of C", cmd_lognormal},
      {"table-sstar", "s* over a range of eta", cmd_table_sstar},
      {"table-mimo", "average over antenna counts", cmd_table_mimo},
      {"simulate", "Monte-Carlo samples over geometries", cmd_simulate},
  };
  for (const auto& cmd : commands) {
    app.add_subcommand(cmd.name, cmd.help)->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  c.grid_set = grid_opt->count() > 0;
  try {
    validate(c);
    for (const auto& cmd : commands) {
      if (app.got_subcommand(cmd.name)) {
        c.command = cmd.name;
        return cmd.fn(c, out, err);
      }
    }
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const ToleranceError& e) {
    err << "tolerance not met: " << e.what() << " (estimate "
        << e.estimate() << ", error bound " << e.error_bound() << ")\n";
    return kTolerance;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kTolerance;
  } catch (const GeometryError& e) {
    err << "simulation failure: " << e.what() << '\n';
    return kTolerance;
  }
}

}  // namespace ergse::cli
