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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ergse::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::filesystem::path scratch(const std::string& name) {
  const char* dir = std::getenv("ERGSE_TMPDIR");
  std::filesystem::path base = dir ? dir : std::filesystem::temp_directory_path();
  return base / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("table-sstar reproduces the tabulated values") {
  const Run r = run({"table-sstar", "--eta-range", "3.5:4.2:8"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == "eta,delta,s_star");
  const double want[] = {-0.672, -0.710, -0.747, -0.783, -0.819, -0.854, -0.888, -0.922};
  for (int i = 0; i < 8; ++i) {
    const std::string& row = rows[static_cast<std::size_t>(i) + 1];
    const double s = std::stod(row.substr(row.rfind(',') + 1));
    INFO(row);
    CHECK(std::abs(s - want[i]) <= 1e-3);
  }
}

TEST_CASE("mean-se prints the 2x2 average") {
  const Run r = run({"mean-se", "--eta", "4", "--nt", "2", "--nr", "2"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out)[0] == "eta,C_bar,C_bar_ub,C_bar_exact,ci99");
  CHECK(r.out.find("3.84") != std::string::npos);
  CHECK(r.err.find("C_bar 3.84") != std::string::npos);
}

TEST_CASE("headers") {
  CHECK(lines(run({"sir-cdf", "--grid", "0.1:10:5:log"}).out)[0] == "theta,F_rho");
  const Run se = run({"se-cdf", "--grid", "0.1:5:5"});
  CHECK(lines(se.out)[0] == "gamma,F_C,F_C_mc,mc_stderr");
  // Without simulation the Monte-Carlo columns are empty.
  CHECK(lines(se.out)[1].substr(lines(se.out)[1].size() - 2) == ",,");
  CHECK(lines(run({"lognormal", "--nt", "2", "--nr", "2"}).out)[0] == "eta,mu,sigma2");
  CHECK(lines(run({"coverage", "--grid", "0.01:0.1:3"}).out)[0] == "xi,gamma_approx,gamma_exact");
  CHECK(lines(run({"table-mimo", "--nt", "2", "--nr", "2"}).out).size() == 5);
}

TEST_CASE("sir-cdf values") {
  const Run r = run({"sir-cdf", "--eta", "4", "--grid", "0.5:1:2"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows[2] == "1,0.363380228");
  const Run shifted = run({"sir-cdf", "--eta", "4", "--grid", "1:2.188:2", "--shift", "2.188"});
  CHECK(lines(shifted.out)[2] == "2.188,0.363380228");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"sir-cdf", "--eta", "4", "--grid", ""}).code == 2);
  CHECK(run({"sir-cdf", "--grid", "1:0:10"}).code == 2);
  CHECK(run({"sir-cdf", "--grid", "0.1:1:1"}).code == 2);
  CHECK(run({"sir-cdf", "--grid", "0:1:10:log"}).code == 2);
  CHECK(run({"sir-cdf", "--grid", "a:1:10"}).code == 2);
  CHECK(run({"sir-cdf", "--grid", "0.1:1:10:cubic"}).code == 2);
  CHECK(run({"sir-cdf", "--eta", "2"}).code == 2);
  CHECK(run({"mean-se", "--nt", "9"}).code == 2);
  CHECK(run({"mean-se", "--mode", "five"}).code == 2);
  CHECK(run({"mean-se", "--curve", "cubic"}).code == 2);
  CHECK(run({"simulate", "--quantity", "snr"}).code == 2);
  CHECK(run({"simulate", "--geometry", "grid"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"mean-se", "--eta"}).code == 2);
  CHECK(run({"mean-se", "--no-such-flag"}).code == 2);
  CHECK(run({"coverage", "--grid", "0.5:2:3"}).code == 2);
  const Run r = run({"sir-cdf", "--grid", "1:0:10"});
  CHECK(r.err.find("usage error") != std::string::npos);
}

TEST_CASE("help and version exit 0") {
  const Run h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("sir-cdf") != std::string::npos);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("numerical failures exit 3") {
  CHECK(run({"mean-se", "--eta", "60"}).code == 3);
  CHECK(run({"mean-se", "--eta", "2.0000001"}).code == 3);
}

TEST_CASE("budget exhaustion exits 4") {
  const Run r = run({"simulate", "--quantity", "exact", "--geometries", "4", "--fading", "40",
                     "--mixture", "8", "--max-stderr", "1e-9", "--workers", "1"});
  CHECK(r.code == 4);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("simulate writes one row per geometry") {
  const Run r = run({"simulate", "--quantity", "rho", "--geometries", "50", "--workers", "2"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows[0] == "index,value,std_error");
  CHECK(rows.size() == 51);
  CHECK(r.err.find("KS vs analytic") != std::string::npos);
}

TEST_CASE("se-cdf with Monte-Carlo columns") {
  const Run r = run({"se-cdf", "--grid", "0.5:4:4", "--mc-geometries", "200",
                     "--mc-quantity", "analytic"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  // gamma, F_C, F_C_mc, mc_stderr all filled.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].find(",,") == std::string::npos);
  }
}

TEST_CASE("--out writes CSV and manifest; reruns are byte-identical") {
  const auto csv = scratch("ergse_cli_test.csv");
  const std::vector<std::string> args = {"simulate", "--quantity", "exact", "--geometries", "6",
                                         "--fading", "80", "--mixture", "16", "--seed", "42",
                                         "--out", csv.string()};
  std::vector<std::string> with_workers = args;
  with_workers.insert(with_workers.end(), {"--workers", "1"});
  REQUIRE(run(with_workers).code == 0);
  const std::string first = slurp(csv);
  with_workers.back() = "3";
  REQUIRE(run(with_workers).code == 0);
  CHECK(slurp(csv) == first);
  CHECK(first.rfind("index,value,std_error\n", 0) == 0);
  const auto manifest = nlohmann::json::parse(slurp(csv.string() + ".manifest.json"));
  CHECK(manifest["seed"] == 42);
  CHECK(manifest["version"] == ERGSE_VERSION);
  CHECK(manifest["config"]["command"] == "simulate");
  CHECK(manifest["config"]["fading"] == 80);
}

TEST_CASE("config file with flag override") {
  const auto cfg = scratch("ergse_cli_test.ini");
  {
    std::ofstream f(cfg);
    f << "eta=3.8\nnt=2\nnr=2\n";
  }
  const Run from_file = run({"mean-se", "--config", cfg.string()});
  REQUIRE(from_file.code == 0);
  CHECK(lines(from_file.out)[1].rfind("3.8,", 0) == 0);
  const Run overridden = run({"mean-se", "--config", cfg.string(), "--eta", "4"});
  REQUIRE(overridden.code == 0);
  CHECK(lines(overridden.out)[1].rfind("4,3.845", 0) == 0);
}

TEST_CASE("sectorized mean reports per sector and per site") {
  const Run r = run({"mean-se", "--eta", "3.8", "--sectors", "3", "--q-db", "20", "--mode", "four"});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("1.5326 per sector, 4.5979 per site") != std::string::npos);
}
