#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ctcost/errors.hpp"
#include "ctcost/experiments.hpp"

using namespace ctcost;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ctcost_test_" + name);
  fs::remove_all(p);
  return p;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(CTCOST_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string csv_columns(const std::string& path) {
  std::ifstream is(path);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#') return line;
  }
  return {};
}

}  // namespace

TEST_CASE("number formatting and list parsing") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
  const auto v = parse_number_list("0, 0.5,inf");
  REQUIRE(v.size() == 3);
  CHECK(std::isinf(v[2]));
  CHECK_THROWS_AS(parse_number_list("1,x"), InvalidInput);
  CHECK_THROWS_AS(parse_number_list("1.5e"), InvalidInput);
  CHECK(parse_int_list("4,6,8") == std::vector<int>{4, 6, 8});
  CHECK_THROWS_AS(parse_int_list("4.5"), InvalidInput);
}

TEST_CASE("configuration validation") {
  ExperimentConfig c;
  c.experiment = "nope";
  CHECK_THROWS_AS(validate(c), InvalidInput);
  c.experiment = "ising-ratio";
  c.sizes = {5};
  CHECK_THROWS_AS(validate(c), InvalidInput);
  c.sizes = {4};
  c.betas = {-1.0};
  CHECK_THROWS_AS(validate(c), InvalidInput);
  c.betas = {0.0, INFINITY};
  CHECK_NOTHROW(validate(c));
  c.steps = 10;
  CHECK_THROWS_AS(validate(c), InvalidInput);
  ExperimentConfig h;
  h.experiment = "ho-exigency";
  h.betas = {1.0};
  CHECK_THROWS_AS(validate(h), InvalidInput);
  h.betas.clear();
  h.duration = -1.0;
  CHECK_THROWS_AS(validate(h), InvalidInput);
  CHECK(experiment_names().size() == 7);
}

TEST_CASE("csv output is documented and reproducible") {
  const fs::path dir = scratch("repro");
  ExperimentConfig c;
  c.experiment = "lz-exigency";
  c.out_dir = dir.string();
  c.steps = 200;
  const ExperimentResult r1 = run(c);
  REQUIRE(r1.files.size() == 2);
  const std::string first = slurp(r1.files[0]);
  CHECK(first.rfind(std::string("# ") + library_version, 0) == 0);
  CHECK(first.find("# steps=200") != std::string::npos);
  CHECK(csv_columns(r1.files[0]) == "tau,dCt1,dC0_pg1,dC0_pg075");
  const ExperimentResult r2 = run(c);
  CHECK(slurp(r2.files[0]) == first);
  CHECK(r1.number("pg075_below_pg1") == 1.0);
  CHECK_THROWS_AS(r1.value("missing"), InvalidInput);
  fs::remove_all(dir);
}

TEST_CASE("documented column layouts") {
  const fs::path dir = scratch("columns");
  ExperimentConfig c;
  c.out_dir = dir.string();
  c.steps = 100;

  c.experiment = "ising-ratio";
  c.sizes = {4, 6};
  c.betas = {0.0, 1.0};
  CHECK(csv_columns(run(c).files[0]) == "beta,ratio_L4,ratio_L6");

  c.experiment = "lmg-exigency";
  c.sizes = {20, 40};
  c.betas.clear();
  const ExperimentResult lmg = run(c);
  CHECK(csv_columns(lmg.files[0]) == "tau,dC0_N20,dC0_N40,dC0_hp");
  CHECK(csv_columns(lmg.files[1]) == "tau,d2C0_N20,d2C0_N40");

  c.experiment = "ising-cost";
  c.sizes = {2};
  c.betas = {INFINITY, 0.0};
  c.norm_exponent = 2;
  CHECK(csv_columns(run(c).files[0]) == "tau,dCt2,dCW2_binf,dCW2_b0,dC0_binf,dC0_b0");
  fs::remove_all(dir);
}

TEST_CASE("command line exit codes and precedence") {
  const fs::path dir = scratch("cli");
  fs::create_directories(dir);
  CHECK(cli("") == 2);
  CHECK(cli("unknown-experiment") == 2);
  CHECK(cli("ising-ratio --sizes 3") == 2);
  CHECK(cli("ho-exigency --steps abc") == 2);
  CHECK(cli("--version") == 0);

  const fs::path cfg = dir / "cfg.json";
  std::ofstream(cfg) << R"({"steps": 150, "sizes": [4], "beta-list": [0, "inf"]})";
  CHECK(cli("ising-ratio --config " + cfg.string() + " --steps 120 --out " + dir.string()) == 0);
  const std::string text = slurp((dir / "ising-ratio.csv").string());
  // the flag wins over the file
  CHECK(text.find("# steps=120") != std::string::npos);
  CHECK(text.find("ratio_L4") != std::string::npos);

  std::ofstream(dir / "bad.json") << R"({"stepz": 10})";
  CHECK(cli("ho-exigency --config " + (dir / "bad.json").string()) == 2);
  fs::remove_all(dir);
}
