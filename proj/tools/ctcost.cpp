#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctcost/errors.hpp"
#include "ctcost/experiments.hpp"

namespace {

using nlohmann::json;

std::vector<double> json_numbers(const json& j, const char* key) {
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (v.is_string()) {
      const auto parsed = ctcost::parse_number_list(v.get<std::string>());
      out.insert(out.end(), parsed.begin(), parsed.end());
    } else {
      out.push_back(v.get<double>());
    }
  }
  return out;
}

// Config keys mirror the long flag names.
void apply_json(const std::string& path, ctcost::ExperimentConfig& c) {
  std::ifstream is(path);
  if (!is) throw ctcost::InvalidInput("cannot open config " + path);
  json j;
  try {
    j = json::parse(is);
  } catch (const json::exception& e) {
    throw ctcost::InvalidInput(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ctcost::InvalidInput("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "out") {
        c.out_dir = value.get<std::string>();
      } else if (key == "steps") {
        const auto v = value.get<long long>();
        if (v < 0) throw ctcost::InvalidInput("steps must be non-negative");
        c.steps = static_cast<std::size_t>(v);
      } else if (key == "duration") {
        c.duration = value.get<double>();
      } else if (key == "beta-list") {
        c.betas = json_numbers(j, "beta-list");
      } else if (key == "sizes") {
        c.sizes = value.get<std::vector<int>>();
      } else if (key == "durations") {
        c.durations = json_numbers(j, "durations");
      } else if (key == "norm-exponent") {
        c.norm_exponent = value.get<int>();
      } else {
        throw ctcost::InvalidInput("config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ctcost::InvalidInput(std::string("config: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counterdiabatic driving cost experiments"};
  app.set_version_flag("--version", std::string(ctcost::library_version));

  std::string experiment;
  std::string config_path;
  std::string out_dir;
  long long steps = -1;
  double duration = 0.0;
  std::string betas;
  std::string sizes;
  std::string durations;
  int norm_exponent = 0;

  std::string names;
  for (const auto& n : ctcost::experiment_names()) names += (names.empty() ? "" : ", ") + n;
  app.add_option("experiment", experiment, "One of: " + names)->required();
  app.add_option("--config", config_path, "JSON file whose keys mirror the long flags");
  auto* out_opt = app.add_option("--out", out_dir, "Output directory (default .)");
  auto* steps_opt = app.add_option("--steps", steps, "Time-grid steps (per unit duration for lz-benefit)");
  auto* dur_opt = app.add_option("--duration", duration, "Ramp duration");
  auto* beta_opt = app.add_option("--beta-list", betas, "Comma-separated inverse temperatures; inf allowed");
  auto* size_opt = app.add_option("--sizes", sizes, "Comma-separated system sizes");
  auto* durs_opt = app.add_option("--durations", durations, "Comma-separated ramp durations");
  auto* n_opt = app.add_option("--norm-exponent", norm_exponent, "Cost norm exponent n (ising-cost)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ctcost::ExperimentConfig c;
    c.experiment = experiment;
    if (!config_path.empty()) apply_json(config_path, c);
    if (*out_opt) c.out_dir = out_dir;
    if (*steps_opt) {
      if (steps < 0) throw ctcost::InvalidInput("steps must be non-negative");
      c.steps = static_cast<std::size_t>(steps);
    }
    if (*dur_opt) c.duration = duration;
    if (*beta_opt) c.betas = ctcost::parse_number_list(betas);
    if (*size_opt) c.sizes = ctcost::parse_int_list(sizes);
    if (*durs_opt) c.durations = ctcost::parse_number_list(durations);
    if (*n_opt) c.norm_exponent = norm_exponent;

    const ctcost::ExperimentResult r = ctcost::run(c);
    for (const auto& [k, v] : r.summary) std::cout << k << "=" << v << "\n";
    for (const auto& f : r.files) std::cout << "wrote " << f << "\n";
    return 0;
  } catch (const ctcost::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ctcost::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
