#pragma once

// Reproducible sweeps that write CSV tables and a key=value summary.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctcost {

inline constexpr const char* library_version = "ctcost 1.0.0";

/// Known experiment names, in documentation order.
const std::vector<std::string>& experiment_names();

struct ExperimentConfig {
  std::string experiment;
  std::string out_dir = ".";
  std::optional<std::size_t> steps;      // grid steps; per unit duration for lz-benefit
  std::optional<double> duration;        // ramp duration in units of hbar / energy scale
  std::vector<double> betas;             // empty selects the experiment default
  std::vector<int> sizes;                // L for Ising, N for LMG
  std::vector<double> durations;         // lz-cost-scaling and lz-benefit sweeps
  std::optional<int> norm_exponent;      // ising-cost only
};

/// Throws InvalidInput on an unknown experiment or out-of-range values.
void validate(const ExperimentConfig& config);

struct ExperimentResult {
  std::vector<std::string> files;  // CSV files then the summary file
  std::vector<std::pair<std::string, std::string>> summary;

  /// Summary value for `key`; throws InvalidInput when absent.
  const std::string& value(const std::string& key) const;
  double number(const std::string& key) const;
};

/// Validates, runs, and writes <out>/<experiment>*.csv and <out>/<experiment>_summary.txt.
/// Sweep points run on a bounded worker pool; output order follows the configuration.
ExperimentResult run(const ExperimentConfig& config);

/// Parses "a,b,c"; "inf" is accepted for beta lists. Throws InvalidInput.
std::vector<double> parse_number_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

/// Shortest round-trip style formatting used in CSV cells and summaries: %.15g, nan, inf.
std::string format_number(double x);

}  // namespace ctcost
