#pragma once

// Least-squares line fits used for scaling exponents and decay rates.

#include <vector>

namespace ctcost {

struct LinearFit {
  double slope;
  double intercept;
  double r_squared;
};

/// Ordinary least squares y = slope x + intercept. Needs two distinct x values.
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Fit of log y against log x; slope is the power-law exponent. Requires x, y > 0.
LinearFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

/// Fit of log y against x; slope is minus the decay rate. Requires y > 0.
LinearFit fit_exponential(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ctcost
