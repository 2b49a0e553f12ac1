#include "ctcost/fit.hpp"

#include <cmath>

#include "ctcost/errors.hpp"

namespace ctcost {
namespace {

std::vector<double> logs(const std::vector<double>& v, const char* what) {
  std::vector<double> out;
  out.reserve(v.size());
  for (double x : v) {
    if (!(x > 0.0)) throw InvalidInput(std::string(what) + ": logarithmic fit needs positive values");
    out.push_back(std::log(x));
  }
  return out;
}

}  // namespace

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidInput("fit_line: need at least two (x, y) pairs");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw InvalidInput("fit_line: x values are all equal");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (slope * x[i] + intercept);
    ss_res += r * r;
  }
  const double r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return {slope, intercept, r2};
}

LinearFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  return fit_line(logs(x, "fit_power_law"), logs(y, "fit_power_law"));
}

LinearFit fit_exponential(const std::vector<double>& x, const std::vector<double>& y) {
  return fit_line(x, logs(y, "fit_exponential"));
}

}  // namespace ctcost
