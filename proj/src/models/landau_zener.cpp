#include "ctcost/models/landau_zener.hpp"

#include <cmath>

#include "ctcost/errors.hpp"

namespace ctcost {
namespace {

Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix sigma_y() {
  Matrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace

Schedule lz_model(double delta, const Ramp& ramp) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw InvalidInput("lz_model: delta must be positive");
  const Matrix sx = sigma_x();
  const Matrix sz = sigma_z();
  return Schedule(
      2, ramp.t0(), ramp.t1(), [=](double t) -> Matrix { return ramp.value(t) * sz + delta * sx; },
      [=](double t) -> Matrix { return ramp.rate(t) * sz; });
}

HermitianOperator lz_cd_analytic(double delta, const Ramp& ramp, double t) {
  const double g = ramp.value(t);
  const double coeff = -hbar * ramp.rate(t) * delta / (2.0 * (delta * delta + g * g));
  return HermitianOperator(coeff * sigma_y());
}

}  // namespace ctcost
