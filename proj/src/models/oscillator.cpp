#include "ctcost/models/oscillator.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "ctcost/errors.hpp"

namespace ctcost {
namespace {

Matrix lowering(int n_max) {
  Matrix a = Matrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

void check(double mass, double omega_ref, int n_max) {
  if (n_max < 20) throw InvalidInput("ho_model: n_max must be at least 20");
  if (!(mass > 0.0)) throw InvalidInput("ho_model: mass must be positive");
  if (!(omega_ref > 0.0)) throw InvalidInput("ho_model: frequency must be positive");
}

}  // namespace

Matrix ho_position(double mass, double omega_ref, int n_max) {
  check(mass, omega_ref, n_max);
  const Matrix a = lowering(n_max);
  return std::sqrt(hbar / (2.0 * mass * omega_ref)) * (a + a.adjoint());
}

Matrix ho_momentum(double mass, double omega_ref, int n_max) {
  check(mass, omega_ref, n_max);
  const Matrix a = lowering(n_max);
  return Complex(0.0, std::sqrt(hbar * mass * omega_ref / 2.0)) * (a.adjoint() - a);
}

Schedule ho_model(double mass, const Ramp& omega, int n_max) {
  const double w0 = omega.value(omega.t0());
  const Matrix x = ho_position(mass, w0, n_max);
  const Matrix p = ho_momentum(mass, w0, n_max);
  // p is imaginary; p * p is real, so the whole schedule stays real
  auto kinetic = std::make_shared<const Matrix>((p * p / (2.0 * mass)).real().cast<Complex>());
  auto x2 = std::make_shared<const Matrix>(x * x);
  std::vector<int> labels(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) labels[static_cast<std::size_t>(n)] = n % 2;
  return Schedule(
      n_max + 1, omega.t0(), omega.t1(),
      [=](double t) -> Matrix {
        const double w = omega.value(t);
        return *kinetic + (0.5 * mass * w * w) * *x2;
      },
      [=](double t) -> Matrix { return (mass * omega.value(t) * omega.rate(t)) * *x2; }, std::move(labels));
}

HermitianOperator ho_cd_analytic(double mass, const Ramp& omega, int n_max, double t) {
  const double w0 = omega.value(omega.t0());
  const Matrix x = ho_position(mass, w0, n_max);
  const Matrix p = ho_momentum(mass, w0, n_max);
  const double c = -omega.rate(t) / (4.0 * omega.value(t));
  return HermitianOperator::hermitian_part(c * (x * p + p * x));
}

double ho_exigency_rate_analytic(const Ramp& omega, double t) { return hbar * std::abs(omega.rate(t)); }

double ho_exigency_analytic(const Ramp& omega) {
  return hbar * std::abs(omega.value(omega.t1()) - omega.value(omega.t0()));
}

}  // namespace ctcost
