#include "ctcost/models/lmg.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "ctcost/counterdiabatic.hpp"
#include "ctcost/errors.hpp"

namespace ctcost {
namespace {

std::vector<int> parity_labels(int N) {
  std::vector<int> labels(static_cast<std::size_t>(N + 1));
  for (int i = 0; i <= N; ++i) labels[static_cast<std::size_t>(i)] = i % 2;
  return labels;
}

Schedule build_schedule(int N, double gamma, double delta, const Ramp& ramp, const SpinOperators& s) {
  auto coupling =
      std::make_shared<const Matrix>((-2.0 * delta / N) * (s.sx * s.sx + gamma * (s.sy * s.sy)).real().cast<Complex>());
  auto sz = std::make_shared<const Matrix>(s.sz);
  return Schedule(
      N + 1, ramp.t0(), ramp.t1(), [=](double t) -> Matrix { return *coupling - (2.0 * ramp.value(t)) * *sz; },
      [=](double t) -> Matrix { return (-2.0 * ramp.rate(t)) * *sz; }, parity_labels(N));
}

}  // namespace

SpinOperators collective_spin(int N) {
  if (N < 2) throw InvalidInput("collective_spin: N must be at least 2");
  const double S = 0.5 * N;
  const Index d = N + 1;
  Matrix sp = Matrix::Zero(d, d);
  Matrix sz = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    const double m = S - static_cast<double>(i);
    sz(i, i) = m;
    // S+ |m> = sqrt(S(S+1) - m(m+1)) |m+1>, and m+1 sits at index i-1
    if (i > 0) sp(i - 1, i) = std::sqrt(S * (S + 1.0) - m * (m + 1.0));
  }
  const Matrix sm = sp.adjoint();
  return {0.5 * (sp + sm), Complex(0.0, -0.5) * (sp - sm), sz};
}

LmgModel::LmgModel(int N, double gamma, double delta, Ramp ramp)
    : N_(N),
      gamma_(gamma),
      delta_(delta),
      ramp_(ramp),
      spin_(collective_spin(N)),
      schedule_(build_schedule(N, gamma, delta, ramp, spin_)) {
  if (!(delta > 0.0)) throw InvalidInput("lmg_model: delta must be positive");
}

LmgModel lmg_model(int N, double gamma, double delta, const Ramp& ramp) { return LmgModel(N, gamma, delta, ramp); }

Vector lmg_ground_state(const LmgModel& model, double t) {
  const Matrix h = model.schedule().hamiltonian_matrix(t);
  const Index d = model.N() + 1;
  std::vector<Index> idx;
  for (Index i = 0; i < d; i += 2) idx.push_back(i);
  // the sector is tridiagonal in its own basis
  const Index n = static_cast<Index>(idx.size());
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max<Index>(n - 1, 0));
  for (Index i = 0; i < n; ++i) {
    diag(i) = h(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i)]).real();
    if (i + 1 < n) sub(i) = h(idx[static_cast<std::size_t>(i + 1)], idx[static_cast<std::size_t>(i)]).real();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NumericalError("lmg_ground_state: eigensolver did not converge");
  Eigen::VectorXd g = solver.eigenvectors().col(0);
  if (g(0) < 0.0) g = -g;
  Vector psi = Vector::Zero(d);
  for (Index i = 0; i < n; ++i) psi(idx[static_cast<std::size_t>(i)]) = g(i);
  return psi;
}

LmgExigency lmg_exigency(const LmgModel& model, double t, const QuantumState& state) {
  if (state.dim() != model.N() + 1) throw InvalidInput("lmg_exigency: dimension mismatch");
  if (!state.is_pure()) {
    return {exigency_rate(model.schedule().derivative_matrix(t), state), true};
  }
  const HermitianOperator sz(model.spin().sz);
  const Moments mom = expectation_and_variance(state, sz);
  return {2.0 * std::sqrt(2.0) * std::abs(model.ramp().rate(t)) * std::sqrt(mom.variance), false};
}

HpExigency lmg_hp_exigency(double g_tilde, double g_dot, int N) {
  if (!(g_tilde > 0.0) || !std::isfinite(g_tilde)) throw InvalidInput("lmg_hp_exigency: g_tilde must be positive");
  if (N < 2) throw InvalidInput("lmg_hp_exigency: N must be at least 2");
  const bool near = std::abs(g_tilde - 1.0) < 1e-3;
  if (g_tilde == 1.0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, true};
  }
  double variance;
  if (g_tilde > 1.0) {
    const double a = std::atanh(1.0 / (2.0 * g_tilde - 1.0));
    variance = 0.5 * std::sinh(a) * std::sinh(a);
  } else {
    const double a = std::atanh(g_tilde * g_tilde / (2.0 - g_tilde * g_tilde));
    variance = 0.5 * g_tilde * std::sinh(a) * std::sinh(a) + 0.25 * N * (1.0 - g_tilde * g_tilde) * std::exp(a);
  }
  return {2.0 * std::sqrt(2.0) * std::abs(g_dot) * std::sqrt(variance), variance, near};
}

}  // namespace ctcost
