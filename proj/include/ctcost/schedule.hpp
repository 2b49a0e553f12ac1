#pragma once

// Time-parameterised Hamiltonians and the fixed integration grid.

#include <functional>
#include <vector>

#include "ctcost/operator.hpp"

namespace ctcost {

/// H0(t) on [t0, t1] with its time derivative and optional conserved-sector
/// labels (one integer per basis state). H0(t) must be block diagonal in the labels.
class Schedule {
 public:
  using MatrixFn = std::function<Matrix(double)>;

  /// An empty `derivative` selects the central finite difference with h = 1e-6 (t1 - t0).
  /// Throws InvalidInput for t0 >= t1, dim < 1, bad label count or a non-Hermitian H0(t0).
  Schedule(Index dim, double t0, double t1, MatrixFn hamiltonian, MatrixFn derivative = {},
           std::vector<int> sector_labels = {});

  Index dim() const noexcept { return dim_; }
  double t0() const noexcept { return t0_; }
  double t1() const noexcept { return t1_; }
  double duration() const noexcept { return t1_ - t0_; }
  bool has_analytic_derivative() const noexcept { return static_cast<bool>(derivative_); }

  /// Checked accessors.
  HermitianOperator hamiltonian_at(double t) const;
  HermitianOperator derivative_at(double t) const;

  /// Raw matrices, skipping the Hermiticity check; for inner loops.
  Matrix hamiltonian_matrix(double t) const;
  Matrix derivative_matrix(double t) const;

  /// Label per basis state; all zero when the schedule has a single sector.
  const std::vector<int>& sector_labels() const noexcept { return labels_; }
  /// Basis indices of each distinct label, ordered by label value.
  const std::vector<std::vector<Index>>& sectors() const noexcept { return sectors_; }

  /// Same Hamiltonian on the sub-interval [a, b] of [t0, t1].
  Schedule restricted(double a, double b) const;

 private:
  Index dim_;
  double t0_;
  double t1_;
  MatrixFn hamiltonian_;
  MatrixFn derivative_;
  std::vector<int> labels_;
  std::vector<std::vector<Index>> sectors_;
};

/// [H(t+h) - H(t-h)] / 2h with h = 1e-6 (t1 - t0).
Matrix finite_difference_derivative(const Schedule& s, double t);

enum class IntegrationMethod { rk4 };

struct IntegratorConfig {
  std::size_t steps = 4000;
  IntegrationMethod method = IntegrationMethod::rk4;
  bool renormalize = true;
};

/// Throws InvalidInput unless steps >= 100.
void validate(const IntegratorConfig& cfg);

/// steps + 1 equally spaced times; the last is exactly t1.
std::vector<double> time_grid(const Schedule& s, const IntegratorConfig& cfg);
std::vector<double> time_grid(double t0, double t1, const IntegratorConfig& cfg);

}  // namespace ctcost
