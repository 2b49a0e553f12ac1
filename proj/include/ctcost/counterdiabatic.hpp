#pragma once

// Transitionless and selected driving fields, their costs, and the exigency.

#include <vector>

#include "ctcost/levels.hpp"
#include "ctcost/operator.hpp"
#include "ctcost/propagation.hpp"
#include "ctcost/schedule.hpp"

namespace ctcost {

struct CostSample {
  double t;
  double value;  // instantaneous integrand, nu included
};

struct CostReport {
  double total = 0.0;
  int n = 1;
  double nu = 1.0;
  std::vector<CostSample> samples;
};

/// Trapezoidal rule over the sample times.
double trapezoid(const std::vector<CostSample>& samples);

/// i hbar sum_{m != j} P_m dH P_j / (E_j - E_m), evaluated sector by sector.
HermitianOperator cd_full(const Schedule& s, double t);

/// ||cd_full(s, t)|| without assembling the matrix.
double cd_full_norm(const Schedule& s, double t);

/// t -> cd_full(s, t), for use as an extra field during propagation.
FieldFn transitionless_field(const Schedule& s);

/// i hbar [dP_j/dt, P_j] for group j of eigendecompose(H0(t)).
HermitianOperator cd_selected(const Schedule& s, double t, std::size_t level);

/// nu * integral of ||H_t||^n over time_grid(s, cfg).
CostReport cost_transitionless(const Schedule& s, int n, double nu, const IntegratorConfig& cfg);

/// nu * sum_j p_j integral of ||H_W,j(t)||^n, with j followed by LevelTracker.
/// Throws InvalidInput when `initial` has coherences above 1e-8 between levels at t0.
CostReport cost_selected(const Schedule& s, const QuantumState& initial, int n, double nu,
                         const IntegratorConfig& cfg);

/// ||[dH, rho]||. Pure states use rho = |psi><psi| without forming the outer product first.
double exigency_rate(const Matrix& dH, const QuantumState& state);

/// integral of ||[dH0/dt, rho(t)]|| over the trajectory times, which must span [t0, t1].
CostReport exigency(const Schedule& s, const Trajectory& trajectory);

/// rho(t) = sum_j p_j P_j(t) on time_grid(s, cfg), p_j fixed at t0 and levels tracked by
/// LevelTracker. A pure initial state in a single non-degenerate level stays pure.
Trajectory adiabatic_trajectory(const Schedule& s, const QuantumState& initial, const IntegratorConfig& cfg);

struct DeviationSample {
  double dt;
  double deviation;  // ||rho(t0 + dt) - rho(t0)||
};

/// Short-time deviation under H0 alone. Each dt is integrated with round(dt / h) RK4 steps,
/// h = (t1 - t0) / cfg.steps; fewer than 10 steps is rejected.
std::vector<DeviationSample> friction_power_expansion(const Schedule& s, const QuantumState& initial,
                                                      const std::vector<double>& dt_list,
                                                      const IntegratorConfig& cfg);

}  // namespace ctcost
