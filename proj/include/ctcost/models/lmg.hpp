#pragma once

// Lipkin-Meshkov-Glick model in the maximal-spin sector and its Holstein-Primakoff limit.

#include "ctcost/models/ramp.hpp"
#include "ctcost/operator.hpp"
#include "ctcost/schedule.hpp"

namespace ctcost {

/// Collective spin matrices for S = N/2 in the basis m = S, S-1, ..., -S.
struct SpinOperators {
  Matrix sx, sy, sz;
};
SpinOperators collective_spin(int N);

/// H = -(2 delta / N)(Sx^2 + gamma Sy^2) - 2 g(t) Sz, dH/dt = -2 g'(t) Sz.
/// Sector label = (S - m) mod 2, which H conserves.
class LmgModel {
 public:
  /// Requires N >= 2 and delta > 0.
  LmgModel(int N, double gamma, double delta, Ramp ramp);

  int N() const noexcept { return N_; }
  double gamma() const noexcept { return gamma_; }
  double delta() const noexcept { return delta_; }
  const Ramp& ramp() const noexcept { return ramp_; }
  const Schedule& schedule() const noexcept { return schedule_; }
  const SpinOperators& spin() const noexcept { return spin_; }

 private:
  int N_;
  double gamma_;
  double delta_;
  Ramp ramp_;
  SpinOperators spin_;
  Schedule schedule_;
};

LmgModel lmg_model(int N, double gamma, double delta, const Ramp& ramp);

/// Lowest eigenvector of the sector containing m = S, normalised with a non-negative
/// amplitude on m = S.
Vector lmg_ground_state(const LmgModel& model, double t);

struct LmgExigency {
  double value;
  bool generic;  // true when the state was mixed and the commutator norm was used instead
};

/// 2 sqrt(2) |g'| sqrt(Var Sz) for pure states; mixed states fall back to ||[dH/dt, rho]||.
LmgExigency lmg_exigency(const LmgModel& model, double t, const QuantumState& state);

struct HpExigency {
  double value;       // NaN exactly at g_tilde = 1
  double variance;    // HP variance of the relevant spin component
  bool near_critical; // |g_tilde - 1| < 1e-3
};

/// g_tilde > 1: 2|g'| sinh(a), tanh a = 1/(2 g_tilde - 1).
/// 0 < g_tilde < 1: 2|g'| sqrt(g_tilde sinh^2 a + N (1 - g_tilde^2) e^a / 2), tanh a = g_tilde^2/(2 - g_tilde^2).
/// Throws InvalidInput for g_tilde <= 0.
HpExigency lmg_hp_exigency(double g_tilde, double g_dot, int N);

}  // namespace ctcost
