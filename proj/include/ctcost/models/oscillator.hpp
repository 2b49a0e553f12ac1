#pragma once

// Harmonic oscillator with a time-dependent frequency in a truncated Fock basis.

#include "ctcost/models/ramp.hpp"
#include "ctcost/operator.hpp"
#include "ctcost/schedule.hpp"

namespace ctcost {

/// x = sqrt(hbar / 2 m w) (a + a^dag) on Fock states 0..n_max.
Matrix ho_position(double mass, double omega_ref, int n_max);
/// p = i sqrt(hbar m w / 2) (a^dag - a) on Fock states 0..n_max.
Matrix ho_momentum(double mass, double omega_ref, int n_max);

/// H = p^2 / 2m + m w(t)^2 x^2 / 2 with x, p fixed at w(t0) and squared as truncated matrices.
/// dH/dt = m w w' x^2. Sector label = Fock parity. Requires n_max >= 20, mass > 0, w > 0.
Schedule ho_model(double mass, const Ramp& omega, int n_max);

/// -(w' / 4w)(x p + p x) in the same truncated basis.
HermitianOperator ho_cd_analytic(double mass, const Ramp& omega, int n_max, double t);

/// Ground-state exigency rate hbar |w'(t)|.
double ho_exigency_rate_analytic(const Ramp& omega, double t);
/// Integrated ground-state exigency hbar |w(t1) - w(t0)| for a monotone ramp.
double ho_exigency_analytic(const Ramp& omega);

}  // namespace ctcost
