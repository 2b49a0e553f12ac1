#pragma once

// Fixed-step propagation of states and unitaries, and projector derivatives.

#include <functional>
#include <vector>

#include "ctcost/operator.hpp"
#include "ctcost/schedule.hpp"

namespace ctcost {

/// Additional Hermitian term added to H0(t) during propagation, e.g. a counterdiabatic field.
using FieldFn = std::function<Matrix(double)>;

struct TrajectoryPoint {
  double t;
  QuantumState state;
};
using Trajectory = std::vector<TrajectoryPoint>;

/// Called after every step (and once at the start with step = 0).
using StepObserver = std::function<void(std::size_t step, double t, const QuantumState& state)>;

/// RK4 over [a, b] in `steps` equal steps. Pure states follow i hbar dpsi/dt = H psi,
/// density matrices drho/dt = -(i/hbar)[H, rho]. Checks the extra field for Hermiticity at
/// every evaluation. Throws IntegrationDiverged on a non-finite state.
QuantumState integrate(const Schedule& s, const QuantumState& initial, double a, double b,
                       std::size_t steps, bool renormalize, const FieldFn& extra_field = {},
                       const StepObserver& observer = {});

/// Samples at every point of time_grid(s, cfg).
Trajectory evolve(const Schedule& s, const QuantumState& initial, const IntegratorConfig& cfg,
                  const FieldFn& extra_field = {});

/// Streaming form of evolve; returns the final state.
QuantumState evolve_observed(const Schedule& s, const QuantumState& initial, const IntegratorConfig& cfg,
                             const StepObserver& observer, const FieldFn& extra_field = {});

/// Time-ordered propagator over [t0, t1], integrated columnwise from the identity.
Matrix unitary(const Schedule& s, const IntegratorConfig& cfg, const FieldFn& extra_field = {});

/// dP_j/dt = sum_{m != j} (P_m dH P_j + P_j dH P_m) / (E_j - E_m) for every group of `decomp`.
/// Throws DegenerateCrossing when groups closer than 100 * degeneracy_tol are coupled by
/// more than 1e-8; uncoupled near-degenerate pairs contribute nothing.
std::vector<Matrix> projector_derivatives(const Schedule& s, double t, const SpectralDecomposition& decomp);

}  // namespace ctcost
