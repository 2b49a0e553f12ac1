#pragma once

// Two-time energy-measurement work statistics.

#include <string>
#include <vector>

#include "ctcost/counterdiabatic.hpp"
#include "ctcost/operator.hpp"
#include "ctcost/schedule.hpp"

namespace ctcost {

/// probs(m, n) = ||P_m(t1) U |n(t0)>||^2: rows are energy groups of H0(t1), columns are
/// eigenvectors of H0(t0).
struct TransitionMatrix {
  Eigen::MatrixXd probs;
  SpectralDecomposition initial;
  SpectralDecomposition final;
};

/// Throws InvalidInput unless ||U^dagger U - I||_max <= 1e-8.
TransitionMatrix transition_matrix(const Schedule& s, const Matrix& U);

struct WorkOutcome {
  double work;
  double probability;
};

struct WorkDistribution {
  std::vector<WorkOutcome> outcomes;  // sorted by work
  double duration = 0.0;

  double mean() const;
  /// <exp(-beta W)>
  double exp_average(double beta) const;
};

/// Outcomes E_m(t1) - E_n(t0) with weight Tr[P_m(t1) U P_n(t0) rho P_n(t0) U^dagger], using
/// group projectors at both times. Values within 1e-10 are merged.
WorkDistribution work_distribution(const Schedule& s, const QuantumState& initial, const Matrix& U);

/// sum_n [E_n'(t1) - E_n(t0)] p_n with n -> n' the sector-wise sorted-index continuation.
double adiabatic_work(const Schedule& s, const QuantumState& initial, const IntegratorConfig& cfg);

/// <W> - <W_ad>.
double inner_friction(const Schedule& s, const QuantumState& initial, const Matrix& U,
                      const IntegratorConfig& cfg);

struct DrivingBenefit {
  double benefit;     // friction - total cost; positive means driving pays off
  bool units_differ;  // true for n != 1, where the comparison depends on the set-up
};

/// `cost.total` already carries nu, so it is not applied again.
DrivingBenefit driving_benefit(double friction, const CostReport& cost);

}  // namespace ctcost
