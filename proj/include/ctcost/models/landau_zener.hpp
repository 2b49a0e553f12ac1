#pragma once

#include "ctcost/models/ramp.hpp"
#include "ctcost/operator.hpp"
#include "ctcost/schedule.hpp"

namespace ctcost {

/// H = g(t) sigma_z + delta sigma_x on [ramp.t0, ramp.t1], dH/dt = g'(t) sigma_z.
/// Basis: index 0 = up, index 1 = down.
Schedule lz_model(double delta, const Ramp& ramp);

/// Closed-form transitionless field -hbar g' delta / (2 (delta^2 + g^2)) sigma_y.
HermitianOperator lz_cd_analytic(double delta, const Ramp& ramp, double t);

}  // namespace ctcost
