#pragma once

// Periodic transverse-field Ising chain in the spin basis.

#include "ctcost/models/ramp.hpp"
#include "ctcost/operator.hpp"
#include "ctcost/schedule.hpp"

namespace ctcost {

/// H = -J sum_<ij> sigma_x^i sigma_x^j + g(t) sum_i sigma_z^i over distinct nearest-neighbour
/// bonds of a ring (L = 2 has a single bond). Site 0 is the most significant bit of the basis
/// index; bit value 0 is spin up. Sector label = number of down spins mod 2.
/// Requires even L in [2, 10].
Schedule ising_dense(int L, double J, const Ramp& ramp);

/// sum_i sigma_z^i, diagonal in the spin basis.
Matrix ising_field_operator(int L);
/// sum over bonds of sigma_x^i sigma_x^j.
Matrix ising_bond_operator(int L);

/// Closed-form L = 2 transitionless field, coupling |up up> and |down down> only:
/// element (up up, down down) = -i hbar g' J / (J^2 + 4 g^2).
HermitianOperator ising_two_spin_cd_analytic(double J, const Ramp& ramp, double t);

}  // namespace ctcost
