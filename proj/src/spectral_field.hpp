#pragma once

#include <utility>

#include "ctcost/operator.hpp"

namespace ctcost::detail {

/// Ascending eigenvalues and eigenvectors; real symmetric input takes the real solver.
std::pair<RealVector, Matrix> hermitian_eigensolve(const Matrix& h);

/// Eigenbasis matrix K_ab = M_ab / (E_b - E_a) over group energies, zero inside each group,
/// where M is the derivative in the eigenbasis of `d`. Applies the degenerate-crossing rule.
Matrix inverse_gap_weighted(const SpectralDecomposition& d, const Matrix& m);

}  // namespace ctcost::detail
