#pragma once

#include <random>

#include "ctcost/operator.hpp"

namespace test {

// Deterministic random Hermitian matrix with entries of order one.
inline ctcost::Matrix random_hermitian(ctcost::Index n, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> d;
  ctcost::Matrix m(n, n);
  for (ctcost::Index i = 0; i < n; ++i) {
    for (ctcost::Index j = 0; j < n; ++j) m(i, j) = ctcost::Complex(d(gen), d(gen));
  }
  return 0.5 * (m + m.adjoint());
}

inline ctcost::Matrix random_unitary(ctcost::Index n, unsigned seed) {
  return ctcost::eigendecompose(random_hermitian(n, seed)).eigenvectors();
}

inline ctcost::Vector random_state(ctcost::Index n, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> d;
  ctcost::Vector v(n);
  for (ctcost::Index i = 0; i < n; ++i) v(i) = ctcost::Complex(d(gen), d(gen));
  return v.normalized();
}

}  // namespace test
