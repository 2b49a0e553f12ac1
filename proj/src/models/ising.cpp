#include "ctcost/models/ising.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include "ctcost/errors.hpp"

namespace ctcost {
namespace {

void check_size(int L) {
  if (L < 2 || L > 10 || L % 2 != 0) {
    throw InvalidInput("ising_dense: L must be even and within [2, 10], got " + std::to_string(L));
  }
}

std::vector<std::pair<int, int>> bonds(int L) {
  if (L == 2) return {{0, 1}};
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < L; ++i) out.emplace_back(i, (i + 1) % L);
  return out;
}

unsigned site_mask(int L, int site) { return 1u << (L - 1 - site); }

}  // namespace

Matrix ising_field_operator(int L) {
  check_size(L);
  const Index d = Index{1} << L;
  Matrix m = Matrix::Zero(d, d);
  for (Index s = 0; s < d; ++s) {
    const int down = std::popcount(static_cast<unsigned>(s));
    m(s, s) = static_cast<double>(L - 2 * down);
  }
  return m;
}

Matrix ising_bond_operator(int L) {
  check_size(L);
  const Index d = Index{1} << L;
  Matrix m = Matrix::Zero(d, d);
  for (const auto& [i, j] : bonds(L)) {
    const unsigned flip = site_mask(L, i) | site_mask(L, j);
    for (Index s = 0; s < d; ++s) m(static_cast<Index>(static_cast<unsigned>(s) ^ flip), s) += 1.0;
  }
  return m;
}

Schedule ising_dense(int L, double J, const Ramp& ramp) {
  check_size(L);
  if (!std::isfinite(J)) throw InvalidInput("ising_dense: J must be finite");
  auto field = std::make_shared<const Matrix>(ising_field_operator(L));
  auto coupling = std::make_shared<const Matrix>((-J) * ising_bond_operator(L));
  const Index d = Index{1} << L;
  std::vector<int> labels(static_cast<std::size_t>(d));
  for (Index s = 0; s < d; ++s) labels[static_cast<std::size_t>(s)] = std::popcount(static_cast<unsigned>(s)) % 2;
  return Schedule(
      d, ramp.t0(), ramp.t1(), [=](double t) -> Matrix { return *coupling + ramp.value(t) * *field; },
      [=](double t) -> Matrix { return ramp.rate(t) * *field; }, std::move(labels));
}

HermitianOperator ising_two_spin_cd_analytic(double J, const Ramp& ramp, double t) {
  const double g = ramp.value(t);
  const double c = hbar * ramp.rate(t) * J / (J * J + 4.0 * g * g);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 3) = Complex(0.0, -c);
  m(3, 0) = Complex(0.0, c);
  return HermitianOperator(m);
}

}  // namespace ctcost
