#include "ctcost/operator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ctcost/errors.hpp"
#include "spectral_field.hpp"

namespace ctcost {
namespace {

bool all_finite(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw InvalidInput(os.str());
  }
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix m) : m_(std::move(m)) {
  require_square(m_, "HermitianOperator");
  if (!all_finite(m_)) throw InvalidInput("HermitianOperator: non-finite entry");
  const double scale = m_.cwiseAbs().maxCoeff();
  const double defect = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-12 * scale) {
    std::ostringstream os;
    os << "HermitianOperator: matrix is not Hermitian (defect " << defect << ", scale " << scale << ")";
    throw InvalidInput(os.str());
  }
}

HermitianOperator HermitianOperator::hermitian_part(const Matrix& m) {
  require_square(m, "hermitian_part");
  if (!all_finite(m)) throw InvalidInput("hermitian_part: non-finite entry");
  Matrix h = 0.5 * (m + m.adjoint());
  return HermitianOperator(std::move(h), Trusted{});
}

HermitianOperator HermitianOperator::zero(Index dim) {
  return HermitianOperator(Matrix::Zero(dim, dim), Trusted{});
}

HermitianOperator HermitianOperator::identity(Index dim) {
  return HermitianOperator(Matrix::Identity(dim, dim), Trusted{});
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw InvalidInput("operator+: dimension mismatch");
  return HermitianOperator(a.m_ + b.m_, HermitianOperator::Trusted{});
}

HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw InvalidInput("operator-: dimension mismatch");
  return HermitianOperator(a.m_ - b.m_, HermitianOperator::Trusted{});
}

HermitianOperator operator*(double s, const HermitianOperator& a) {
  return HermitianOperator(s * a.m_, HermitianOperator::Trusted{});
}

double frobenius_norm(const Matrix& a) {
  if (!all_finite(a)) throw InvalidInput("frobenius_norm: non-finite entry");
  return a.norm();
}

double frobenius_norm(const HermitianOperator& a) { return a.matrix().norm(); }

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw InvalidInput("commutator: dimension mismatch");
  }
  return a * b - b * a;
}

Matrix commutator(const HermitianOperator& a, const HermitianOperator& b) {
  return commutator(a.matrix(), b.matrix());
}

// --- QuantumState ---

QuantumState QuantumState::pure(Vector psi) {
  if (psi.size() == 0) throw InvalidInput("QuantumState::pure: empty vector");
  if (!psi.allFinite()) throw InvalidInput("QuantumState::pure: non-finite amplitude");
  if (std::abs(psi.norm() - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "QuantumState::pure: norm " << psi.norm() << " differs from 1";
    throw InvalidInput(os.str());
  }
  return QuantumState(Kind::pure, std::move(psi), Matrix());
}

QuantumState QuantumState::density(Matrix rho) {
  HermitianOperator h(rho);  // shape, finiteness and Hermiticity
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0)) > 1e-12) {
    std::ostringstream os;
    os << "QuantumState::density: trace " << tr << " differs from 1";
    throw InvalidInput(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("QuantumState::density: eigensolver failed");
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    std::ostringstream os;
    os << "QuantumState::density: negative eigenvalue " << solver.eigenvalues().minCoeff();
    throw InvalidInput(os.str());
  }
  return QuantumState(Kind::density, Vector(), std::move(rho));
}

QuantumState QuantumState::unchecked_pure(Vector psi) {
  return QuantumState(Kind::pure, std::move(psi), Matrix());
}

QuantumState QuantumState::unchecked_density(Matrix rho) {
  return QuantumState(Kind::density, Vector(), std::move(rho));
}

Index QuantumState::dim() const noexcept { return is_pure() ? psi_.size() : rho_.rows(); }

const Vector& QuantumState::vector() const {
  if (!is_pure()) throw InvalidInput("QuantumState::vector: state is a density matrix");
  return psi_;
}

Matrix QuantumState::density_matrix() const {
  if (is_pure()) return psi_ * psi_.adjoint();
  return rho_;
}

// --- spectral decomposition ---

double default_degeneracy_tol(const RealVector& eigenvalues) {
  if (eigenvalues.size() == 0) return 0.0;
  const double spread = eigenvalues.maxCoeff() - eigenvalues.minCoeff();
  const double scale = eigenvalues.cwiseAbs().maxCoeff();
  return std::max(1e-9 * spread, 1e-14 * std::max(scale, 1.0));
}

SpectralDecomposition::SpectralDecomposition(RealVector eigenvalues, Matrix eigenvectors,
                                             double degeneracy_tol)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)), tol_(degeneracy_tol) {
  const Index n = eigenvalues_.size();
  if (eigenvectors_.rows() != n || eigenvectors_.cols() != n) {
    throw InvalidInput("SpectralDecomposition: eigenvector matrix shape mismatch");
  }
  for (Index i = 1; i < n; ++i) {
    if (eigenvalues_(i) < eigenvalues_(i - 1)) throw InvalidInput("SpectralDecomposition: eigenvalues not sorted");
  }
  group_of_.resize(static_cast<std::size_t>(n));
  Index start = 0;
  while (start < n) {
    Index end = start + 1;
    // chaining: each member is within tol of its predecessor
    while (end < n && eigenvalues_(end) - eigenvalues_(end - 1) <= tol_) ++end;
    const double mean = eigenvalues_.segment(start, end - start).mean();
    for (Index i = start; i < end; ++i) group_of_[static_cast<std::size_t>(i)] = groups_.size();
    groups_.push_back({mean, start, end - start});
    start = end;
  }
}

Matrix SpectralDecomposition::group_vectors(std::size_t j) const {
  const EnergyGroup& g = groups_.at(j);
  return eigenvectors_.middleCols(g.offset, g.multiplicity);
}

HermitianOperator SpectralDecomposition::projector(std::size_t j) const {
  const Matrix v = group_vectors(j);
  return HermitianOperator::hermitian_part(v * v.adjoint());
}

namespace detail {

std::pair<RealVector, Matrix> hermitian_eigensolve(const Matrix& h) {
  require_square(h, "eigendecompose");
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
    // real symmetric input: the real solver is several times faster
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.real());
    if (solver.info() != Eigen::Success) {
      std::ostringstream os;
      os << "eigendecompose: real eigensolver did not converge (dim " << h.rows() << ", ||H|| " << h.norm()
         << ")";
      throw NumericalError(os.str());
    }
    return {solver.eigenvalues(), solver.eigenvectors().cast<Complex>()};
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eigendecompose: eigensolver did not converge (dim " << h.rows() << ", ||H|| " << h.norm() << ")";
    throw NumericalError(os.str());
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace detail

SpectralDecomposition eigendecompose(const Matrix& h, std::optional<double> degeneracy_tol) {
  auto [values, vectors] = detail::hermitian_eigensolve(h);
  const double tol = degeneracy_tol.value_or(default_degeneracy_tol(values));
  if (!(tol >= 0.0)) throw InvalidInput("eigendecompose: degeneracy tolerance must be non-negative");
  return SpectralDecomposition(std::move(values), std::move(vectors), tol);
}

SpectralDecomposition eigendecompose(const HermitianOperator& h, std::optional<double> degeneracy_tol) {
  return eigendecompose(h.matrix(), degeneracy_tol);
}

QuantumState thermal_state(const HermitianOperator& h, double beta) {
  if (std::isnan(beta) || beta < 0.0) throw InvalidInput("thermal_state: beta must be >= 0");
  const SpectralDecomposition decomp = eigendecompose(h);
  const Index n = decomp.dim();
  RealVector weights(n);
  if (std::isinf(beta)) {
    weights.setZero();
    const EnergyGroup& ground = decomp.groups().front();
    weights.segment(ground.offset, ground.multiplicity).setConstant(1.0);
  } else {
    const double e0 = decomp.eigenvalues()(0);
    for (Index i = 0; i < n; ++i) weights(i) = std::exp(-beta * (decomp.eigenvalues()(i) - e0));
  }
  weights /= weights.sum();
  const Matrix& v = decomp.eigenvectors();
  Matrix rho = v * weights.cast<Complex>().asDiagonal() * v.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  return QuantumState::unchecked_density(std::move(rho));
}

Moments expectation_and_variance(const QuantumState& state, const HermitianOperator& a) {
  if (state.dim() != a.dim()) throw InvalidInput("expectation_and_variance: dimension mismatch");
  double mean = 0.0;
  double second = 0.0;
  if (state.is_pure()) {
    const Vector av = a.matrix() * state.vector();
    mean = state.vector().dot(av).real();
    second = av.squaredNorm();
  } else {
    const Matrix rho = state.density_matrix();
    const Matrix ra = rho * a.matrix();
    mean = ra.trace().real();
    second = (ra * a.matrix()).trace().real();
  }
  double var = second - mean * mean;
  if (var < 0.0) var = 0.0;
  return {mean, var};
}

std::vector<double> group_populations(const QuantumState& state, const SpectralDecomposition& decomp) {
  if (state.dim() != decomp.dim()) throw InvalidInput("group_populations: dimension mismatch");
  std::vector<double> p(decomp.group_count(), 0.0);
  const Matrix& v = decomp.eigenvectors();
  RealVector diag(decomp.dim());
  if (state.is_pure()) {
    diag = (v.adjoint() * state.vector()).cwiseAbs2();
  } else {
    const Matrix rho = state.density_matrix();
    for (Index i = 0; i < decomp.dim(); ++i) diag(i) = v.col(i).dot(rho * v.col(i)).real();
  }
  for (Index i = 0; i < decomp.dim(); ++i) p[decomp.group_of(i)] += diag(i);
  for (double& x : p) x = std::max(x, 0.0);
  return p;
}

double interlevel_coherence(const Matrix& rho, const SpectralDecomposition& decomp) {
  Matrix r = decomp.eigenvectors().adjoint() * rho * decomp.eigenvectors();
  for (const EnergyGroup& g : decomp.groups()) {
    r.block(g.offset, g.offset, g.multiplicity, g.multiplicity).setZero();
  }
  return r.norm();
}

}  // namespace ctcost
