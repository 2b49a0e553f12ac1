#pragma once

// Dense complex operators, quantum states and grouped spectral decompositions.

#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace ctcost {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Reduced Planck constant. Every formula carries it explicitly.
inline constexpr double hbar = 1.0;

/// Sentinel for zero temperature in thermal_state.
inline constexpr double infinite_beta = std::numeric_limits<double>::infinity();

/// Dense Hermitian matrix. Construction checks finiteness and
/// ||A - A^dagger||_max <= 1e-12 * max|A_ij|.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m);

  /// (m + m^dagger) / 2 without the Hermiticity check; entries must be finite.
  static HermitianOperator hermitian_part(const Matrix& m);
  static HermitianOperator zero(Index dim);
  static HermitianOperator identity(Index dim);

  const Matrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

  friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
  friend HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b);
  friend HermitianOperator operator*(double s, const HermitianOperator& a);

 private:
  struct Trusted {};
  HermitianOperator(Matrix m, Trusted) : m_(std::move(m)) {}

  Matrix m_;
};

/// sqrt(Tr[A^dagger A]). Throws InvalidInput on non-finite entries.
double frobenius_norm(const Matrix& a);
double frobenius_norm(const HermitianOperator& a);

/// AB - BA. Throws InvalidInput when the shapes differ.
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix commutator(const HermitianOperator& a, const HermitianOperator& b);

/// Pure state vector or density matrix.
class QuantumState {
 public:
  enum class Kind { pure, density };

  /// Validates ||psi|| = 1 within 1e-12.
  static QuantumState pure(Vector psi);
  /// Validates Hermiticity, unit trace within 1e-12 and min eigenvalue >= -1e-10.
  static QuantumState density(Matrix rho);

  /// Skip validation; for states produced by the integrator or other library code.
  static QuantumState unchecked_pure(Vector psi);
  static QuantumState unchecked_density(Matrix rho);

  Kind kind() const noexcept { return kind_; }
  bool is_pure() const noexcept { return kind_ == Kind::pure; }
  Index dim() const noexcept;

  /// The state vector; throws InvalidInput for density states.
  const Vector& vector() const;
  /// rho, materialised as |psi><psi| for pure states.
  Matrix density_matrix() const;

 private:
  QuantumState(Kind kind, Vector psi, Matrix rho)
      : kind_(kind), psi_(std::move(psi)), rho_(std::move(rho)) {}

  Kind kind_;
  Vector psi_;
  Matrix rho_;
};

struct EnergyGroup {
  double energy;  // mean of the member eigenvalues
  Index offset;   // first column in the eigenvector matrix
  Index multiplicity;
};

/// Eigenvalues grouped by transitive chaining of |E_a - E_b| <= degeneracy_tol.
/// Groups are ordered by increasing energy; projectors are built on demand.
class SpectralDecomposition {
 public:
  SpectralDecomposition(RealVector eigenvalues, Matrix eigenvectors, double degeneracy_tol);

  Index dim() const noexcept { return eigenvalues_.size(); }
  const RealVector& eigenvalues() const noexcept { return eigenvalues_; }
  const Matrix& eigenvectors() const noexcept { return eigenvectors_; }
  double degeneracy_tol() const noexcept { return tol_; }

  const std::vector<EnergyGroup>& groups() const noexcept { return groups_; }
  std::size_t group_count() const noexcept { return groups_.size(); }
  /// Group index owning eigenvector column `column`.
  std::size_t group_of(Index column) const { return group_of_[static_cast<std::size_t>(column)]; }

  /// Orthonormal columns spanning group j.
  Matrix group_vectors(std::size_t j) const;
  HermitianOperator projector(std::size_t j) const;

 private:
  RealVector eigenvalues_;
  Matrix eigenvectors_;
  double tol_;
  std::vector<EnergyGroup> groups_;
  std::vector<std::size_t> group_of_;
};

/// 1e-9 * (E_max - E_min), with an absolute floor for flat spectra.
double default_degeneracy_tol(const RealVector& eigenvalues);

/// Throws NumericalError when the eigensolver fails to converge.
SpectralDecomposition eigendecompose(const HermitianOperator& h,
                                     std::optional<double> degeneracy_tol = std::nullopt);
SpectralDecomposition eigendecompose(const Matrix& hermitian,
                                     std::optional<double> degeneracy_tol = std::nullopt);

/// exp(-beta H) / Z evaluated spectrally with a ground-energy shift.
/// beta = infinite_beta gives the normalised projector onto the ground group.
QuantumState thermal_state(const HermitianOperator& h, double beta);

struct Moments {
  double mean;
  double variance;  // clamped at zero
};

Moments expectation_and_variance(const QuantumState& state, const HermitianOperator& a);

/// Tr[rho P_j] for every group of `decomp`, negative round-off clamped to zero.
std::vector<double> group_populations(const QuantumState& state, const SpectralDecomposition& decomp);

/// ||rho - sum_j P_j rho P_j||, the weight of coherences between groups.
double interlevel_coherence(const Matrix& rho, const SpectralDecomposition& decomp);

}  // namespace ctcost
