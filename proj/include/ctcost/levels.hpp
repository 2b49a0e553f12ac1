#pragma once

// Sector-resolved spectra and sorted-index adiabatic level tracking.

#include <vector>

#include "ctcost/operator.hpp"
#include "ctcost/schedule.hpp"

namespace ctcost {

/// Spectrum of H restricted to one conserved sector. Eigenvectors live in the sector basis.
struct SectorSpectrum {
  std::vector<Index> basis;  // indices into the full basis
  SpectralDecomposition decomp;
};

/// One decomposition per sector of `s`. The degeneracy tolerance is 1e-9 times the spread of
/// the full spectrum, shared by all sectors.
std::vector<SectorSpectrum> sector_spectra(const Schedule& s, double t);

/// Same decomposition for an explicit Hamiltonian matrix and sector layout.
std::vector<SectorSpectrum> sector_spectra(const Matrix& h, const std::vector<std::vector<Index>>& sectors);

/// Eigenvectors of group j of a sector embedded in the full space (dim x multiplicity).
Matrix embedded_group_vectors(const SectorSpectrum& sector, std::size_t j, Index full_dim);

/// Levels identified by (sector, sorted group index) and followed along a time grid.
/// advance() throws LevelCrossing when a sector changes its group count or a group's
/// subspace overlap with its predecessor drops below one half.
class LevelTracker {
 public:
  struct Level {
    std::size_t sector;
    std::size_t group;
  };

  LevelTracker(const Schedule& s, double t);

  void advance(double t);

  /// Restrict the continuity check to the given levels. Group counts are still checked
  /// everywhere; unwatched levels keep their sorted-index identity without an overlap test.
  void watch_only(const std::vector<std::size_t>& levels);

  double time() const noexcept { return t_; }
  const std::vector<SectorSpectrum>& spectra() const noexcept { return spectra_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::size_t level_count() const noexcept { return levels_.size(); }
  double energy(std::size_t level) const;
  Index multiplicity(std::size_t level) const;
  /// Full-space orthonormal basis of a tracked level.
  Matrix vectors(std::size_t level) const;

 private:
  const Schedule* s_;
  double t_;
  std::vector<SectorSpectrum> spectra_;
  std::vector<Level> levels_;
  std::vector<std::vector<bool>> watched_;  // [sector][group]
};

/// Tr[rho P_level] for every tracked level, clamped at zero.
std::vector<double> tracked_populations(const QuantumState& state, const LevelTracker& tracker);

/// ||rho - sum_level P rho P|| over the tracked levels.
double tracked_coherence(const QuantumState& state, const LevelTracker& tracker);

}  // namespace ctcost
