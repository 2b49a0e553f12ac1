#include "ctcost/levels.hpp"

#include <algorithm>
#include <sstream>

#include "ctcost/errors.hpp"
#include "spectral_field.hpp"

namespace ctcost {

std::vector<SectorSpectrum> sector_spectra(const Matrix& h, const std::vector<std::vector<Index>>& sectors) {
  std::vector<std::pair<RealVector, Matrix>> raw;
  raw.reserve(sectors.size());
  double lo = 0.0;
  double hi = 0.0;
  bool first = true;
  for (const auto& idx : sectors) {
    const Matrix block = (idx.size() == static_cast<std::size_t>(h.rows())) ? h : Matrix(h(idx, idx));
    raw.push_back(detail::hermitian_eigensolve(block));
    const RealVector& e = raw.back().first;
    lo = first ? e.minCoeff() : std::min(lo, e.minCoeff());
    hi = first ? e.maxCoeff() : std::max(hi, e.maxCoeff());
    first = false;
  }
  RealVector ends(2);
  ends << lo, hi;
  const double tol = default_degeneracy_tol(ends);
  std::vector<SectorSpectrum> out;
  out.reserve(sectors.size());
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    out.push_back({sectors[i], SpectralDecomposition(std::move(raw[i].first), std::move(raw[i].second), tol)});
  }
  return out;
}

std::vector<SectorSpectrum> sector_spectra(const Schedule& s, double t) {
  return sector_spectra(s.hamiltonian_matrix(t), s.sectors());
}

Matrix embedded_group_vectors(const SectorSpectrum& sector, std::size_t j, Index full_dim) {
  const Matrix local = sector.decomp.group_vectors(j);
  Matrix out = Matrix::Zero(full_dim, local.cols());
  for (std::size_t r = 0; r < sector.basis.size(); ++r) out.row(sector.basis[r]) = local.row(static_cast<Index>(r));
  return out;
}

LevelTracker::LevelTracker(const Schedule& s, double t) : s_(&s), t_(t), spectra_(sector_spectra(s, t)) {
  for (std::size_t sec = 0; sec < spectra_.size(); ++sec) {
    for (std::size_t g = 0; g < spectra_[sec].decomp.group_count(); ++g) levels_.push_back({sec, g});
    watched_.emplace_back(spectra_[sec].decomp.group_count(), true);
  }
}

void LevelTracker::watch_only(const std::vector<std::size_t>& levels) {
  for (auto& row : watched_) std::fill(row.begin(), row.end(), false);
  for (std::size_t l : levels) {
    const Level& lv = levels_.at(l);
    watched_[lv.sector][lv.group] = true;
  }
}

void LevelTracker::advance(double t) {
  std::vector<SectorSpectrum> next = sector_spectra(*s_, t);
  for (std::size_t sec = 0; sec < next.size(); ++sec) {
    const SpectralDecomposition& before = spectra_[sec].decomp;
    const SpectralDecomposition& after = next[sec].decomp;
    if (before.group_count() != after.group_count()) {
      std::ostringstream os;
      os << "sector " << sec << " changed from " << before.group_count() << " to " << after.group_count()
         << " energy groups between t=" << t_ << " and t=" << t;
      throw LevelCrossing(os.str());
    }
    for (std::size_t g = 0; g < after.group_count(); ++g) {
      if (!watched_[sec][g]) continue;
      if (before.groups()[g].multiplicity != after.groups()[g].multiplicity) {
        std::ostringstream os;
        os << "sector " << sec << " group " << g << " changed multiplicity at t=" << t;
        throw LevelCrossing(os.str());
      }
      const double overlap = (before.group_vectors(g).adjoint() * after.group_vectors(g)).squaredNorm() /
                             static_cast<double>(after.groups()[g].multiplicity);
      if (overlap < 0.5) {
        std::ostringstream os;
        os << "sector " << sec << " group " << g << " lost continuity between t=" << t_ << " and t=" << t
           << " (overlap " << overlap << ")";
        throw LevelCrossing(os.str());
      }
    }
  }
  spectra_ = std::move(next);
  t_ = t;
}

double LevelTracker::energy(std::size_t level) const {
  const Level& l = levels_.at(level);
  return spectra_[l.sector].decomp.groups()[l.group].energy;
}

Index LevelTracker::multiplicity(std::size_t level) const {
  const Level& l = levels_.at(level);
  return spectra_[l.sector].decomp.groups()[l.group].multiplicity;
}

Matrix LevelTracker::vectors(std::size_t level) const {
  const Level& l = levels_.at(level);
  return embedded_group_vectors(spectra_[l.sector], l.group, s_->dim());
}

std::vector<double> tracked_populations(const QuantumState& state, const LevelTracker& tracker) {
  std::vector<double> p(tracker.level_count());
  const Matrix rho = state.is_pure() ? Matrix() : state.density_matrix();
  for (std::size_t l = 0; l < p.size(); ++l) {
    const Matrix v = tracker.vectors(l);
    double value;
    if (state.is_pure()) {
      value = (v.adjoint() * state.vector()).squaredNorm();
    } else {
      value = (v.adjoint() * rho * v).trace().real();
    }
    p[l] = std::max(value, 0.0);
  }
  return p;
}

double tracked_coherence(const QuantumState& state, const LevelTracker& tracker) {
  const Matrix rho = state.density_matrix();
  Matrix diag = Matrix::Zero(rho.rows(), rho.cols());
  for (std::size_t l = 0; l < tracker.level_count(); ++l) {
    const Matrix v = tracker.vectors(l);
    diag += v * (v.adjoint() * rho * v) * v.adjoint();
  }
  return (rho - diag).norm();
}

}  // namespace ctcost
