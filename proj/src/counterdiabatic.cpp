#include "ctcost/counterdiabatic.hpp"

#include <cmath>
#include <sstream>

#include "ctcost/errors.hpp"
#include "spectral_field.hpp"

namespace ctcost {
namespace {

// Eigenbasis transitionless field of every sector.
std::vector<Matrix> sector_fields(const Matrix& dh, const std::vector<SectorSpectrum>& spectra) {
  std::vector<Matrix> out;
  out.reserve(spectra.size());
  const bool single = spectra.size() == 1;
  for (const SectorSpectrum& sec : spectra) {
    const Matrix& v = sec.decomp.eigenvectors();
    const Matrix local = single ? dh : Matrix(dh(sec.basis, sec.basis));
    const Matrix m = v.adjoint() * local * v;
    out.push_back(Complex(0.0, hbar) * detail::inverse_gap_weighted(sec.decomp, m));
  }
  return out;
}

void check_exponent(int n, double nu) {
  if (n < 1) throw InvalidInput("cost: norm exponent must be >= 1");
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw InvalidInput("cost: prefactor nu must be finite and >= 0");
}

void require_diagonal(const QuantumState& state, const LevelTracker& tracker, const char* where) {
  const double c = tracked_coherence(state, tracker);
  if (c > 1e-8) {
    std::ostringstream os;
    os << where << ": initial state has inter-level coherence " << c << " (must be diagonal at t0)";
    throw InvalidInput(os.str());
  }
}

}  // namespace

double trapezoid(const std::vector<CostSample>& samples) {
  double total = 0.0;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    total += 0.5 * (samples[k].t - samples[k - 1].t) * (samples[k].value + samples[k - 1].value);
  }
  return total;
}

HermitianOperator cd_full(const Schedule& s, double t) {
  const auto spectra = sector_spectra(s, t);
  const auto fields = sector_fields(s.derivative_matrix(t), spectra);
  Matrix full = Matrix::Zero(s.dim(), s.dim());
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    const Matrix& v = spectra[i].decomp.eigenvectors();
    const Matrix local = v * fields[i] * v.adjoint();
    if (spectra.size() == 1) {
      full = local;
    } else {
      full(spectra[i].basis, spectra[i].basis) = local;
    }
  }
  return HermitianOperator::hermitian_part(full);
}

double cd_full_norm(const Schedule& s, double t) {
  const auto spectra = sector_spectra(s, t);
  double sq = 0.0;
  for (const Matrix& x : sector_fields(s.derivative_matrix(t), spectra)) sq += x.squaredNorm();
  return std::sqrt(sq);
}

FieldFn transitionless_field(const Schedule& s) {
  return [s](double t) { return cd_full(s, t).matrix(); };
}

HermitianOperator cd_selected(const Schedule& s, double t, std::size_t level) {
  const SpectralDecomposition decomp = eigendecompose(s.hamiltonian_at(t));
  if (level >= decomp.group_count()) {
    std::ostringstream os;
    os << "cd_selected: level " << level << " out of range (" << decomp.group_count() << " groups)";
    throw InvalidInput(os.str());
  }
  const Matrix dp = projector_derivatives(s, t, decomp)[level];
  const Matrix p = decomp.projector(level).matrix();
  return HermitianOperator::hermitian_part(Complex(0.0, hbar) * (dp * p - p * dp));
}

CostReport cost_transitionless(const Schedule& s, int n, double nu, const IntegratorConfig& cfg) {
  check_exponent(n, nu);
  CostReport report;
  report.n = n;
  report.nu = nu;
  for (double t : time_grid(s, cfg)) report.samples.push_back({t, nu * std::pow(cd_full_norm(s, t), n)});
  report.total = trapezoid(report.samples);
  return report;
}

CostReport cost_selected(const Schedule& s, const QuantumState& initial, int n, double nu,
                         const IntegratorConfig& cfg) {
  check_exponent(n, nu);
  if (initial.dim() != s.dim()) throw InvalidInput("cost_selected: dimension mismatch");
  const std::vector<double> grid = time_grid(s, cfg);
  LevelTracker tracker(s, grid.front());
  require_diagonal(initial, tracker, "cost_selected");
  const std::vector<double> p = tracked_populations(initial, tracker);
  std::vector<std::size_t> populated;
  for (std::size_t l = 0; l < p.size(); ++l) {
    if (p[l] > 1e-12) populated.push_back(l);
  }
  tracker.watch_only(populated);

  CostReport report;
  report.n = n;
  report.nu = nu;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (k > 0) tracker.advance(grid[k]);
    const auto& spectra = tracker.spectra();
    const auto fields = sector_fields(s.derivative_matrix(grid[k]), spectra);
    double value = 0.0;
    for (std::size_t l = 0; l < tracker.level_count(); ++l) {
      if (p[l] == 0.0) continue;
      const auto& lv = tracker.levels()[l];
      const EnergyGroup& g = spectra[lv.sector].decomp.groups()[lv.group];
      // ||H_W,j||^2 = 2 sum over rows of j of the field, since diagonal blocks vanish
      const double sq = 2.0 * fields[lv.sector].middleRows(g.offset, g.multiplicity).squaredNorm();
      value += p[l] * std::pow(std::sqrt(sq), n);
    }
    report.samples.push_back({grid[k], nu * value});
  }
  report.total = trapezoid(report.samples);
  return report;
}

double exigency_rate(const Matrix& dH, const QuantumState& state) {
  if (dH.rows() != state.dim() || dH.cols() != state.dim()) throw InvalidInput("exigency_rate: dimension mismatch");
  if (state.is_pure()) {
    const Vector& psi = state.vector();
    const Vector u = dH * psi;
    const Matrix c = u * psi.adjoint() - psi * u.adjoint();
    return c.norm();
  }
  const Matrix rho = state.density_matrix();
  return (dH * rho - rho * dH).norm();
}

CostReport exigency(const Schedule& s, const Trajectory& trajectory) {
  if (trajectory.size() < 2) throw InvalidInput("exigency: trajectory needs at least two samples");
  const double slack = 1e-12 * s.duration();
  if (std::abs(trajectory.front().t - s.t0()) > slack || std::abs(trajectory.back().t - s.t1()) > slack) {
    throw InvalidInput("exigency: trajectory grid does not span the schedule interval");
  }
  CostReport report;
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    const TrajectoryPoint& pt = trajectory[k];
    if (k > 0 && !(pt.t > trajectory[k - 1].t)) throw InvalidInput("exigency: trajectory times must increase");
    if (pt.state.dim() != s.dim()) throw InvalidInput("exigency: state dimension mismatch");
    report.samples.push_back({pt.t, exigency_rate(s.derivative_matrix(pt.t), pt.state)});
  }
  report.total = trapezoid(report.samples);
  return report;
}

Trajectory adiabatic_trajectory(const Schedule& s, const QuantumState& initial, const IntegratorConfig& cfg) {
  if (initial.dim() != s.dim()) throw InvalidInput("adiabatic_trajectory: dimension mismatch");
  const std::vector<double> grid = time_grid(s, cfg);
  LevelTracker tracker(s, grid.front());
  require_diagonal(initial, tracker, "adiabatic_trajectory");
  const std::vector<double> p = tracked_populations(initial, tracker);
  std::vector<std::size_t> populated;
  for (std::size_t l = 0; l < p.size(); ++l) {
    if (p[l] > 1e-12) populated.push_back(l);
  }
  tracker.watch_only(populated);

  std::ptrdiff_t pure_level = -1;
  if (initial.is_pure()) {
    for (std::size_t l = 0; l < p.size(); ++l) {
      if (p[l] >= 1.0 - 1e-12 && tracker.multiplicity(l) == 1) pure_level = static_cast<std::ptrdiff_t>(l);
    }
  }

  Trajectory out;
  out.reserve(grid.size());
  Vector previous;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (k > 0) tracker.advance(grid[k]);
    if (pure_level >= 0) {
      Vector psi = tracker.vectors(static_cast<std::size_t>(pure_level)).col(0);
      // fix the phase against the previous sample (the initial state at t0)
      const Complex ov = (k == 0 ? initial.vector() : previous).dot(psi);
      if (std::abs(ov) > 0.0) psi *= std::conj(ov) / std::abs(ov);
      previous = psi;
      out.push_back({grid[k], QuantumState::unchecked_pure(std::move(psi))});
    } else {
      Matrix rho = Matrix::Zero(s.dim(), s.dim());
      for (std::size_t l = 0; l < p.size(); ++l) {
        if (p[l] == 0.0) continue;
        const Matrix v = tracker.vectors(l);
        rho += (p[l] / static_cast<double>(v.cols())) * (v * v.adjoint());
      }
      out.push_back({grid[k], QuantumState::unchecked_density(std::move(rho))});
    }
  }
  return out;
}

std::vector<DeviationSample> friction_power_expansion(const Schedule& s, const QuantumState& initial,
                                                      const std::vector<double>& dt_list,
                                                      const IntegratorConfig& cfg) {
  validate(cfg);
  if (initial.dim() != s.dim()) throw InvalidInput("friction_power_expansion: dimension mismatch");
  LevelTracker tracker(s, s.t0());
  require_diagonal(initial, tracker, "friction_power_expansion");
  const double h = s.duration() / static_cast<double>(cfg.steps);
  const Matrix rho0 = initial.density_matrix();
  std::vector<DeviationSample> out;
  for (double dt : dt_list) {
    if (!(dt > 0.0) || dt > s.duration()) throw InvalidInput("friction_power_expansion: dt outside (0, t1 - t0]");
    const double steps = std::round(dt / h);
    if (steps < 10.0) {
      std::ostringstream os;
      os << "friction_power_expansion: dt=" << dt << " spans fewer than 10 integrator steps (h=" << h << ")";
      throw InvalidInput(os.str());
    }
    const QuantumState final_state = integrate(s, initial, s.t0(), s.t0() + dt, static_cast<std::size_t>(steps),
                                               cfg.renormalize);
    out.push_back({dt, (final_state.density_matrix() - rho0).norm()});
  }
  return out;
}

}  // namespace ctcost
