#include "ctcost/work.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ctcost/errors.hpp"
#include "ctcost/levels.hpp"

namespace ctcost {
namespace {

void require_unitary(const Matrix& u, Index dim) {
  if (u.rows() != dim || u.cols() != dim) throw InvalidInput("transition_matrix: U has wrong shape");
  const double defect = (u.adjoint() * u - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (!(defect <= 1e-8)) {
    std::ostringstream os;
    os << "transition_matrix: U is not unitary (defect " << defect << ")";
    throw InvalidInput(os.str());
  }
}

}  // namespace

TransitionMatrix transition_matrix(const Schedule& s, const Matrix& U) {
  require_unitary(U, s.dim());
  SpectralDecomposition initial = eigendecompose(s.hamiltonian_at(s.t0()));
  SpectralDecomposition final = eigendecompose(s.hamiltonian_at(s.t1()));
  const Eigen::MatrixXd amp = (final.eigenvectors().adjoint() * U * initial.eigenvectors()).cwiseAbs2();
  Eigen::MatrixXd probs = Eigen::MatrixXd::Zero(static_cast<Index>(final.group_count()), s.dim());
  for (std::size_t m = 0; m < final.group_count(); ++m) {
    const EnergyGroup& g = final.groups()[m];
    probs.row(static_cast<Index>(m)) = amp.middleRows(g.offset, g.multiplicity).colwise().sum();
  }
  return {std::move(probs), std::move(initial), std::move(final)};
}

double WorkDistribution::mean() const {
  double m = 0.0;
  for (const WorkOutcome& o : outcomes) m += o.work * o.probability;
  return m;
}

double WorkDistribution::exp_average(double beta) const {
  double m = 0.0;
  for (const WorkOutcome& o : outcomes) m += std::exp(-beta * o.work) * o.probability;
  return m;
}

WorkDistribution work_distribution(const Schedule& s, const QuantumState& initial, const Matrix& U) {
  if (initial.dim() != s.dim()) throw InvalidInput("work_distribution: dimension mismatch");
  require_unitary(U, s.dim());
  const SpectralDecomposition d0 = eigendecompose(s.hamiltonian_at(s.t0()));
  const SpectralDecomposition d1 = eigendecompose(s.hamiltonian_at(s.t1()));
  const Matrix w = d1.eigenvectors().adjoint() * U * d0.eigenvectors();
  const Matrix rho = d0.eigenvectors().adjoint() * initial.density_matrix() * d0.eigenvectors();

  std::vector<WorkOutcome> raw;
  for (const EnergyGroup& gn : d0.groups()) {
    const Matrix block = rho.block(gn.offset, gn.offset, gn.multiplicity, gn.multiplicity);
    if (block.trace().real() <= 0.0) continue;
    const Matrix wn = w.middleCols(gn.offset, gn.multiplicity);
    // diagonal of wn * block * wn^dagger in the final eigenbasis
    const Eigen::VectorXd diag = (wn * block).cwiseProduct(wn.conjugate()).rowwise().sum().real();
    for (const EnergyGroup& gm : d1.groups()) {
      const double p = diag.segment(gm.offset, gm.multiplicity).sum();
      if (p > 0.0) raw.push_back({gm.energy - gn.energy, p});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const WorkOutcome& a, const WorkOutcome& b) { return a.work < b.work; });

  WorkDistribution out;
  out.duration = s.duration();
  double total = 0.0;
  for (const WorkOutcome& o : raw) {
    if (!out.outcomes.empty() && o.work - out.outcomes.back().work <= 1e-10) {
      WorkOutcome& last = out.outcomes.back();
      last.work = (last.work * last.probability + o.work * o.probability) / (last.probability + o.probability);
      last.probability += o.probability;
    } else {
      out.outcomes.push_back(o);
    }
    total += o.probability;
  }
  for (WorkOutcome& o : out.outcomes) o.probability /= total;
  return out;
}

double adiabatic_work(const Schedule& s, const QuantumState& initial, const IntegratorConfig& cfg) {
  if (initial.dim() != s.dim()) throw InvalidInput("adiabatic_work: dimension mismatch");
  const std::vector<double> grid = time_grid(s, cfg);
  LevelTracker tracker(s, grid.front());
  if (tracked_coherence(initial, tracker) > 1e-8) {
    throw InvalidInput("adiabatic_work: initial state must be diagonal at t0");
  }
  const std::vector<double> p = tracked_populations(initial, tracker);
  std::vector<std::size_t> populated;
  for (std::size_t l = 0; l < p.size(); ++l) {
    if (p[l] > 1e-12) populated.push_back(l);
  }
  tracker.watch_only(populated);
  std::vector<double> e0(p.size());
  for (std::size_t l = 0; l < p.size(); ++l) e0[l] = tracker.energy(l);
  for (std::size_t k = 1; k < grid.size(); ++k) tracker.advance(grid[k]);
  double w = 0.0;
  for (std::size_t l = 0; l < p.size(); ++l) w += p[l] * (tracker.energy(l) - e0[l]);
  return w;
}

double inner_friction(const Schedule& s, const QuantumState& initial, const Matrix& U,
                      const IntegratorConfig& cfg) {
  return work_distribution(s, initial, U).mean() - adiabatic_work(s, initial, cfg);
}

DrivingBenefit driving_benefit(double friction, const CostReport& cost) {
  return {friction - cost.total, cost.n != 1};
}

}  // namespace ctcost
