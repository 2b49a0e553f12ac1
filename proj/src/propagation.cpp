#include "ctcost/propagation.hpp"

#include <cmath>
#include <sstream>

#include "ctcost/errors.hpp"
#include "spectral_field.hpp"

namespace ctcost {
namespace detail {

Matrix inverse_gap_weighted(const SpectralDecomposition& d, const Matrix& m) {
  const auto& groups = d.groups();
  const Index n = d.dim();
  Matrix k = Matrix::Zero(n, n);
  const double window = 100.0 * d.degeneracy_tol();
  for (std::size_t ga = 0; ga < groups.size(); ++ga) {
    for (std::size_t gb = 0; gb < groups.size(); ++gb) {
      if (ga == gb) continue;
      const EnergyGroup& a = groups[ga];
      const EnergyGroup& b = groups[gb];
      const double gap = b.energy - a.energy;
      const auto block = m.block(a.offset, b.offset, a.multiplicity, b.multiplicity);
      if (std::abs(gap) <= window) {
        const double coupling = block.norm();
        if (coupling > 1e-8) {
          std::ostringstream os;
          os << "levels at E=" << a.energy << " and E=" << b.energy << " (gap " << std::abs(gap)
             << ") are coupled by " << coupling << "; counterdiabatic driving is undefined";
          throw DegenerateCrossing(os.str());
        }
        continue;
      }
      k.block(a.offset, b.offset, a.multiplicity, b.multiplicity) = block / gap;
    }
  }
  return k;
}

}  // namespace detail

namespace {

enum class Mode { vector, density, propagator };

bool hermitian_enough(const Matrix& f) {
  const double scale = f.cwiseAbs().maxCoeff();
  return (f - f.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale;
}

Matrix total_hamiltonian(const Schedule& s, const FieldFn& extra, double t, std::size_t step) {
  Matrix h = s.hamiltonian_matrix(t);
  if (extra) {
    Matrix f = extra(t);
    if (f.rows() != h.rows() || f.cols() != h.cols()) throw InvalidInput("extra field has wrong shape");
    if (!f.allFinite()) throw IntegrationDiverged(step, "extra field is not finite");
    if (!hermitian_enough(f)) {
      std::ostringstream os;
      os << "extra field is not Hermitian at t=" << t;
      throw InvalidInput(os.str());
    }
    h += f;
  }
  return h;
}

// Right-hand side of the equation of motion times hbar / (-i).
Matrix generator(Mode mode, const Matrix& h, const Matrix& x) {
  if (mode == Mode::density) return h * x - x * h;
  return h * x;
}

void normalise(Mode mode, Matrix& x) {
  if (mode == Mode::vector) {
    x /= x.norm();
  } else if (mode == Mode::density) {
    x = 0.5 * (x + x.adjoint());
    x /= x.trace().real();
  }
}

QuantumState to_state(Mode mode, const Matrix& x) {
  if (mode == Mode::vector) return QuantumState::unchecked_pure(x.col(0));
  return QuantumState::unchecked_density(x);
}

Matrix run_rk4(const Schedule& s, Mode mode, Matrix x, double a, double b, std::size_t steps, bool renormalize,
               const FieldFn& extra, const std::function<void(std::size_t, double, const Matrix&)>& observe) {
  if (steps == 0) throw InvalidInput("integrate: at least one step required");
  const Complex factor(0.0, -1.0 / hbar);
  const double h = (b - a) / static_cast<double>(steps);
  Matrix h_now = total_hamiltonian(s, extra, a, 0);
  if (observe) observe(0, a, x);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = a + static_cast<double>(k) * h;
    const double t_next = (k + 1 == steps) ? b : t + h;
    const Matrix h_mid = total_hamiltonian(s, extra, t + 0.5 * h, k + 1);
    const Matrix h_next = total_hamiltonian(s, extra, t_next, k + 1);
    const Matrix k1 = factor * generator(mode, h_now, x);
    const Matrix k2 = factor * generator(mode, h_mid, x + (0.5 * h) * k1);
    const Matrix k3 = factor * generator(mode, h_mid, x + (0.5 * h) * k2);
    const Matrix k4 = factor * generator(mode, h_next, x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!x.allFinite()) {
      std::ostringstream os;
      os << "non-finite state at t=" << t_next;
      throw IntegrationDiverged(k + 1, os.str());
    }
    if (renormalize) normalise(mode, x);
    h_now = h_next;
    if (observe) observe(k + 1, t_next, x);
  }
  return x;
}

}  // namespace

QuantumState integrate(const Schedule& s, const QuantumState& initial, double a, double b, std::size_t steps,
                       bool renormalize, const FieldFn& extra_field, const StepObserver& observer) {
  if (initial.dim() != s.dim()) throw InvalidInput("integrate: state and schedule dimensions differ");
  if (!(a < b)) throw InvalidInput("integrate: require a < b");
  const Mode mode = initial.is_pure() ? Mode::vector : Mode::density;
  Matrix x = initial.is_pure() ? Matrix(initial.vector()) : initial.density_matrix();
  std::function<void(std::size_t, double, const Matrix&)> observe;
  if (observer) {
    observe = [&](std::size_t k, double t, const Matrix& m) { observer(k, t, to_state(mode, m)); };
  }
  return to_state(mode, run_rk4(s, mode, std::move(x), a, b, steps, renormalize, extra_field, observe));
}

QuantumState evolve_observed(const Schedule& s, const QuantumState& initial, const IntegratorConfig& cfg,
                             const StepObserver& observer, const FieldFn& extra_field) {
  validate(cfg);
  return integrate(s, initial, s.t0(), s.t1(), cfg.steps, cfg.renormalize, extra_field, observer);
}

Trajectory evolve(const Schedule& s, const QuantumState& initial, const IntegratorConfig& cfg,
                  const FieldFn& extra_field) {
  Trajectory out;
  out.reserve(cfg.steps + 1);
  evolve_observed(
      s, initial, cfg, [&](std::size_t, double t, const QuantumState& st) { out.push_back({t, st}); },
      extra_field);
  return out;
}

Matrix unitary(const Schedule& s, const IntegratorConfig& cfg, const FieldFn& extra_field) {
  validate(cfg);
  return run_rk4(s, Mode::propagator, Matrix::Identity(s.dim(), s.dim()), s.t0(), s.t1(), cfg.steps, false,
                 extra_field, {});
}

std::vector<Matrix> projector_derivatives(const Schedule& s, double t, const SpectralDecomposition& decomp) {
  if (decomp.dim() != s.dim()) throw InvalidInput("projector_derivatives: dimension mismatch");
  const Matrix& v = decomp.eigenvectors();
  const Matrix m = v.adjoint() * s.derivative_matrix(t) * v;
  const Matrix k = detail::inverse_gap_weighted(decomp, m);
  std::vector<Matrix> out;
  out.reserve(decomp.group_count());
  for (const EnergyGroup& g : decomp.groups()) {
    // columns of j carry +K, rows of j carry -K
    Matrix d = Matrix::Zero(decomp.dim(), decomp.dim());
    d.middleCols(g.offset, g.multiplicity) = k.middleCols(g.offset, g.multiplicity);
    d.middleRows(g.offset, g.multiplicity) -= k.middleRows(g.offset, g.multiplicity);
    Matrix full = v * d * v.adjoint();
    out.push_back(0.5 * (full + full.adjoint()));
  }
  return out;
}

}  // namespace ctcost
