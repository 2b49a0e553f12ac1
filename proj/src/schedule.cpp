#include "ctcost/schedule.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "ctcost/errors.hpp"

namespace ctcost {

Schedule::Schedule(Index dim, double t0, double t1, MatrixFn hamiltonian, MatrixFn derivative,
                   std::vector<int> sector_labels)
    : dim_(dim),
      t0_(t0),
      t1_(t1),
      hamiltonian_(std::move(hamiltonian)),
      derivative_(std::move(derivative)),
      labels_(std::move(sector_labels)) {
  if (dim_ < 1) throw InvalidInput("Schedule: dimension must be positive");
  if (!std::isfinite(t0_) || !std::isfinite(t1_) || !(t0_ < t1_)) {
    throw InvalidInput("Schedule: require finite t0 < t1");
  }
  if (!hamiltonian_) throw InvalidInput("Schedule: missing Hamiltonian");
  if (labels_.empty()) labels_.assign(static_cast<std::size_t>(dim_), 0);
  if (static_cast<Index>(labels_.size()) != dim_) {
    throw InvalidInput("Schedule: one sector label per basis state required");
  }
  std::map<int, std::vector<Index>> by_label;
  for (Index i = 0; i < dim_; ++i) by_label[labels_[static_cast<std::size_t>(i)]].push_back(i);
  for (auto& [label, idx] : by_label) sectors_.push_back(std::move(idx));

  const HermitianOperator h0 = hamiltonian_at(t0_);
  if (sectors_.size() > 1) {
    const Matrix& m = h0.matrix();
    const double scale = m.cwiseAbs().maxCoeff();
    for (Index i = 0; i < dim_; ++i) {
      for (Index j = 0; j < dim_; ++j) {
        if (labels_[static_cast<std::size_t>(i)] != labels_[static_cast<std::size_t>(j)] &&
            std::abs(m(i, j)) > 1e-12 * scale) {
          throw InvalidInput("Schedule: Hamiltonian couples different sectors");
        }
      }
    }
  }
}

Matrix Schedule::hamiltonian_matrix(double t) const {
  Matrix h = hamiltonian_(t);
  if (h.rows() != dim_ || h.cols() != dim_) {
    std::ostringstream os;
    os << "Schedule: Hamiltonian at t=" << t << " has shape " << h.rows() << "x" << h.cols();
    throw InvalidInput(os.str());
  }
  return h;
}

Matrix Schedule::derivative_matrix(double t) const {
  if (!derivative_) return finite_difference_derivative(*this, t);
  Matrix d = derivative_(t);
  if (d.rows() != dim_ || d.cols() != dim_) throw InvalidInput("Schedule: derivative has wrong shape");
  return d;
}

HermitianOperator Schedule::hamiltonian_at(double t) const { return HermitianOperator(hamiltonian_matrix(t)); }

HermitianOperator Schedule::derivative_at(double t) const { return HermitianOperator(derivative_matrix(t)); }

Schedule Schedule::restricted(double a, double b) const {
  if (!(a >= t0_ && b <= t1_ && a < b)) throw InvalidInput("Schedule::restricted: interval outside [t0, t1]");
  Schedule out = *this;
  out.t0_ = a;
  out.t1_ = b;
  if (!derivative_) {
    // keep the finite-difference step tied to the parent duration
    const Schedule parent = *this;
    out.derivative_ = [parent](double t) { return finite_difference_derivative(parent, t); };
  }
  return out;
}

Matrix finite_difference_derivative(const Schedule& s, double t) {
  const double h = 1e-6 * s.duration();
  return (s.hamiltonian_matrix(t + h) - s.hamiltonian_matrix(t - h)) / (2.0 * h);
}

void validate(const IntegratorConfig& cfg) {
  if (cfg.steps < 100) {
    throw InvalidInput("IntegratorConfig: steps must be at least 100, got " + std::to_string(cfg.steps));
  }
}

std::vector<double> time_grid(double t0, double t1, const IntegratorConfig& cfg) {
  validate(cfg);
  if (!(t0 < t1)) throw InvalidInput("time_grid: require t0 < t1");
  std::vector<double> grid(cfg.steps + 1);
  const double h = (t1 - t0) / static_cast<double>(cfg.steps);
  for (std::size_t k = 0; k < cfg.steps; ++k) grid[k] = t0 + static_cast<double>(k) * h;
  grid[cfg.steps] = t1;
  return grid;
}

std::vector<double> time_grid(const Schedule& s, const IntegratorConfig& cfg) {
  return time_grid(s.t0(), s.t1(), cfg);
}

}  // namespace ctcost
