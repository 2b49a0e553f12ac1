#include <doctest.h>

#include <cmath>

#include "ctcost/errors.hpp"
#include "ctcost/models/ising.hpp"
#include "ctcost/models/landau_zener.hpp"
#include "ctcost/work.hpp"
#include "helpers.hpp"

using namespace ctcost;

namespace {

IntegratorConfig steps(std::size_t n) {
  IntegratorConfig cfg;
  cfg.steps = n;
  return cfg;
}

double partition(const Matrix& h, double beta) {
  const RealVector e = eigendecompose(h).eigenvalues();
  double z = 0.0;
  for (Index i = 0; i < e.size(); ++i) z += std::exp(-beta * e(i));
  return z;
}

}  // namespace

TEST_CASE("transition matrix is doubly stochastic") {
  const auto cfg = steps(800);
  for (double T : {0.3, 1.0, 3.0}) {
    const Schedule s = ising_dense(4, 1.0, Ramp::cosine(0.5, 1.5, 0.0, T));
    const TransitionMatrix tm = transition_matrix(s, unitary(s, cfg));
    // columns are eigenvectors: each sums to one
    for (Index n = 0; n < tm.probs.cols(); ++n) CHECK(std::abs(tm.probs.col(n).sum() - 1.0) <= 1e-8);
    // rows are final groups: each sums to its multiplicity
    for (std::size_t m = 0; m < tm.final.group_count(); ++m) {
      CHECK(std::abs(tm.probs.row(static_cast<Index>(m)).sum() -
                     static_cast<double>(tm.final.groups()[m].multiplicity)) <= 1e-8);
    }
  }
}

TEST_CASE("transition matrix rejects a non-unitary propagator") {
  const Schedule s = lz_model(1.0, Ramp::cosine(-1.0, 1.0, 0.0, 1.0));
  CHECK_THROWS_AS(transition_matrix(s, 1.1 * Matrix::Identity(2, 2)), InvalidInput);
}

TEST_CASE("sudden quench work distribution") {
  // U = 1: W = E_m(t1) - E_n(t0) with overlap probabilities
  const Schedule s = lz_model(1.0, Ramp::linear(-1.0, 1.0, 0.0, 1.0));
  const SpectralDecomposition d0 = eigendecompose(s.hamiltonian_matrix(0.0));
  const QuantumState g = QuantumState::pure(d0.group_vectors(0).col(0));
  const WorkDistribution w = work_distribution(s, g, Matrix::Identity(2, 2));
  REQUIRE(w.outcomes.size() == 2);
  const double e = std::sqrt(2.0);
  // ground of -sz + sx overlaps the ground of sz + sx with probability 1/2
  CHECK(w.outcomes[0].work == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w.outcomes[1].work == doctest::Approx(2.0 * e));
  CHECK(w.outcomes[0].probability == doctest::Approx(0.5));
  CHECK(w.mean() == doctest::Approx(e));
}

TEST_CASE("jarzynski equality") {
  const auto cfg = steps(2000);
  SUBCASE("landau-zener") {
    const Schedule s = lz_model(1.0, Ramp::cosine(-10.0, 5.0, 0.0, 1.0));
    const Matrix u = unitary(s, cfg);
    for (double beta : {0.1, 0.5, 1.0}) {
      const WorkDistribution w = work_distribution(s, thermal_state(s.hamiltonian_at(0.0), beta), u);
      const double ratio = partition(s.hamiltonian_matrix(1.0), beta) / partition(s.hamiltonian_matrix(0.0), beta);
      CHECK(std::abs(w.exp_average(beta) - ratio) <= 1e-6);
    }
  }
  SUBCASE("two-spin ising") {
    const Schedule s = ising_dense(2, 1.0, Ramp::cosine(0.5, 1.5, 0.0, 0.7));
    const Matrix u = unitary(s, cfg);
    for (double beta : {0.2, 1.0, 3.0}) {
      const WorkDistribution w = work_distribution(s, thermal_state(s.hamiltonian_at(0.0), beta), u);
      const double ratio = partition(s.hamiltonian_matrix(0.7), beta) / partition(s.hamiltonian_matrix(0.0), beta);
      CHECK(std::abs(w.exp_average(beta) - ratio) <= 1e-6);
    }
  }
}

TEST_CASE("adiabatic work of the landau-zener ground state") {
  const Schedule s = lz_model(1.0, Ramp::cosine(-10.0, 5.0, 0.0, 1.0));
  const QuantumState g = QuantumState::pure(eigendecompose(s.hamiltonian_matrix(0.0)).group_vectors(0).col(0));
  CHECK(adiabatic_work(s, g, steps(400)) == doctest::Approx(std::sqrt(101.0) - std::sqrt(26.0)).epsilon(1e-12));
}

TEST_CASE("friction is non-negative for thermal states") {
  for (double T : {0.5, 2.0, 8.0}) {
    const auto cfg = steps(static_cast<std::size_t>(2000 * T));
    const Schedule lz = lz_model(1.0, Ramp::cosine(-10.0, 5.0, 0.0, T));
    const Schedule is = ising_dense(4, 1.0, Ramp::cosine(0.5, 1.5, 0.0, T));
    for (double beta : {0.0, 0.5, 2.0, infinite_beta}) {
      CHECK(inner_friction(lz, thermal_state(lz.hamiltonian_at(0.0), beta), unitary(lz, cfg), cfg) >= -1e-10);
      CHECK(inner_friction(is, thermal_state(is.hamiltonian_at(0.0), beta), unitary(is, cfg), cfg) >= -1e-10);
    }
  }
}

TEST_CASE("driving with the transitionless field costs no friction") {
  const auto cfg = steps(4000);
  const Schedule lz = lz_model(1.0, Ramp::cosine(-10.0, 5.0, 0.0, 1.0));
  const Schedule is = ising_dense(4, 1.0, Ramp::cosine(0.5, 1.5, 0.0, 1.0));
  for (const Schedule* s : {&lz, &is}) {
    const QuantumState rho = thermal_state(s->hamiltonian_at(0.0), 0.7);
    const Matrix u = unitary(*s, cfg, transitionless_field(*s));
    CHECK(std::abs(work_distribution(*s, rho, u).mean() - adiabatic_work(*s, rho, cfg)) <= 1e-6);
  }
}

TEST_CASE("driving benefit subtracts the cost once") {
  CostReport c;
  c.total = 0.25;
  c.n = 2;
  c.nu = 4.0;
  const DrivingBenefit b = driving_benefit(1.0, c);
  CHECK(b.benefit == doctest::Approx(0.75));
  CHECK(b.units_differ);
  c.n = 1;
  CHECK_FALSE(driving_benefit(1.0, c).units_differ);
}
