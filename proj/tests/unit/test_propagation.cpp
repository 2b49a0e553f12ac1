#include <doctest.h>

#include <cmath>

#include "ctcost/counterdiabatic.hpp"
#include "ctcost/errors.hpp"
#include "ctcost/levels.hpp"
#include "ctcost/models/ising.hpp"
#include "ctcost/models/landau_zener.hpp"
#include "ctcost/propagation.hpp"
#include "helpers.hpp"

using namespace ctcost;

namespace {

Schedule constant_schedule(const Matrix& h, double t1) {
  return Schedule(h.rows(), 0.0, t1, [h](double) { return h; }, [h](double) { return Matrix::Zero(h.rows(), h.cols()).eval(); });
}

Matrix exact_propagator(const Matrix& h, double t) {
  const SpectralDecomposition d = eigendecompose(h);
  Vector phases(d.dim());
  for (Index i = 0; i < d.dim(); ++i) phases(i) = std::exp(Complex(0.0, -d.eigenvalues()(i) * t / hbar));
  return d.eigenvectors() * phases.asDiagonal() * d.eigenvectors().adjoint();
}

}  // namespace

TEST_CASE("schedule validation") {
  const Matrix h = test::random_hermitian(3, 1);
  auto f = [h](double) { return h; };
  CHECK_THROWS_AS(Schedule(3, 1.0, 1.0, f), InvalidInput);
  CHECK_THROWS_AS(Schedule(3, 0.0, 1.0, f, {}, {0, 1}), InvalidInput);
  Matrix bad = h;
  bad(0, 1) += 1.0;
  CHECK_THROWS_AS(Schedule(3, 0.0, 1.0, [bad](double) { return bad; }), InvalidInput);
  // a label layout that h couples is rejected
  CHECK_THROWS_AS(Schedule(3, 0.0, 1.0, f, {}, {0, 1, 0}), InvalidInput);
  IntegratorConfig cfg;
  cfg.steps = 50;
  CHECK_THROWS_AS(validate(cfg), InvalidInput);
}

TEST_CASE("time grid ends exactly at t1") {
  IntegratorConfig cfg;
  cfg.steps = 333;
  const auto g = time_grid(0.1, 0.7, cfg);
  CHECK(g.size() == 334);
  CHECK(g.front() == 0.1);
  CHECK(g.back() == 0.7);
}

TEST_CASE("finite-difference derivative matches the analytic one") {
  const Ramp ramp = Ramp::cosine(-2.0, 3.0, 0.0, 2.0);
  const Schedule analytic = lz_model(0.5, ramp);
  const Schedule numeric(2, 0.0, 2.0, [&](double t) { return analytic.hamiltonian_matrix(t); });
  CHECK_FALSE(numeric.has_analytic_derivative());
  for (double t : {0.1, 0.7, 1.3, 1.9}) {
    CHECK((numeric.derivative_matrix(t) - analytic.derivative_matrix(t)).norm() < 1e-7);
  }
}

TEST_CASE("restricted schedule keeps the hamiltonian") {
  const Schedule s = lz_model(1.0, Ramp::linear(-1.0, 1.0, 0.0, 4.0));
  const Schedule r = s.restricted(1.0, 2.0);
  CHECK(r.t0() == 1.0);
  CHECK(r.t1() == 2.0);
  CHECK((r.hamiltonian_matrix(1.5) - s.hamiltonian_matrix(1.5)).norm() == 0.0);
  CHECK_THROWS_AS(s.restricted(-1.0, 2.0), InvalidInput);
}

TEST_CASE("rk4 matches the exact propagator of a constant hamiltonian") {
  const Matrix h = test::random_hermitian(4, 7);
  const Schedule s = constant_schedule(h, 2.0);
  IntegratorConfig cfg;
  cfg.steps = 2000;
  const Matrix u = unitary(s, cfg);
  CHECK((u - exact_propagator(h, 2.0)).norm() < 1e-9);
  const Vector psi = test::random_state(4, 8);
  const QuantumState out = evolve(s, QuantumState::pure(psi), cfg).back().state;
  CHECK((out.vector() - exact_propagator(h, 2.0) * psi).norm() < 1e-9);
}

TEST_CASE("trace, purity and energy along a trajectory") {
  const Matrix h = test::random_hermitian(5, 11);
  const Schedule s = constant_schedule(h, 3.0);
  IntegratorConfig cfg;
  cfg.steps = 1000;
  cfg.renormalize = false;
  const Vector psi = test::random_state(5, 12);
  const QuantumState rho0 = QuantumState::density(psi * psi.adjoint());
  const double e0 = expectation_and_variance(rho0, HermitianOperator(h)).mean;
  const Trajectory traj = evolve(s, rho0, cfg);
  for (const auto& p : traj) {
    const Matrix rho = p.state.density_matrix();
    CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-8);
    CHECK((rho * rho).trace().real() >= 1.0 - 1e-7);
    CHECK(std::abs(expectation_and_variance(p.state, HermitianOperator(h)).mean - e0) <= 1e-8 * h.norm());
  }
}

TEST_CASE("observer sees every step") {
  const Schedule s = lz_model(1.0, Ramp::cosine(-1.0, 1.0, 0.0, 1.0));
  IntegratorConfig cfg;
  cfg.steps = 120;
  std::size_t calls = 0;
  double last = -1.0;
  evolve_observed(s, QuantumState::pure(test::random_state(2, 1)), cfg, [&](std::size_t, double t, const QuantumState&) {
    ++calls;
    last = t;
  });
  CHECK(calls == 121);
  CHECK(last == 1.0);
}

TEST_CASE("non-finite extra field is reported as divergence or invalid input") {
  const Schedule s = lz_model(1.0, Ramp::cosine(-1.0, 1.0, 0.0, 1.0));
  IntegratorConfig cfg;
  cfg.steps = 100;
  FieldFn bad = [](double) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1e308;
    m(1, 1) = -1e308;
    return m;
  };
  CHECK_THROWS_AS(evolve(s, QuantumState::pure(test::random_state(2, 2)), cfg, bad), NumericalError);
  FieldFn skew = [](double) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
  };
  CHECK_THROWS_AS(evolve(s, QuantumState::pure(test::random_state(2, 2)), cfg, skew), InvalidInput);
}

TEST_CASE("projector derivatives match finite differences of projectors") {
  const Schedule s = ising_dense(4, 1.0, Ramp::cosine(0.5, 1.5, 0.0, 1.0));
  const double t = 0.37;
  const double h = 1e-5;
  const SpectralDecomposition d = eigendecompose(s.hamiltonian_matrix(t));
  const SpectralDecomposition dp = eigendecompose(s.hamiltonian_matrix(t + h));
  const SpectralDecomposition dm = eigendecompose(s.hamiltonian_matrix(t - h));
  REQUIRE(d.group_count() == dp.group_count());
  const auto dP = projector_derivatives(s, t, d);
  for (std::size_t j = 0; j < d.group_count(); ++j) {
    const Matrix fd = (dp.projector(j).matrix() - dm.projector(j).matrix()) / (2.0 * h);
    CHECK((dP[j] - fd).norm() < 1e-6);
  }
}

TEST_CASE("coupled degenerate groups raise DegenerateCrossing") {
  // t sigma_z is degenerate at t = 0; a sigma_x derivative couples the two levels there
  Matrix sz(2, 2);
  sz << 1, 0, 0, -1;
  Matrix sx(2, 2);
  sx << 0, 1, 1, 0;
  const Schedule s(2, -1.0, 1.0, [sz](double t) { return (t * sz).eval(); }, [sx](double) { return sx; });
  const SpectralDecomposition d(RealVector::LinSpaced(2, -1e-13, 1e-13), Matrix::Identity(2, 2), 1e-14);
  CHECK_THROWS_AS(projector_derivatives(s, 0.0, d), DegenerateCrossing);
  // uncoupled near-degenerate groups contribute nothing
  const Schedule quiet(2, -1.0, 1.0, [sz](double t) { return (t * sz).eval(); }, [sz](double) { return sz; });
  const auto dP = projector_derivatives(quiet, 0.0, d);
  CHECK(dP[0].norm() == 0.0);
}

TEST_CASE("level tracker follows an avoided crossing and flags a true one") {
  const Schedule lz = lz_model(1.0, Ramp::linear(-5.0, 5.0, 0.0, 1.0));
  LevelTracker tracker(lz, 0.0);
  for (int k = 1; k <= 200; ++k) tracker.advance(k / 200.0);
  CHECK(tracker.level_count() == 2);
  CHECK(tracker.energy(0) < tracker.energy(1));

  // without the gap the levels swap character at t = 1/2
  const Schedule crossing = lz_model(1e-9, Ramp::linear(-5.0, 5.0, 0.0, 1.0));
  LevelTracker t2(crossing, 0.0);
  bool thrown = false;
  try {
    for (int k = 1; k <= 201; ++k) t2.advance(k / 201.0);
  } catch (const LevelCrossing&) {
    thrown = true;
  }
  CHECK(thrown);
}

TEST_CASE("transitionless evolution keeps eigenpopulations fixed") {
  IntegratorConfig cfg;
  cfg.steps = 4000;
  SUBCASE("landau-zener") {
    const Schedule s = lz_model(1.0, Ramp::cosine(-10.0, 5.0, 0.0, 1.0));
    const QuantumState init = QuantumState::density(
        eigendecompose(s.hamiltonian_matrix(0.0)).projector(0).matrix() * 0.7 +
        eigendecompose(s.hamiltonian_matrix(0.0)).projector(1).matrix() * 0.3);
    LevelTracker tracker(s, 0.0);
    const auto p0 = tracked_populations(init, tracker);
    const Trajectory traj = evolve(s, init, cfg, transitionless_field(s));
    for (std::size_t k = 1; k < traj.size(); ++k) {
      tracker.advance(traj[k].t);
      const auto p = tracked_populations(traj[k].state, tracker);
      for (std::size_t l = 0; l < p.size(); ++l) CHECK(std::abs(p[l] - p0[l]) <= 1e-6);
    }
  }
  SUBCASE("four-spin ising") {
    const Schedule s = ising_dense(4, 1.0, Ramp::cosine(0.5, 1.5, 0.0, 1.0));
    const QuantumState init = thermal_state(s.hamiltonian_at(0.0), 0.8);
    LevelTracker tracker(s, 0.0);
    const auto p0 = tracked_populations(init, tracker);
    double worst = 0.0;
    evolve_observed(s, init, cfg,
                    [&](std::size_t step, double t, const QuantumState& state) {
                      if (step == 0 || step % 20 != 0) return;
                      tracker.advance(t);
                      const auto p = tracked_populations(state, tracker);
                      for (std::size_t l = 0; l < p.size(); ++l) worst = std::max(worst, std::abs(p[l] - p0[l]));
                    },
                    transitionless_field(s));
    CHECK(worst <= 1e-6);
  }
}
