#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ctcost/counterdiabatic.hpp"
#include "ctcost/errors.hpp"
#include "ctcost/fit.hpp"
#include "ctcost/models/ising.hpp"
#include "ctcost/models/landau_zener.hpp"
#include "ctcost/models/oscillator.hpp"
#include "helpers.hpp"

using namespace ctcost;

namespace {

IntegratorConfig steps(std::size_t n) {
  IntegratorConfig cfg;
  cfg.steps = n;
  return cfg;
}

Schedule lz_unit(double duration) { return lz_model(1.0, Ramp::cosine(-10.0, 5.0, 0.0, duration)); }

}  // namespace

TEST_CASE("trapezoid integrates a line exactly") {
  std::vector<CostSample> s;
  for (int k = 0; k <= 10; ++k) s.push_back({0.1 * k, 3.0 * 0.1 * k + 1.0});
  CHECK(trapezoid(s) == doctest::Approx(2.5));
}

TEST_CASE("landau-zener field equals the closed form") {
  const Ramp ramp = Ramp::cosine(-10.0, 5.0, 0.0, 1.0);
  const Schedule s = lz_model(1.0, ramp);
  for (int k = 0; k <= 50; ++k) {
    const double t = k / 50.0;
    CHECK((cd_full(s, t).matrix() - lz_cd_analytic(1.0, ramp, t).matrix()).cwiseAbs().maxCoeff() <= 1e-10);
  }
  // the closed form at the crossing point g = 0: -hbar g' / (2 delta) sigma_y
  const double tc = std::acos(-1.0 / 3.0) / std::numbers::pi;
  const Matrix h = lz_cd_analytic(1.0, ramp, tc).matrix();
  CHECK(std::abs(h(0, 1) - Complex(0.0, 0.5 * ramp.rate(tc))) < 1e-12);
}

TEST_CASE("two-spin ising field equals the closed form") {
  const Ramp ramp = Ramp::cosine(0.5, 1.5, 0.0, 1.0);
  const Schedule s = ising_dense(2, 1.0, ramp);
  for (double t : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    CHECK((cd_full(s, t).matrix() - ising_two_spin_cd_analytic(1.0, ramp, t).matrix()).cwiseAbs().maxCoeff() <=
          1e-10);
  }
}

TEST_CASE("oscillator field equals the squeezing generator on low levels") {
  const Ramp omega = Ramp::cosine(1.0, 2.0, 0.0, 1.0);
  const int n_max = 60;
  const Schedule s = ho_model(1.0, omega, n_max);
  const double t = 0.4;
  const Matrix numeric = cd_full(s, t).matrix();
  const Matrix analytic = ho_cd_analytic(1.0, omega, n_max, t).matrix();
  // the truncated basis is exact well below the cutoff only
  CHECK((numeric - analytic).topLeftCorner(20, 20).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("transitionless field has vanishing diagonal blocks") {
  const Schedule s = ising_dense(4, 1.0, Ramp::cosine(0.5, 1.5, 0.0, 1.0));
  for (double t : {0.0, 0.3, 0.6, 1.0}) {
    const Matrix h = cd_full(s, t).matrix();
    CHECK((h - h.adjoint()).norm() <= 1e-12 * h.norm());
    const SpectralDecomposition d = eigendecompose(s.hamiltonian_matrix(t));
    for (std::size_t j = 0; j < d.group_count(); ++j) {
      const Matrix p = d.projector(j).matrix();
      CHECK((p * h * p).norm() <= 1e-10);
    }
    CHECK(cd_full_norm(s, t) == doctest::Approx(h.norm()).epsilon(1e-10));
  }
}

TEST_CASE("selected field touches only blocks of its own level") {
  const Schedule s = ising_dense(4, 1.0, Ramp::cosine(0.5, 1.5, 0.0, 1.0));
  const double t = 0.45;
  const SpectralDecomposition d = eigendecompose(s.hamiltonian_matrix(t));
  for (std::size_t j = 0; j < d.group_count(); ++j) {
    const Matrix hw = cd_selected(s, t, j).matrix();
    const Matrix pj = d.projector(j).matrix();
    CHECK((pj * hw * pj).norm() <= 1e-10);
    for (std::size_t m = 0; m < d.group_count(); ++m) {
      for (std::size_t n = 0; n < d.group_count(); ++n) {
        if (m == j || n == j) continue;
        CHECK((d.projector(m).matrix() * hw * d.projector(n).matrix()).norm() <= 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(cd_selected(s, t, d.group_count()), InvalidInput);
}

TEST_CASE("selected fields sum to twice the off-diagonal part") {
  const Schedule s = ising_dense(2, 1.0, Ramp::cosine(0.5, 1.5, 0.0, 1.0));
  const double t = 0.3;
  const SpectralDecomposition d = eigendecompose(s.hamiltonian_matrix(t));
  Matrix sum = Matrix::Zero(4, 4);
  for (std::size_t j = 0; j < d.group_count(); ++j) sum += cd_selected(s, t, j).matrix();
  CHECK((sum - 2.0 * cd_full(s, t).matrix()).norm() < 1e-10);
}

TEST_CASE("selected cost never exceeds the transitionless cost") {
  const auto cfg = steps(400);
  SUBCASE("two-level systems give equality") {
    const Schedule s = lz_unit(1.0);
    const double ct = cost_transitionless(s, 1, 1.0, cfg).total;
    const SpectralDecomposition d = eigendecompose(s.hamiltonian_matrix(0.0));
    for (double pg : {1.0, 0.75, 0.5}) {
      const Matrix rho = pg * d.projector(0).matrix() + (1.0 - pg) * d.projector(1).matrix();
      CHECK(cost_selected(s, QuantumState::density(rho), 1, 1.0, cfg).total == doctest::Approx(ct).epsilon(1e-10));
    }
  }
  SUBCASE("four-spin ising at several temperatures") {
    const Schedule s = ising_dense(4, 1.0, Ramp::cosine(0.5, 1.5, 0.0, 1.0));
    for (int n : {1, 2}) {
      const double ct = cost_transitionless(s, n, 1.0, cfg).total;
      for (double beta : {0.0, 0.5, 2.0, infinite_beta}) {
        const double cw = cost_selected(s, thermal_state(s.hamiltonian_at(0.0), beta), n, 1.0, cfg).total;
        CHECK(cw <= ct * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("selected cost rejects coherent initial states") {
  const Schedule s = lz_unit(1.0);
  Vector plus(2);
  plus << 1.0, 1.0;
  CHECK_THROWS_AS(cost_selected(s, QuantumState::pure(plus.normalized()), 1, 1.0, steps(200)), InvalidInput);
  CHECK_THROWS_AS(cost_transitionless(s, 0, 1.0, steps(200)), InvalidInput);
  CHECK_THROWS_AS(cost_transitionless(s, 1, -1.0, steps(200)), InvalidInput);
}

TEST_CASE("cost scales as a power of the duration") {
  const std::vector<double> durations{1, 2, 4, 8, 16};
  const auto cfg = steps(1000);
  for (int n : {1, 2, 3}) {
    std::vector<double> lz, ising;
    for (double T : durations) {
      lz.push_back(cost_transitionless(lz_unit(T), n, 1.0, cfg).total);
      ising.push_back(cost_transitionless(ising_dense(4, 1.0, Ramp::cosine(0.5, 1.5, 0.0, T)), n, 1.0, cfg).total);
    }
    const double expected = 1.0 - n;
    CHECK(std::abs(fit_power_law(durations, lz).slope - expected) <= 0.02 * std::max(1.0, n - 1.0));
    CHECK(std::abs(fit_power_law(durations, ising).slope - expected) <= 0.02 * std::max(1.0, n - 1.0));
  }
}

TEST_CASE("cost prefactor is linear") {
  const Schedule s = lz_unit(1.0);
  const auto cfg = steps(200);
  CHECK(cost_transitionless(s, 2, 3.0, cfg).total ==
        doctest::Approx(3.0 * cost_transitionless(s, 2, 1.0, cfg).total).epsilon(1e-13));
}

TEST_CASE("pure-state exigency rate equals sqrt(2 var)") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    const Matrix a = test::random_hermitian(5, seed);
    const Vector psi = test::random_state(5, seed + 40);
    const QuantumState s = QuantumState::pure(psi);
    const double var = expectation_and_variance(s, HermitianOperator(a)).variance;
    CHECK(exigency_rate(a, s) == doctest::Approx(std::sqrt(2.0 * var)).epsilon(1e-10));
    CHECK(exigency_rate(a, QuantumState::density(psi * psi.adjoint())) ==
          doctest::Approx(std::sqrt(2.0 * var)).epsilon(1e-10));
  }
}

TEST_CASE("exigency vanishes for the maximally mixed state") {
  const auto cfg = steps(200);
  const Schedule lz = lz_unit(1.0);
  CHECK(exigency(lz, adiabatic_trajectory(lz, QuantumState::density(0.5 * Matrix::Identity(2, 2)), cfg)).total <=
        1e-10);
  const Schedule is = ising_dense(4, 1.0, Ramp::cosine(0.5, 1.5, 0.0, 1.0));
  CHECK(exigency(is, adiabatic_trajectory(is, thermal_state(is.hamiltonian_at(0.0), 0.0), cfg)).total <= 1e-10);
}

TEST_CASE("oscillator exigency equals hbar times the frequency change") {
  const Ramp omega = Ramp::cosine(1.0, 2.0, 0.0, 1.0);
  const Schedule s = ho_model(1.0, omega, 60);
  const SpectralDecomposition d = eigendecompose(s.hamiltonian_matrix(0.0));
  const QuantumState ground = QuantumState::pure(d.group_vectors(0).col(0));
  const CostReport c = exigency(s, adiabatic_trajectory(s, ground, steps(2000)));
  CHECK(std::abs(c.total - ho_exigency_analytic(omega)) / ho_exigency_analytic(omega) <= 1e-4);
  for (std::size_t k = 0; k < c.samples.size(); k += 200) {
    CHECK(c.samples[k].value == doctest::Approx(ho_exigency_rate_analytic(omega, c.samples[k].t)).epsilon(1e-6));
  }
}

TEST_CASE("oscillator exigency is stable under basis enlargement") {
  const Ramp omega = Ramp::cosine(1.0, 2.0, 0.0, 1.0);
  double values[2];
  int i = 0;
  for (int n_max : {60, 80}) {
    const Schedule s = ho_model(1.0, omega, n_max);
    const QuantumState ground = QuantumState::pure(eigendecompose(s.hamiltonian_matrix(0.0)).group_vectors(0).col(0));
    values[i++] = exigency(s, adiabatic_trajectory(s, ground, steps(400))).total;
  }
  CHECK(std::abs(values[1] - values[0]) / values[0] < 1e-6);
}

TEST_CASE("exigency validates the trajectory grid") {
  const Schedule s = lz_unit(1.0);
  const QuantumState g = QuantumState::pure(eigendecompose(s.hamiltonian_matrix(0.0)).group_vectors(0).col(0));
  Trajectory t = adiabatic_trajectory(s, g, steps(100));
  Trajectory shortened(t.begin(), t.end() - 1);
  CHECK_THROWS_AS(exigency(s, shortened), InvalidInput);
  std::swap(t[3], t[4]);
  CHECK_THROWS_AS(exigency(s, t), InvalidInput);
}

TEST_CASE("short-time deviation follows the leading ramp derivative") {
  // |d rho| -> |g^(m)(t0)| dt^(m+1) / (m+1)! * ||[sigma_z, rho0]|| / hbar, m the first non-zero order
  IntegratorConfig cfg;
  cfg.steps = 200000;
  const std::vector<double> dts{1e-2, 1e-3, 1e-4};
  const Ramp linear = Ramp::linear(-10.0, 5.0, 0.0, 1.0);
  const Ramp cosine = Ramp::cosine(-10.0, 5.0, 0.0, 1.0);
  // ground state of -10 sigma_z + sigma_x: Var sigma_z = 1/101
  const double comm = std::sqrt(2.0 / 101.0);
  const QuantumState ground = QuantumState::pure(
      eigendecompose(lz_model(1.0, linear).hamiltonian_matrix(0.0)).group_vectors(0).col(0));
  const auto lin = friction_power_expansion(lz_model(1.0, linear), ground, dts, cfg);
  const auto cos = friction_power_expansion(lz_model(1.0, cosine), ground, dts, cfg);
  const double lin_coeff = linear.rate(0.0) / 2.0 * comm / hbar;
  const double cos_coeff = cosine.acceleration(0.0) / 6.0 * comm / hbar;
  CHECK(lin.back().deviation / std::pow(1e-4, 2) == doctest::Approx(lin_coeff).epsilon(1e-3));
  CHECK(cos.back().deviation / std::pow(1e-4, 3) == doctest::Approx(cos_coeff).epsilon(1e-5));
  std::vector<double> x, y, z;
  for (std::size_t i = 0; i < dts.size(); ++i) {
    x.push_back(dts[i]);
    y.push_back(lin[i].deviation);
    z.push_back(cos[i].deviation);
  }
  CHECK(std::abs(fit_power_law(x, y).slope - 2.0) <= 0.1);
  CHECK(std::abs(fit_power_law(x, z).slope - 3.0) <= 1e-3);
  const Schedule s = lz_model(1.0, linear);
  CHECK_THROWS_AS(friction_power_expansion(s, ground, {1e-5}, cfg), InvalidInput);
}
