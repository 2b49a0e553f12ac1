#include "ctcost/models/ising_momentum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "ctcost/errors.hpp"

namespace ctcost {
namespace {

constexpr double pi = std::numbers::pi;

std::size_t position_of(const std::vector<double>& list, double k) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (std::abs(list[i] - k) < 1e-12) return i;
  }
  throw InvalidInput("momentum not in sector list");
}

// Number of sector basis states in which a given pair is empty or doubly occupied.
double active_state_count(int L) { return L == 2 ? 2.0 : std::ldexp(1.0, L - 2); }

struct BlockEnergetics {
  std::vector<double> active;
  double frozen;  // energy of the unpaired modes
};

std::vector<BlockEnergetics> all_blocks(const MomentumSectorModel& model, double g) {
  std::vector<BlockEnergetics> out;
  for (Parity p : {Parity::even, Parity::odd}) {
    const SubBlockClassification c = classify_subblocks(model, p);
    const std::vector<double> singles = model.single_momenta(p);
    for (const SubBlock& b : c.blocks) {
      double frozen = 0.0;
      for (double k : singles) {
        const bool occupied = std::find(b.frozen_singles.begin(), b.frozen_singles.end(), k) != b.frozen_singles.end();
        frozen += model.single_mode_energy(k, occupied ? 1 : 0, g);
      }
      out.push_back({b.active_pairs, frozen});
    }
  }
  return out;
}

double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

}  // namespace

MomentumSectorModel::MomentumSectorModel(int L, double J, Ramp ramp) : L_(L), J_(J), ramp_(ramp) {
  if (L < 2 || L % 2 != 0) throw InvalidInput("MomentumSectorModel: L must be even and >= 2");
  if (!std::isfinite(J)) throw InvalidInput("MomentumSectorModel: J must be finite");
}

std::vector<double> MomentumSectorModel::momenta(Parity p) const {
  std::vector<double> out;
  if (p == Parity::even) {
    for (int j = L_ / 2; j >= 1; --j) out.push_back(-(2 * j - 1) * pi / L_);
    for (int j = 1; j <= L_ / 2; ++j) out.push_back((2 * j - 1) * pi / L_);
  } else {
    for (int j = -(L_ / 2 - 1); j <= L_ / 2 - 1; ++j) out.push_back(2.0 * j * pi / L_);
    out.push_back(pi);
  }
  return out;
}

std::vector<double> MomentumSectorModel::pair_momenta(Parity p) const {
  std::vector<double> out;
  for (double k : momenta(p)) {
    if (k > 1e-12 && k < pi - 1e-12) out.push_back(k);
  }
  return out;
}

std::vector<double> MomentumSectorModel::single_momenta(Parity p) const {
  if (p == Parity::even) return {};
  return {0.0, pi};
}

double MomentumSectorModel::epsilon(double k, double g) const {
  const double j = coupling();
  const double a = g - j * std::cos(k);
  const double b = j * std::sin(k);
  return std::sqrt(a * a + b * b);
}

double MomentumSectorModel::single_mode_energy(double k, int n, double g) const {
  return -(g - coupling() * std::cos(k)) * (2.0 * n - 1.0);
}

HermitianOperator MomentumSectorModel::pair_block(double k, double t) const {
  const double a = 2.0 * (ramp_.value(t) - coupling() * std::cos(k));
  const double b = 2.0 * coupling() * std::sin(k);
  Matrix m(2, 2);
  m << a, Complex(0.0, -b), Complex(0.0, b), -a;
  return HermitianOperator(m);
}

Schedule MomentumSectorModel::pair_schedule(double k) const {
  const MomentumSectorModel self = *this;
  return Schedule(
      2, ramp_.t0(), ramp_.t1(), [self, k](double t) { return self.pair_block(k, t).matrix(); },
      [self, k](double t) -> Matrix {
        Matrix d = Matrix::Zero(2, 2);
        const double r = 2.0 * self.ramp().rate(t);
        d(0, 0) = r;
        d(1, 1) = -r;
        return d;
      });
}

double MomentumSectorModel::cd_amplitude(double k, double t) const {
  const double g = ramp_.value(t);
  const double j = coupling();
  return -hbar * ramp_.rate(t) * j * std::sin(k) / (2.0 * (g * g + j * j - 2.0 * g * j * std::cos(k)));
}

std::vector<MomentumLevel> momentum_levels(const MomentumSectorModel& model, double t) {
  const double g = model.ramp().value(t);
  std::vector<MomentumLevel> out;
  for (Parity p : {Parity::even, Parity::odd}) {
    const std::vector<double> pairs = model.pair_momenta(p);
    const std::vector<double> singles = model.single_momenta(p);
    const std::size_t n_pair_configs = std::size_t{1} << (2 * pairs.size());
    const std::size_t n_single_configs = std::size_t{1} << singles.size();
    for (std::size_t pc = 0; pc < n_pair_configs; ++pc) {
      for (std::size_t sc = 0; sc < n_single_configs; ++sc) {
        MomentumLevel level{p, {}, {}, 0.0};
        int fermions = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          const auto st = static_cast<PairState>((pc >> (2 * i)) & 3u);
          level.pairs.push_back(st);
          const double e = model.epsilon(pairs[i], g);
          if (st == PairState::lower) level.energy -= 2.0 * e;
          if (st == PairState::upper) level.energy += 2.0 * e;
          if (st == PairState::k_only || st == PairState::minus_k_only) ++fermions;
        }
        for (std::size_t i = 0; i < singles.size(); ++i) {
          const int n = static_cast<int>((sc >> i) & 1u);
          level.singles.push_back(n);
          level.energy += model.single_mode_energy(singles[i], n, g);
          fermions += n;
        }
        if (fermions % 2 == static_cast<int>(p)) out.push_back(std::move(level));
      }
    }
  }
  return out;
}

RealVector momentum_spectrum(const MomentumSectorModel& model, double t) {
  const auto levels = momentum_levels(model, t);
  RealVector e(static_cast<Index>(levels.size()));
  for (std::size_t i = 0; i < levels.size(); ++i) e(static_cast<Index>(i)) = levels[i].energy;
  std::sort(e.data(), e.data() + e.size());
  return e;
}

std::vector<double> boltzmann_weights(const std::vector<MomentumLevel>& levels, double beta) {
  if (std::isnan(beta) || beta < 0.0) throw InvalidInput("boltzmann_weights: beta must be >= 0");
  std::vector<double> w(levels.size(), 0.0);
  if (levels.empty()) return w;
  double lo = levels.front().energy;
  double hi = lo;
  for (const auto& l : levels) {
    lo = std::min(lo, l.energy);
    hi = std::max(hi, l.energy);
  }
  if (std::isinf(beta)) {
    const double tol = 1e-9 * std::max(hi - lo, 1e-300);
    for (std::size_t i = 0; i < levels.size(); ++i) w[i] = (levels[i].energy - lo <= tol) ? 1.0 : 0.0;
  } else {
    for (std::size_t i = 0; i < levels.size(); ++i) w[i] = std::exp(-beta * (levels[i].energy - lo));
  }
  double z = 0.0;
  for (double x : w) z += x;
  for (double& x : w) x /= z;
  return w;
}

double momentum_adiabatic_work(const MomentumSectorModel& model, double beta) {
  const auto before = momentum_levels(model, model.ramp().t0());
  const auto after = momentum_levels(model, model.ramp().t1());
  const auto p = boltzmann_weights(before, beta);
  double w = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) w += p[i] * (after[i].energy - before[i].energy);
  return w;
}

MomentumField ising_cd_momentum(const MomentumSectorModel& model, double t) {
  MomentumField out;
  out.even_k = model.pair_momenta(Parity::even);
  out.odd_k = model.pair_momenta(Parity::odd);
  double sq = 0.0;
  const double count = active_state_count(model.L());
  for (double k : out.even_k) {
    out.even_f.push_back(model.cd_amplitude(k, t));
    sq += count * out.even_f.back() * out.even_f.back();
  }
  for (double k : out.odd_k) {
    out.odd_f.push_back(model.cd_amplitude(k, t));
    sq += count * out.odd_f.back() * out.odd_f.back();
  }
  out.norm = std::sqrt(sq);
  return out;
}

namespace {

// Spin-basis fermion operators: n_j = 1 is spin down (bit set) and site 0 is the top bit.
std::vector<Matrix> site_fermions(int L) {
  const Index d = Index{1} << L;
  std::vector<Matrix> c(static_cast<std::size_t>(L), Matrix::Zero(d, d));
  for (int j = 0; j < L; ++j) {
    const unsigned mask = 1u << (L - 1 - j);
    const unsigned before = ~((mask << 1) - 1u) & ((1u << L) - 1u);
    for (Index s = 0; s < d; ++s) {
      const auto us = static_cast<unsigned>(s);
      if (!(us & mask)) continue;
      const double sign = (std::popcount(us & before) % 2) ? -1.0 : 1.0;
      const double stagger = (j % 2) ? -1.0 : 1.0;
      c[static_cast<std::size_t>(j)](static_cast<Index>(us ^ mask), s) = sign * stagger;
    }
  }
  return c;
}

Matrix momentum_mode(const std::vector<Matrix>& c, double k) {
  const int L = static_cast<int>(c.size());
  Matrix ck = Matrix::Zero(c[0].rows(), c[0].cols());
  for (int j = 0; j < L; ++j) ck += std::polar(1.0 / std::sqrt(double(L)), -k * j) * c[static_cast<std::size_t>(j)];
  return ck;
}

}  // namespace

Vector momentum_fock_state_dense(const MomentumSectorModel& model, Parity parity, std::uint32_t occupation) {
  const int L = model.L();
  if (L > 8) throw InvalidInput("momentum_fock_state_dense: L must be <= 8");
  if (occupation >> L) throw InvalidInput("momentum_fock_state_dense: occupation has bits beyond L");
  const std::vector<Matrix> c = site_fermions(L);
  const std::vector<double> ks = model.momenta(parity);
  Vector psi = Vector::Zero(Index{1} << L);
  psi(0) = 1.0;  // all spins up is the fermion vacuum
  // c_{k_0}^dag c_{k_1}^dag ... |0>, so the highest index acts first
  for (int i = L - 1; i >= 0; --i) {
    if (occupation & (1u << i)) psi = momentum_mode(c, ks[static_cast<std::size_t>(i)]).adjoint() * psi;
  }
  return psi;
}

Matrix ising_cd_momentum_dense(const MomentumSectorModel& model, double t) {
  const int L = model.L();
  if (L > 8) throw InvalidInput("ising_cd_momentum_dense: L must be <= 8");
  const Index d = Index{1} << L;
  const std::vector<Matrix> c = site_fermions(L);
  auto mode = [&](double k) { return momentum_mode(c, k); };
  Matrix out = Matrix::Zero(d, d);
  for (Parity p : {Parity::even, Parity::odd}) {
    Matrix field = Matrix::Zero(d, d);
    for (double k : model.pair_momenta(p)) {
      const Matrix ck = mode(k);
      const Matrix cmk = mode(-k);
      field += -model.cd_amplitude(k, t) * (ck.adjoint() * cmk.adjoint() + cmk * ck);
    }
    for (Index s = 0; s < d; ++s) {
      if (std::popcount(static_cast<unsigned>(s)) % 2 != static_cast<int>(p)) field.col(s).setZero();
    }
    out += field;
  }
  return out;
}

std::size_t SubBlockClassification::state_count(SubBlockType type) const {
  std::size_t n = 0;
  for (const SubBlock& b : blocks) {
    if (b.type == type) n += b.states.size();
  }
  return n;
}

std::size_t SubBlockClassification::block_count(SubBlockType type) const {
  return static_cast<std::size_t>(
      std::count_if(blocks.begin(), blocks.end(), [type](const SubBlock& b) { return b.type == type; }));
}

SubBlockClassification classify_subblocks(const MomentumSectorModel& model, Parity parity) {
  if (model.L() > 12) throw InvalidInput("classify_subblocks: L must be <= 12");
  const std::vector<double> ks = model.momenta(parity);
  const std::vector<double> pairs = model.pair_momenta(parity);
  const std::vector<double> singles = model.single_momenta(parity);
  std::vector<std::uint32_t> plus_bit, minus_bit, single_bit;
  for (double k : pairs) {
    plus_bit.push_back(1u << position_of(ks, k));
    minus_bit.push_back(1u << position_of(ks, -k));
  }
  for (double k : singles) single_bit.push_back(1u << position_of(ks, k));

  SubBlockClassification out{parity, {}};
  // each pair is active (0), k only (1) or -k only (2)
  std::size_t n_pair_configs = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) n_pair_configs *= 3;
  for (std::size_t pc = 0; pc < n_pair_configs; ++pc) {
    for (std::uint32_t sc = 0; sc < (1u << singles.size()); ++sc) {
      std::uint32_t frozen = 0;
      std::vector<std::size_t> active;
      int fermions = 0;
      std::size_t code = pc;
      for (std::size_t i = 0; i < pairs.size(); ++i, code /= 3) {
        const std::size_t st = code % 3;
        if (st == 0) active.push_back(i);
        if (st == 1) frozen |= plus_bit[i];
        if (st == 2) frozen |= minus_bit[i];
        if (st != 0) ++fermions;
      }
      SubBlock block;
      for (std::size_t i = 0; i < singles.size(); ++i) {
        if ((sc >> i) & 1u) {
          frozen |= single_bit[i];
          block.frozen_singles.push_back(singles[i]);
          ++fermions;
        }
      }
      if (fermions % 2 != static_cast<int>(parity)) continue;
      for (std::uint32_t sub = 0; sub < (1u << active.size()); ++sub) {
        std::uint32_t state = frozen;
        for (std::size_t a = 0; a < active.size(); ++a) {
          if ((sub >> a) & 1u) state |= plus_bit[active[a]] | minus_bit[active[a]];
        }
        block.states.push_back(state);
      }
      for (std::size_t i : active) block.active_pairs.push_back(pairs[i]);
      if (active.empty()) {
        block.type = SubBlockType::B;
      } else if (active.size() == pairs.size()) {
        block.type = SubBlockType::A;
      } else {
        block.type = SubBlockType::C;
      }
      out.blocks.push_back(std::move(block));
    }
  }
  return out;
}

CostReport transitionless_cost_ising(const MomentumSectorModel& model, int n, double nu,
                                     const IntegratorConfig& cfg) {
  if (n < 1) throw InvalidInput("transitionless_cost_ising: n must be >= 1");
  CostReport report;
  report.n = n;
  report.nu = nu;
  for (double t : time_grid(model.ramp().t0(), model.ramp().t1(), cfg)) {
    report.samples.push_back({t, nu * std::pow(ising_cd_momentum(model, t).norm, n)});
  }
  report.total = trapezoid(report.samples);
  return report;
}

CostReport selected_cost_ising(const MomentumSectorModel& model, double beta, int n, double nu,
                               const IntegratorConfig& cfg) {
  if (n < 1) throw InvalidInput("selected_cost_ising: n must be >= 1");
  if (std::isnan(beta) || beta < 0.0) throw InvalidInput("selected_cost_ising: beta must be >= 0");
  const double g0 = model.ramp().value(model.ramp().t0());
  const std::vector<BlockEnergetics> blocks = all_blocks(model, g0);

  std::vector<double> w(blocks.size());
  if (std::isinf(beta)) {
    std::vector<double> ground(blocks.size());
    double lo = 0.0, hi = 0.0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      double e = blocks[b].frozen;
      double top = blocks[b].frozen;
      for (double k : blocks[b].active) {
        e -= 2.0 * model.epsilon(k, g0);
        top += 2.0 * model.epsilon(k, g0);
      }
      ground[b] = e;
      lo = (b == 0) ? e : std::min(lo, e);
      hi = (b == 0) ? top : std::max(hi, top);
    }
    const double tol = 1e-9 * std::max(hi - lo, 1e-300);
    for (std::size_t b = 0; b < blocks.size(); ++b) w[b] = (ground[b] - lo <= tol) ? 1.0 : 0.0;
  } else {
    std::vector<double> logw(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      double lw = -beta * blocks[b].frozen;
      for (double k : blocks[b].active) {
        const double x = 2.0 * beta * model.epsilon(k, g0);
        lw += x + std::log1p(std::exp(-2.0 * x));  // log(2 cosh x)
      }
      logw[b] = lw;
    }
    double log_z = logw.front();
    for (std::size_t b = 1; b < logw.size(); ++b) log_z = log_add(log_z, logw[b]);
    for (std::size_t b = 0; b < blocks.size(); ++b) w[b] = std::exp(logw[b] - log_z);
  }
  double total_w = 0.0;
  for (double x : w) total_w += x;
  for (double& x : w) x /= total_w;

  CostReport report;
  report.n = n;
  report.nu = nu;
  for (double t : time_grid(model.ramp().t0(), model.ramp().t1(), cfg)) {
    double value = 0.0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (w[b] == 0.0 || blocks[b].active.empty()) continue;
      double sq = 0.0;
      for (double k : blocks[b].active) {
        const double f = model.cd_amplitude(k, t);
        sq += f * f;
      }
      sq *= std::ldexp(1.0, static_cast<int>(blocks[b].active.size()));
      value += w[b] * std::pow(std::sqrt(sq), n);
    }
    report.samples.push_back({t, nu * value});
  }
  report.total = trapezoid(report.samples);
  return report;
}

}  // namespace ctcost
