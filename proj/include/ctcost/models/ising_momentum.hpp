#pragma once

// Jordan-Wigner free-fermion form of the periodic Ising chain: independent (k, -k) pair
// blocks in the even (anti-periodic) and odd (periodic) fermion-parity sectors.

#include <cstdint>
#include <vector>

#include "ctcost/counterdiabatic.hpp"
#include "ctcost/models/ramp.hpp"
#include "ctcost/operator.hpp"
#include "ctcost/schedule.hpp"

namespace ctcost {

enum class Parity { even = 0, odd = 1 };

class MomentumSectorModel {
 public:
  /// Requires even L >= 2.
  MomentumSectorModel(int L, double J, Ramp ramp);

  int L() const noexcept { return L_; }
  double J() const noexcept { return J_; }
  const Ramp& ramp() const noexcept { return ramp_; }
  /// Coupling entering the fermion dispersion: J, or J/2 for L = 2 where the ring has one bond.
  double coupling() const noexcept { return L_ == 2 ? 0.5 * J_ : J_; }

  /// All L momenta of a sector in ascending order within (-pi, pi].
  /// even: +-(2j-1)pi/L; odd: 0, +-2j pi/L, pi.
  std::vector<double> momenta(Parity p) const;
  /// Pair momenta k in (0, pi), ascending.
  std::vector<double> pair_momenta(Parity p) const;
  /// Unpaired momenta: {0, pi} in the odd sector, none in the even sector.
  std::vector<double> single_momenta(Parity p) const;

  /// epsilon_k = sqrt((g - J cos k)^2 + J^2 sin^2 k); a pair block has energies +-2 epsilon_k.
  double epsilon(double k, double g) const;
  /// Energy -(g - J cos k)(2n - 1) of an unpaired mode with occupation n.
  double single_mode_energy(double k, int n, double g) const;

  /// 2[(g - J cos k) sigma_z + J sin k sigma_y] on {|0>, c_k^dag c_{-k}^dag |0>}.
  HermitianOperator pair_block(double k, double t) const;
  /// Pair block as a 2x2 schedule on the ramp interval.
  Schedule pair_schedule(double k) const;

  /// f(k, t) = -hbar g' J sin k / [2 (g^2 + J^2 - 2 g J cos k)]; the pair field is -f sigma_x.
  double cd_amplitude(double k, double t) const;

 private:
  int L_;
  double J_;
  Ramp ramp_;
};

/// Occupation of one (k, -k) pair in an energy eigenstate.
enum class PairState : std::uint8_t { lower, upper, k_only, minus_k_only };

struct MomentumLevel {
  Parity parity;
  std::vector<PairState> pairs;  // aligned with pair_momenta(parity)
  std::vector<int> singles;      // aligned with single_momenta(parity)
  double energy;
};

/// All 2^L eigenstates, even sector first, in a t-independent order.
std::vector<MomentumLevel> momentum_levels(const MomentumSectorModel& model, double t);

/// Sorted spectrum of momentum_levels.
RealVector momentum_spectrum(const MomentumSectorModel& model, double t);

/// Boltzmann weights of `levels` (beta = infinite_beta spreads weight over the ground group).
std::vector<double> boltzmann_weights(const std::vector<MomentumLevel>& levels, double beta);

/// sum_n p_n [E_n(t1) - E_n(t0)] with thermal p_n at t0, each eigenstate followed by its labels.
double momentum_adiabatic_work(const MomentumSectorModel& model, double beta);

struct MomentumField {
  std::vector<double> even_k, even_f;  // pair momenta and amplitudes, even sector
  std::vector<double> odd_k, odd_f;    // pair momenta and amplitudes, odd sector
  double norm;                         // full-space Frobenius norm
};

MomentumField ising_cd_momentum(const MomentumSectorModel& model, double t);

/// The pair field sum_k -f(k,t) (c_k^dag c_{-k}^dag + c_{-k} c_k) of each sector, projected onto
/// that sector and written in the spin basis of ising_dense. Requires L <= 8.
Matrix ising_cd_momentum_dense(const MomentumSectorModel& model, double t);

/// prod_i c_{k_i}^dag |0> over the set bits i of `occupation` (bit i = momenta(parity)[i]),
/// ascending i from the left, in the spin basis of ising_dense. Requires L <= 8.
Vector momentum_fock_state_dense(const MomentumSectorModel& model, Parity parity, std::uint32_t occupation);

enum class SubBlockType : char { A = 'A', B = 'B', C = 'C' };

struct SubBlock {
  SubBlockType type;
  std::vector<std::uint32_t> states;  // bit i = occupation of momenta(parity)[i]
  std::vector<double> active_pairs;   // pair momenta with occupation (0,0) or (1,1)
  std::vector<double> frozen_singles; // unpaired momenta that are occupied
};

/// A: every pair active, B: no pair active (a single state), C: in between.
struct SubBlockClassification {
  Parity parity;
  std::vector<SubBlock> blocks;

  std::size_t state_count(SubBlockType type) const;
  std::size_t block_count(SubBlockType type) const;
};

/// Requires L <= 12.
SubBlockClassification classify_subblocks(const MomentumSectorModel& model, Parity parity);

/// nu * integral of the full-space ||H_t||^n over the ramp.
CostReport transitionless_cost_ising(const MomentumSectorModel& model, int n, double nu,
                                     const IntegratorConfig& cfg);

/// nu * sum_B w_B integral of ||P_B H_t P_B||^n over sub-blocks B of both sectors, with w_B the
/// thermal weight of the block at t0.
CostReport selected_cost_ising(const MomentumSectorModel& model, double beta, int n, double nu,
                               const IntegratorConfig& cfg);

}  // namespace ctcost
