#ifndef CAVKIN_KINETICS_HPP
#define CAVKIN_KINETICS_HPP

#include <string>
#include <vector>

#include "cavkin/constants.hpp"
#include "cavkin/interaction.hpp"
#include "cavkin/statistics.hpp"

namespace cavkin {

enum class ModeRole { excited, ground, boson };

// One tracked cavity mode inside a reaction network. omega is all the
// kinetics needs; the dispersion bookkeeping happens upstream.
struct NetworkMode {
  std::string label;
  ModeRole role = ModeRole::boson;
  double omega = 0.0;  // rad/s
};

// (excited)_m <-> (ground)_n + (boson)_k with per-channel micro-rates.
struct ReactionChannel {
  int excited_mode = -1;
  int ground_mode = -1;
  int boson_mode = -1;
  RateSet rates;
};

// Per-mode birth-death exchange with the thermal reservoir:
// birth = kappa e^{-hbar omega / k_B T} (n + 1), death = kappa n.
// The stationary distribution is geometric with the Bose-Einstein mean.
// kappa = 0 disables the reservoir (isolated equilibrium regime).
struct ReservoirCoupling {
  double kappa = 0.0;  // 1/s
  ThermalEnvironment environment;
};

struct ReactionNetwork {
  PhysicalConstants constants;
  std::vector<NetworkMode> modes;
  std::vector<ReactionChannel> channels;
  ReservoirCoupling reservoir;
  // Energy conservation slack for omega_excited = omega_ground + omega_boson,
  // relative to omega_excited.
  double conservation_rtol = 1e-9;

  void validate() const;
};

// Occupation numbers of all tracked modes at one instant. SSA keeps them
// integral; the ODE path evolves them as reals.
struct SimState {
  double time = 0.0;
  std::vector<double> occupations;
};

struct ChannelPropensities {
  double rate_L = 0.0;         // beta_abs * n_phi * n_a  (absorption)
  double rate_R_spont = 0.0;   // alpha * n_excited
  double rate_R_photon = 0.0;  // beta_em * n_phi * n_excited
  double rate_R_atom = 0.0;    // gamma * n_a * n_excited (forgotten process)

  double total_R() const { return rate_R_spont + rate_R_photon + rate_R_atom; }
};

ChannelPropensities channel_propensities(const ReactionNetwork& net,
                                         const ReactionChannel& ch,
                                         const SimState& state);

// rate_L - (rate_R_spont + rate_R_photon + rate_R_atom); vanishes at BE
// occupations with equal micro-rates.
double equilibrium_residual(const ReactionNetwork& net, const ReactionChannel& ch,
                            const SimState& state);

struct ReservoirPropensities {
  double birth = 0.0;
  double death = 0.0;
};

ReservoirPropensities reservoir_propensities(const PhysicalConstants& pc,
                                             const NetworkMode& mode, double n,
                                             const ReservoirCoupling& coupling);

// Occupations set to the Bose-Einstein mean of each mode at the reservoir
// temperature (time = 0).
SimState be_equilibrium_state(const ReactionNetwork& net);

// Conserved class totals for the isolated network (kappa = 0): every
// reaction event preserves N_ground + N_excited and N_boson + N_excited.
struct ClassTotals {
  double ground_plus_excited = 0.0;
  double boson_plus_excited = 0.0;
};
ClassTotals class_totals(const ReactionNetwork& net, const SimState& state);

}  // namespace cavkin

#endif
