#ifndef CAVKIN_SCENARIO_HPP
#define CAVKIN_SCENARIO_HPP

#include <cstdint>
#include <vector>

#include "cavkin/kinetics.hpp"
#include "cavkin/ssa.hpp"
#include "cavkin/trajectory.hpp"

namespace cavkin {

// Atom-laser seed network: one excited mode, ground_mode_count degenerate
// ground modes (equal omega), one photon mode; one channel per ground mode,
// all with micro-rate `rate`.
struct AtomLaserSetup {
  PhysicalConstants constants;
  int ground_mode_count = 2;      // d_a
  double rate = 0.0;              // alpha = beta = gamma, 1/s
  double omega_excited = 0.0;     // rad/s
  double omega_ground = 0.0;
  double omega_photon = 0.0;      // = omega_excited - omega_ground
  double n_excited0 = 0.0;
  double n_photon0 = 0.0;
  double n_ground_thermal = 0.0;  // initial occupation of every ground mode
};

ReactionNetwork make_atom_laser_network(const AtomLaserSetup& setup);

struct AtomLaserReport {
  std::vector<std::int64_t> decays_per_ground_mode;  // R events by channel
  std::int64_t total_decays = 0;
  double seeded_fraction = 0.0;            // decays into the seeded mode / total
  double predicted_initial_fraction = 0.0; // from t = 0 propensities
  double gamma_n_seed = 0.0;               // forgotten-process drive at t = 0
  double alpha_plus_beta_n_photon = 0.0;   // competing per-channel drive
  Trajectory trajectory;
};

// Seeds ground mode seed_mode_index with seed_population quanta on top of the
// initial state, runs the SSA, and reports where the decays went.
AtomLaserReport scenario_atom_laser(const AtomLaserSetup& setup, int seed_mode_index,
                                    double seed_population, const SsaConfig& ssa);

}  // namespace cavkin

#endif
