#include "cavkin/scenario.hpp"

#include <cmath>
#include <string>

#include "cavkin/errors.hpp"

namespace cavkin {

ReactionNetwork make_atom_laser_network(const AtomLaserSetup& setup) {
  if (setup.ground_mode_count < 1)
    throw DomainError("atom laser setup needs at least one ground mode");
  if (!(setup.rate > 0.0)) throw DomainError("atom laser setup needs a positive rate");
  ReactionNetwork net;
  net.constants = setup.constants;
  net.modes.push_back({"excited", ModeRole::excited, setup.omega_excited});
  net.modes.push_back({"photon", ModeRole::boson, setup.omega_photon});
  for (int i = 0; i < setup.ground_mode_count; ++i)
    net.modes.push_back({"ground_" + std::to_string(i), ModeRole::ground,
                         setup.omega_ground});
  const RateSet rates{setup.rate, setup.rate, setup.rate, setup.rate};
  for (int i = 0; i < setup.ground_mode_count; ++i)
    net.channels.push_back({0, 2 + i, 1, rates});
  return net;
}

AtomLaserReport scenario_atom_laser(const AtomLaserSetup& setup, int seed_mode_index,
                                    double seed_population, const SsaConfig& ssa) {
  if (seed_mode_index < 0 || seed_mode_index >= setup.ground_mode_count)
    throw DomainError("seed mode index out of range");
  if (!(seed_population >= 0.0) || std::floor(seed_population) != seed_population)
    throw DomainError("seed population must be a nonnegative integer");

  const ReactionNetwork net = make_atom_laser_network(setup);
  SimState state;
  state.occupations.assign(net.modes.size(), 0.0);
  state.occupations[0] = setup.n_excited0;
  state.occupations[1] = setup.n_photon0;
  for (int i = 0; i < setup.ground_mode_count; ++i)
    state.occupations[2 + i] = setup.n_ground_thermal;
  state.occupations[2 + seed_mode_index] += seed_population;

  AtomLaserReport report;
  report.gamma_n_seed = setup.rate * state.occupations[2 + seed_mode_index];
  report.alpha_plus_beta_n_photon = setup.rate * (1.0 + setup.n_photon0);

  // Predicted split of the first decay from the t = 0 R propensities.
  double total_R0 = 0.0;
  double seeded_R0 = 0.0;
  for (std::size_t c = 0; c < net.channels.size(); ++c) {
    const ChannelPropensities p = channel_propensities(net, net.channels[c], state);
    total_R0 += p.total_R();
    if (static_cast<int>(c) == seed_mode_index) seeded_R0 = p.total_R();
  }
  report.predicted_initial_fraction = total_R0 > 0.0 ? seeded_R0 / total_R0 : 0.0;

  report.trajectory = run_ssa(net, state, ssa);

  report.decays_per_ground_mode.assign(setup.ground_mode_count, 0);
  for (int i = 0; i < setup.ground_mode_count; ++i) {
    const auto& tally = report.trajectory.events.per_channel[i];
    report.decays_per_ground_mode[i] =
        tally[kEventRSpont] + tally[kEventRPhoton] + tally[kEventRAtom];
    report.total_decays += report.decays_per_ground_mode[i];
  }
  report.seeded_fraction =
      report.total_decays > 0
          ? static_cast<double>(report.decays_per_ground_mode[seed_mode_index]) /
                static_cast<double>(report.total_decays)
          : 0.0;
  return report;
}

}  // namespace cavkin
