#ifndef CAVKIN_TESTS_NETWORKS_HPP
#define CAVKIN_TESTS_NETWORKS_HPP

#include <string>
#include <vector>

#include "cavkin/kinetics.hpp"

namespace cavkin_tests {

// Single reaction trio with mode energies given as x = hbar*omega/k_B T at
// the reservoir temperature (x_excited = x_ground + x_boson by construction).
inline cavkin::ReactionNetwork single_trio(double x_ground, double x_boson, double rate,
                                           double kappa = 0.0, double temperature = 300.0) {
  cavkin::ReactionNetwork net;
  const double kT_over_hbar = net.constants.k_B * temperature / net.constants.hbar;
  net.modes.push_back({"exc", cavkin::ModeRole::excited,
                       (x_ground + x_boson) * kT_over_hbar});
  net.modes.push_back({"gnd", cavkin::ModeRole::ground, x_ground * kT_over_hbar});
  net.modes.push_back({"bos", cavkin::ModeRole::boson, x_boson * kT_over_hbar});
  net.channels.push_back({0, 1, 2, {rate, rate, rate, rate}});
  net.reservoir.kappa = kappa;
  net.reservoir.environment = {temperature, 0.0};
  return net;
}

// n_trios independent (excited, ground, boson) trios; 3*n_trios modes.
inline cavkin::ReactionNetwork trio_array(const std::vector<double>& x_ground,
                                          const std::vector<double>& x_boson, double rate,
                                          double kappa, double temperature = 300.0) {
  cavkin::ReactionNetwork net;
  const double kT_over_hbar = net.constants.k_B * temperature / net.constants.hbar;
  for (std::size_t i = 0; i < x_ground.size(); ++i) {
    const int base = static_cast<int>(net.modes.size());
    const std::string tag = std::to_string(i);
    net.modes.push_back({"exc" + tag, cavkin::ModeRole::excited,
                         (x_ground[i] + x_boson[i]) * kT_over_hbar});
    net.modes.push_back({"gnd" + tag, cavkin::ModeRole::ground,
                         x_ground[i] * kT_over_hbar});
    net.modes.push_back({"bos" + tag, cavkin::ModeRole::boson,
                         x_boson[i] * kT_over_hbar});
    net.channels.push_back({base, base + 1, base + 2, {rate, rate, rate, rate}});
  }
  net.reservoir.kappa = kappa;
  net.reservoir.environment = {temperature, 0.0};
  return net;
}

}  // namespace cavkin_tests

#endif
