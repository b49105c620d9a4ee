#ifndef CAVKIN_SSA_HPP
#define CAVKIN_SSA_HPP

#include <cstdint>

#include "cavkin/kinetics.hpp"
#include "cavkin/trajectory.hpp"

namespace cavkin {

struct SsaConfig {
  std::uint64_t seed = 1;
  double t_end = 0.0;
  std::int64_t max_events = 0;   // 0 = unbounded (t_end governs)
  double sample_interval = 0.0;  // 0 = record only initial and final states
  double average_burn_in_fraction = 0.0;  // of t_end, for time averages
};

// Derive a child seed for trajectory k of an ensemble (splitmix64 mix).
std::uint64_t ensemble_seed(std::uint64_t base_seed, std::uint64_t index);

// Exact stochastic simulation (Gillespie direct method): exponential waiting
// times from the total propensity, event picked by a single uniform draw via
// a cumulative scan in fixed channel order. Reaction L does
// (n_a-1, n_phi-1, n_exc+1); any R event the reverse; reservoir events are
// +/-1 on one mode. Bit-reproducible for a given (network, state, config).
Trajectory run_ssa(const ReactionNetwork& net, const SimState& initial,
                   const SsaConfig& cfg);

}  // namespace cavkin

#endif
