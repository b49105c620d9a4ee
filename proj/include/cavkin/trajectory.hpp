#ifndef CAVKIN_TRAJECTORY_HPP
#define CAVKIN_TRAJECTORY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cavkin {

struct TrajectorySample {
  double time = 0.0;
  std::vector<double> occupations;
};

// Event bookkeeping per channel: index 0 = L (absorption), 1 = R spontaneous,
// 2 = R photon-stimulated, 3 = R atom-stimulated (forgotten).
enum ChannelEventKind { kEventL = 0, kEventRSpont = 1, kEventRPhoton = 2, kEventRAtom = 3 };

struct EventTally {
  std::vector<std::array<std::int64_t, 4>> per_channel;
  std::int64_t reservoir_births = 0;
  std::int64_t reservoir_deaths = 0;

  std::array<std::int64_t, 4> channel_totals() const;
  std::int64_t total() const;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;

  // SSA only: counts and the exact propensity time-integrals (the expected
  // counts conditional on the path), same indexing as EventTally.
  EventTally events;
  std::vector<std::array<double, 4>> propensity_integrals;
  double reservoir_birth_integral = 0.0;
  double reservoir_death_integral = 0.0;

  // Time-weighted occupation averages over [burn_in, end]; filled by the SSA.
  std::vector<double> time_averaged_occupations;
  double averaging_window = 0.0;

  // ODE only: occupations clamped to zero this many times.
  std::int64_t clamp_events = 0;

  std::uint64_t seed = 0;
  std::string config_hash;
  double end_time = 0.0;
  bool extinct = false;  // SSA ran out of propensity before t_end
  std::int64_t total_events = 0;
};

}  // namespace cavkin

#endif
