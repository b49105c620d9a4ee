#include "cavkin/ssa.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "cavkin/errors.hpp"

namespace cavkin {

namespace {

// Uniform in [0, 1) built from the raw 64-bit stream; avoids the
// implementation-defined std::uniform_real_distribution so trajectories are
// bit-reproducible across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct EventIndex {
  // Channel events first (4 per channel, EventTally order), then per-mode
  // reservoir birth/death pairs.
  std::size_t channel_count;
  std::size_t mode_count;

  std::size_t total() const { return 4 * channel_count + 2 * mode_count; }
};

}  // namespace

std::uint64_t ensemble_seed(std::uint64_t base_seed, std::uint64_t index) {
  // splitmix64 mix of (base, index).
  std::uint64_t z = base_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Trajectory run_ssa(const ReactionNetwork& net, const SimState& initial,
                   const SsaConfig& cfg) {
  net.validate();
  if (initial.occupations.size() != net.modes.size())
    throw DomainError("initial state size does not match the network");
  for (double n : initial.occupations) {
    if (!(n >= 0.0) || std::floor(n) != n)
      throw DomainError("SSA initial occupations must be nonnegative integers");
  }
  if (!(cfg.t_end > initial.time))
    throw GuardError("run_ssa: t_end must be past the initial time");

  const EventIndex layout{net.channels.size(), net.modes.size()};
  std::vector<double> propensities(layout.total(), 0.0);

  Trajectory traj;
  traj.seed = cfg.seed;
  traj.events.per_channel.assign(net.channels.size(), {0, 0, 0, 0});
  traj.propensity_integrals.assign(net.channels.size(), {0.0, 0.0, 0.0, 0.0});

  std::mt19937_64 rng(cfg.seed);
  SimState state = initial;

  const double burn_in =
      initial.time + cfg.average_burn_in_fraction * (cfg.t_end - initial.time);
  std::vector<double> occupation_time(net.modes.size(), 0.0);
  double averaged_window = 0.0;

  double next_sample = cfg.sample_interval > 0.0 ? initial.time + cfg.sample_interval
                                                 : cfg.t_end;
  traj.samples.push_back({state.time, state.occupations});

  auto fill_propensities = [&]() {
    double total = 0.0;
    for (std::size_t c = 0; c < net.channels.size(); ++c) {
      const ChannelPropensities p = channel_propensities(net, net.channels[c], state);
      propensities[4 * c + kEventL] = p.rate_L;
      propensities[4 * c + kEventRSpont] = p.rate_R_spont;
      propensities[4 * c + kEventRPhoton] = p.rate_R_photon;
      propensities[4 * c + kEventRAtom] = p.rate_R_atom;
      total += p.rate_L + p.rate_R_spont + p.rate_R_photon + p.rate_R_atom;
    }
    if (net.reservoir.kappa > 0.0) {
      for (std::size_t i = 0; i < net.modes.size(); ++i) {
        const ReservoirPropensities r = reservoir_propensities(
            net.constants, net.modes[i], state.occupations[i], net.reservoir);
        propensities[4 * layout.channel_count + 2 * i] = r.birth;
        propensities[4 * layout.channel_count + 2 * i + 1] = r.death;
        total += r.birth + r.death;
      }
    }
    return total;
  };

  auto account = [&](double t_from, double t_to) {
    // Propensities are constant between events: exact integrals and exact
    // time-weighted occupation averages.
    const double dt = t_to - t_from;
    if (dt <= 0.0) return;
    for (std::size_t c = 0; c < net.channels.size(); ++c)
      for (int k = 0; k < 4; ++k)
        traj.propensity_integrals[c][k] += propensities[4 * c + k] * dt;
    if (net.reservoir.kappa > 0.0) {
      for (std::size_t i = 0; i < net.modes.size(); ++i) {
        traj.reservoir_birth_integral +=
            propensities[4 * layout.channel_count + 2 * i] * dt;
        traj.reservoir_death_integral +=
            propensities[4 * layout.channel_count + 2 * i + 1] * dt;
      }
    }
    const double avg_from = std::max(t_from, burn_in);
    if (t_to > avg_from) {
      const double w = t_to - avg_from;
      for (std::size_t i = 0; i < net.modes.size(); ++i)
        occupation_time[i] += state.occupations[i] * w;
      averaged_window += w;
    }
  };

  auto emit_samples_until = [&](double t) {
    while (cfg.sample_interval > 0.0 && next_sample <= t && next_sample <= cfg.t_end) {
      traj.samples.push_back({next_sample, state.occupations});
      next_sample += cfg.sample_interval;
    }
  };

  while (state.time < cfg.t_end) {
    if (cfg.max_events > 0 && traj.total_events >= cfg.max_events) break;
    const double total = fill_propensities();
    if (total <= 0.0) {
      // Extinction: nothing can fire anymore.
      account(state.time, cfg.t_end);
      emit_samples_until(cfg.t_end);
      state.time = cfg.t_end;
      traj.extinct = true;
      break;
    }
    const double wait = -std::log(1.0 - uniform01(rng)) / total;
    double t_next = state.time + wait;
    if (t_next > cfg.t_end) {
      account(state.time, cfg.t_end);
      emit_samples_until(cfg.t_end);
      state.time = cfg.t_end;
      break;
    }
    account(state.time, t_next);
    emit_samples_until(t_next);

    // Pick the event by a cumulative scan in fixed order.
    const double target = uniform01(rng) * total;
    double cumulative = 0.0;
    std::size_t picked = layout.total() - 1;
    for (std::size_t e = 0; e < layout.total(); ++e) {
      cumulative += propensities[e];
      if (target < cumulative) {
        picked = e;
        break;
      }
    }

    if (picked < 4 * layout.channel_count) {
      const std::size_t c = picked / 4;
      const int kind = static_cast<int>(picked % 4);
      const auto& ch = net.channels[c];
      if (kind == kEventL) {
        state.occupations[ch.ground_mode] -= 1.0;
        state.occupations[ch.boson_mode] -= 1.0;
        state.occupations[ch.excited_mode] += 1.0;
      } else {
        state.occupations[ch.excited_mode] -= 1.0;
        state.occupations[ch.ground_mode] += 1.0;
        state.occupations[ch.boson_mode] += 1.0;
      }
      ++traj.events.per_channel[c][kind];
    } else {
      const std::size_t r = picked - 4 * layout.channel_count;
      const std::size_t mode = r / 2;
      if (r % 2 == 0) {
        state.occupations[mode] += 1.0;
        ++traj.events.reservoir_births;
      } else {
        state.occupations[mode] -= 1.0;
        ++traj.events.reservoir_deaths;
      }
    }
    state.time = t_next;
    ++traj.total_events;
  }

  if (traj.samples.empty() || traj.samples.back().time < state.time)
    traj.samples.push_back({state.time, state.occupations});
  traj.end_time = state.time;
  if (averaged_window > 0.0) {
    traj.time_averaged_occupations.resize(net.modes.size());
    for (std::size_t i = 0; i < net.modes.size(); ++i)
      traj.time_averaged_occupations[i] = occupation_time[i] / averaged_window;
    traj.averaging_window = averaged_window;
  }
  return traj;
}

std::array<std::int64_t, 4> EventTally::channel_totals() const {
  std::array<std::int64_t, 4> t{0, 0, 0, 0};
  for (const auto& c : per_channel)
    for (int k = 0; k < 4; ++k) t[k] += c[k];
  return t;
}

std::int64_t EventTally::total() const {
  const auto t = channel_totals();
  return t[0] + t[1] + t[2] + t[3] + reservoir_births + reservoir_deaths;
}

}  // namespace cavkin
