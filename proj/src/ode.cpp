#include "cavkin/ode.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cavkin/errors.hpp"

namespace cavkin {

namespace {

void rhs(const ReactionNetwork& net, const SimState& state, std::vector<double>& dndt) {
  dndt.assign(state.occupations.size(), 0.0);
  for (const auto& ch : net.channels) {
    const ChannelPropensities p = channel_propensities(net, ch, state);
    const double net_R = p.total_R() - p.rate_L;  // flux along (exc) -> (gnd)+(bos)
    dndt[ch.excited_mode] -= net_R;
    dndt[ch.ground_mode] += net_R;
    dndt[ch.boson_mode] += net_R;
  }
  if (net.reservoir.kappa > 0.0) {
    for (std::size_t i = 0; i < net.modes.size(); ++i) {
      const ReservoirPropensities r = reservoir_propensities(
          net.constants, net.modes[i], state.occupations[i], net.reservoir);
      dndt[i] += r.birth - r.death;
    }
  }
}

}  // namespace

double propensity_scale(const ReactionNetwork& net, const SimState& state) {
  double scale = net.reservoir.kappa;
  for (const auto& ch : net.channels) {
    const double n_exc = state.occupations[ch.excited_mode];
    const double n_gnd = state.occupations[ch.ground_mode];
    const double n_bos = state.occupations[ch.boson_mode];
    // Bound on the Jacobian diagonal of the channel flux: each bilinear term
    // contributes its partner occupations.
    const double jac = ch.rates.alpha + ch.rates.beta_abs * std::max(n_bos, n_gnd) +
                       ch.rates.beta_em * (n_bos + n_exc) +
                       ch.rates.gamma * (n_gnd + n_exc);
    scale = std::max(scale, jac);
  }
  return scale;
}

SimState ode_step(const ReactionNetwork& net, const SimState& state, double dt) {
  const std::size_t n = state.occupations.size();
  std::vector<double> k1(n), k2(n), k3(n), k4(n);
  SimState tmp = state;

  rhs(net, state, k1);
  for (std::size_t i = 0; i < n; ++i)
    tmp.occupations[i] = state.occupations[i] + 0.5 * dt * k1[i];
  rhs(net, tmp, k2);
  for (std::size_t i = 0; i < n; ++i)
    tmp.occupations[i] = state.occupations[i] + 0.5 * dt * k2[i];
  rhs(net, tmp, k3);
  for (std::size_t i = 0; i < n; ++i)
    tmp.occupations[i] = state.occupations[i] + dt * k3[i];
  rhs(net, tmp, k4);

  SimState out = state;
  out.time = state.time + dt;
  for (std::size_t i = 0; i < n; ++i)
    out.occupations[i] =
        state.occupations[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

Trajectory run_ode(const ReactionNetwork& net, const SimState& initial,
                   const OdeConfig& cfg) {
  net.validate();
  if (initial.occupations.size() != net.modes.size())
    throw DomainError("initial state size does not match the network");
  for (double n : initial.occupations)
    if (!(n >= 0.0)) throw DomainError("initial occupations must be >= 0");
  if (!(cfg.dt > 0.0) || !(cfg.t_end > initial.time))
    throw GuardError("run_ode: need dt > 0 and t_end past the initial time");

  const double scale = propensity_scale(net, initial);
  if (cfg.dt * scale > 0.1)
    throw GuardError("run_ode: dt " + std::to_string(cfg.dt) +
                     " violates the stability guard dt <= 0.1/propensity-scale (scale " +
                     std::to_string(scale) + " 1/s)");

  const std::int64_t steps =
      static_cast<std::int64_t>(std::ceil((cfg.t_end - initial.time) / cfg.dt - 1e-9));
  std::int64_t sample_every = 1;
  if (cfg.sample_interval > 0.0)
    sample_every = std::max<std::int64_t>(1, std::llround(cfg.sample_interval / cfg.dt));

  Trajectory traj;
  traj.samples.push_back({initial.time, initial.occupations});

  SimState state = initial;
  for (std::int64_t step = 0; step < steps; ++step) {
    state = ode_step(net, state, cfg.dt);
    double max_occ = 1.0;
    for (double n : state.occupations) max_occ = std::max(max_occ, n);
    for (double& n : state.occupations) {
      if (n < 0.0) {
        if (n < -1e-9 * max_occ)
          throw GuardError("run_ode: occupation went negative beyond tolerance");
        n = 0.0;
        ++traj.clamp_events;
      }
    }
    if ((step + 1) % sample_every == 0 || step + 1 == steps)
      traj.samples.push_back({state.time, state.occupations});
  }
  traj.end_time = state.time;
  traj.total_events = steps;
  return traj;
}

}  // namespace cavkin
