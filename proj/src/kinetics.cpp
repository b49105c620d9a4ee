#include "cavkin/kinetics.hpp"

#include <cmath>
#include <string>

#include "cavkin/errors.hpp"

namespace cavkin {

void ReactionNetwork::validate() const {
  constants.validate();
  if (modes.empty()) throw DomainError("network needs at least one mode");
  for (const auto& m : modes) {
    if (m.label.empty()) throw DomainError("network modes need labels");
    if (!(m.omega > 0.0) || !std::isfinite(m.omega))
      throw DomainError("mode '" + m.label + "': omega must be finite and > 0");
  }
  const int n = static_cast<int>(modes.size());
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const auto& ch = channels[i];
    const std::string tag = "channel " + std::to_string(i);
    auto check_index = [&](int idx, ModeRole role, const char* what) {
      if (idx < 0 || idx >= n) throw DomainError(tag + ": bad " + what + " mode index");
      if (modes[idx].role != role)
        throw DomainError(tag + ": " + what + " mode has the wrong role");
    };
    check_index(ch.excited_mode, ModeRole::excited, "excited");
    check_index(ch.ground_mode, ModeRole::ground, "ground");
    check_index(ch.boson_mode, ModeRole::boson, "boson");
    const double w_exc = modes[ch.excited_mode].omega;
    const double w_sum = modes[ch.ground_mode].omega + modes[ch.boson_mode].omega;
    if (std::abs(w_exc - w_sum) > conservation_rtol * w_exc)
      throw DomainError(tag + ": energy conservation violated");
    if (ch.rates.alpha < 0.0 || ch.rates.beta_abs < 0.0 || ch.rates.beta_em < 0.0 ||
        ch.rates.gamma < 0.0)
      throw DomainError(tag + ": negative micro-rate");
  }
  if (reservoir.kappa < 0.0) throw DomainError("reservoir kappa must be >= 0");
  if (reservoir.kappa > 0.0) reservoir.environment.validate();
}

ChannelPropensities channel_propensities(const ReactionNetwork& net,
                                         const ReactionChannel& ch,
                                         const SimState& state) {
  const double n_exc = state.occupations[ch.excited_mode];
  const double n_gnd = state.occupations[ch.ground_mode];
  const double n_bos = state.occupations[ch.boson_mode];
  ChannelPropensities p;
  p.rate_L = ch.rates.beta_abs * n_bos * n_gnd;
  p.rate_R_spont = ch.rates.alpha * n_exc;
  p.rate_R_photon = ch.rates.beta_em * n_bos * n_exc;
  p.rate_R_atom = ch.rates.gamma * n_gnd * n_exc;
  (void)net;
  return p;
}

double equilibrium_residual(const ReactionNetwork& net, const ReactionChannel& ch,
                            const SimState& state) {
  const ChannelPropensities p = channel_propensities(net, ch, state);
  return p.rate_L - p.total_R();
}

ReservoirPropensities reservoir_propensities(const PhysicalConstants& pc,
                                             const NetworkMode& mode, double n,
                                             const ReservoirCoupling& coupling) {
  if (coupling.kappa < 0.0) throw DomainError("reservoir kappa must be >= 0");
  if (coupling.kappa == 0.0) return {0.0, 0.0};
  const double x =
      pc.hbar * mode.omega / (pc.k_B * coupling.environment.temperature);
  return {coupling.kappa * std::exp(-x) * (n + 1.0), coupling.kappa * n};
}

SimState be_equilibrium_state(const ReactionNetwork& net) {
  net.validate();
  const ThermalEnvironment& env = net.reservoir.environment;
  env.validate();
  SimState s;
  s.occupations.reserve(net.modes.size());
  for (const auto& m : net.modes)
    s.occupations.push_back(bose_occupation(net.constants, m.omega, env));
  return s;
}

ClassTotals class_totals(const ReactionNetwork& net, const SimState& state) {
  ClassTotals t;
  double excited = 0.0, ground = 0.0, boson = 0.0;
  for (std::size_t i = 0; i < net.modes.size(); ++i) {
    switch (net.modes[i].role) {
      case ModeRole::excited: excited += state.occupations[i]; break;
      case ModeRole::ground: ground += state.occupations[i]; break;
      case ModeRole::boson: boson += state.occupations[i]; break;
    }
  }
  t.ground_plus_excited = ground + excited;
  t.boson_plus_excited = boson + excited;
  return t;
}

}  // namespace cavkin
