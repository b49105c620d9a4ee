#ifndef CAVKIN_ODE_HPP
#define CAVKIN_ODE_HPP

#include "cavkin/kinetics.hpp"
#include "cavkin/trajectory.hpp"

namespace cavkin {

struct OdeConfig {
  double dt = 0.0;               // fixed RK4 step, s
  double t_end = 0.0;            // s
  double sample_interval = 0.0;  // 0 = sample every step
};

// Largest per-mode relaxation-rate estimate at the given state; the RK4
// stability guard requires dt <= 0.1 / scale.
double propensity_scale(const ReactionNetwork& net, const SimState& state);

// Mean-field occupation ODE d n/dt from channel and reservoir propensities,
// integrated with classical fixed-step RK4. Occupations are clamped at 0
// (clamps counted); excursions below -1e-9 * max(n,1) abort with GuardError.
Trajectory run_ode(const ReactionNetwork& net, const SimState& initial,
                   const OdeConfig& cfg);

// One RK4 step (exposed for convergence tests).
SimState ode_step(const ReactionNetwork& net, const SimState& state, double dt);

}  // namespace cavkin

#endif
