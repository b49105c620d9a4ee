#ifndef CAVKIN_STATISTICS_HPP
#define CAVKIN_STATISTICS_HPP

#include "cavkin/constants.hpp"
#include "cavkin/species.hpp"

namespace cavkin {

struct ThermalEnvironment {
  double temperature = 0.0;        // K, > 0
  double chemical_potential = 0.0; // J; mu = 0 for freely created/annihilated quanta

  void validate() const;
};

// n(z) = 1/(e^z - 1) and log n(z), stable from z ~ 1e-12 up to overflow
// (log form valid for any z > 0).
double bose_occupation_x(double z);
double log_bose_occupation_x(double z);

// Mean quanta per mode, n = 1/(e^{(hbar omega - mu)/k_B T} - 1).
double bose_occupation(const PhysicalConstants& pc, double omega,
                       const ThermalEnvironment& env);
double log_bose_occupation(const PhysicalConstants& pc, double omega,
                           const ThermalEnvironment& env);

// Energy per volume per unit nu-interval:
// rho = d * (4 pi nu^2 / c^3) * hbar omega * n(omega). Photon case is
// Planck's law.
double spectral_energy_density(const PhysicalConstants& pc, const Species& s,
                               double omega, const ThermalEnvironment& env);

// Per unit omega-interval: rho~ = rho * dnu/domega with
// dnu/domega = omega / (4 pi^2 nu) from the dispersion relation.
double angular_spectral_density(const PhysicalConstants& pc, const Species& s,
                                double omega, const ThermalEnvironment& env);

struct PopulationRatio {
  double log_exact;      // log of N_excited / N_ground with BE occupations at rest
  double log_boltzmann;  // log of (d_exc/d_gnd) e^{-hbar omega_0 / k_B T}
  double exact;          // exp(log_exact); underflows to 0 for huge rest energies
  double boltzmann;
};

// N_excited/N_ground for the triple with both species at rest, plus the
// Maxwell-Boltzmann approximation. The relative gap is bounded by
// 2 e^{-ground.rest_energy/k_B T}.
PopulationRatio equilibrium_population_ratio(const PhysicalConstants& pc,
                                             const SpeciesTriple& triple,
                                             const ThermalEnvironment& env);

// Temperature at which a mode of energy hbar*omega holds n_target quanta:
// T = hbar omega / (k_B ln(1 + 1/n_target)).
double occupancy_temperature(const PhysicalConstants& pc, double omega, double n_target);

// log(n(x_a) n(x_phi)) - log(n(x_a + x_phi) (1 + n(x_a) + n(x_phi))),
// computed without underflow for arbitrarily large x. Zero in exact
// arithmetic: this is the algebraic core of detailed balance for the
// reaction a*phi <-> a + phi at Bose-Einstein occupations.
double detailed_balance_log_gap(double x_a, double x_phi);

}  // namespace cavkin

#endif
