#include "cavkin/statistics.hpp"

#include <cmath>

#include "cavkin/dispersion.hpp"
#include "cavkin/errors.hpp"

namespace cavkin {

void ThermalEnvironment::validate() const {
  if (!(temperature > 0.0)) throw DomainError("temperature must be > 0");
  if (!std::isfinite(chemical_potential))
    throw DomainError("chemical potential must be finite");
}

double bose_occupation_x(double z) {
  if (!(z > 0.0)) throw DomainError("bose occupation diverges for hbar*omega <= mu");
  // expm1 keeps small z accurate; for z beyond ~709 it overflows to inf and
  // the occupation cleanly underflows to 0.
  return 1.0 / std::expm1(z);
}

double log_bose_occupation_x(double z) {
  if (!(z > 0.0)) throw DomainError("bose occupation diverges for hbar*omega <= mu");
  // log n = -z - log(1 - e^{-z}).
  return -z - std::log1p(-std::exp(-z));
}

namespace {

double reduced_energy(const PhysicalConstants& pc, double omega,
                      const ThermalEnvironment& env) {
  env.validate();
  return (pc.hbar * omega - env.chemical_potential) / (pc.k_B * env.temperature);
}

}  // namespace

double bose_occupation(const PhysicalConstants& pc, double omega,
                       const ThermalEnvironment& env) {
  return bose_occupation_x(reduced_energy(pc, omega, env));
}

double log_bose_occupation(const PhysicalConstants& pc, double omega,
                           const ThermalEnvironment& env) {
  return log_bose_occupation_x(reduced_energy(pc, omega, env));
}

double spectral_energy_density(const PhysicalConstants& pc, const Species& s,
                               double omega, const ThermalEnvironment& env) {
  const double energy = pc.hbar * omega;
  if (s.is_massless()) {
    if (!(omega > 0.0)) throw DomainError("spectral density needs omega > 0");
  } else if (energy <= s.rest_energy) {
    throw DomainError("spectral density needs hbar*omega above the rest energy");
  }
  const double nu = nu_of_omega(pc, s, omega);
  const double c3 = pc.c * pc.c * pc.c;
  return s.degeneracy * (4.0 * M_PI * nu * nu / c3) * energy *
         bose_occupation(pc, omega, env);
}

double angular_spectral_density(const PhysicalConstants& pc, const Species& s,
                                double omega, const ThermalEnvironment& env) {
  const double nu = nu_of_omega(pc, s, omega);
  if (nu == 0.0)
    throw DomainError("angular spectral density singular at the rest energy");
  // dnu/domega = omega / (4 pi^2 nu); reduces to 1/(2 pi) for photons.
  return spectral_energy_density(pc, s, omega, env) * omega / (4.0 * M_PI * M_PI * nu);
}

PopulationRatio equilibrium_population_ratio(const PhysicalConstants& pc,
                                             const SpeciesTriple& triple,
                                             const ThermalEnvironment& env) {
  triple.validate();
  env.validate();
  const double kT = pc.k_B * env.temperature;
  const double x_ground = triple.ground.rest_energy / kT;
  const double x_excited = triple.excited.rest_energy / kT;
  const double log_deg =
      std::log(static_cast<double>(triple.excited.degeneracy) / triple.ground.degeneracy);

  PopulationRatio r{};
  // log[(e^{x_g} - 1)/(e^{x_e} - 1)] = (x_g - x_e) + log1p(-e^{-x_g}) - log1p(-e^{-x_e}).
  r.log_boltzmann = log_deg - triple.transition_energy / kT;
  const double be_correction =
      std::log1p(-std::exp(-x_ground)) - std::log1p(-std::exp(-x_excited));
  r.log_exact = r.log_boltzmann + be_correction;
  r.exact = std::exp(r.log_exact);
  r.boltzmann = std::exp(r.log_boltzmann);
  return r;
}

double occupancy_temperature(const PhysicalConstants& pc, double omega, double n_target) {
  if (!(omega > 0.0)) throw DomainError("occupancy_temperature: omega must be > 0");
  if (!(n_target > 0.0)) throw DomainError("occupancy_temperature: n_target must be > 0");
  return pc.hbar * omega / (pc.k_B * std::log1p(1.0 / n_target));
}

double detailed_balance_log_gap(double x_a, double x_phi) {
  const double log_na = log_bose_occupation_x(x_a);
  const double log_nphi = log_bose_occupation_x(x_phi);
  const double log_nexc = log_bose_occupation_x(x_a + x_phi);
  // n_a and n_phi may underflow as doubles; their sum is what log1p needs
  // and both are <= 1 whenever they matter here, so add exponentials only
  // when representable.
  const double n_a = std::exp(log_na);
  const double n_phi = std::exp(log_nphi);
  return log_na + log_nphi - log_nexc - std::log1p(n_a + n_phi);
}

}  // namespace cavkin
