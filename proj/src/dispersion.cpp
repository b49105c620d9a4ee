#include "cavkin/dispersion.hpp"

#include <cmath>
#include <limits>

#include "cavkin/errors.hpp"

namespace cavkin {

double omega_of_nu(const PhysicalConstants& pc, const Species& s, double nu) {
  if (!(nu >= 0.0)) throw DomainError("omega_of_nu: nu must be >= 0");
  const double pcnu = 2.0 * M_PI * pc.hbar * nu;  // momentum * c, J
  if (s.is_massless()) return 2.0 * M_PI * nu;
  return std::hypot(s.rest_energy, pcnu) / pc.hbar;
}

namespace {

// Total energies within a few ulp of the rest energy are indistinguishable
// from it in double; treat them as exactly at rest. Kinetic energies below
// this resolution must go through the *_from_kinetic forms.
double rest_slack(double rest_energy) {
  return 4.0 * std::numeric_limits<double>::epsilon() * rest_energy;
}

}  // namespace

double nu_of_omega(const PhysicalConstants& pc, const Species& s, double omega) {
  const double energy = pc.hbar * omega;
  if (s.is_massless()) {
    if (!(omega >= 0.0)) throw DomainError("nu_of_omega: omega must be >= 0");
    return omega / (2.0 * M_PI);
  }
  if (energy < s.rest_energy - rest_slack(s.rest_energy))
    throw DomainError("nu_of_omega: hbar*omega below rest energy of '" + s.name + "'");
  if (energy <= s.rest_energy + rest_slack(s.rest_energy)) return 0.0;
  // (hbar omega)^2 - (Mc^2)^2 factored to avoid squaring large energies.
  const double pcnu = std::sqrt((energy - s.rest_energy) * (energy + s.rest_energy));
  return pcnu / (2.0 * M_PI * pc.hbar);
}

double kinetic_energy(const PhysicalConstants& pc, const Species& s, double omega) {
  const double energy = pc.hbar * omega;
  if (energy < s.rest_energy - rest_slack(s.rest_energy))
    throw DomainError("kinetic_energy: hbar*omega below rest energy of '" + s.name + "'");
  if (energy <= s.rest_energy + rest_slack(s.rest_energy)) return 0.0;
  return energy - s.rest_energy;
}

double kinetic_from_nu(const PhysicalConstants& pc, const Species& s, double nu) {
  if (!(nu >= 0.0)) throw DomainError("kinetic_from_nu: nu must be >= 0");
  const double pcnu = 2.0 * M_PI * pc.hbar * nu;
  // E_k = (pc)^2 / (hbar omega + Mc^2), exact near the rest energy.
  return pcnu * pcnu / (std::hypot(s.rest_energy, pcnu) + s.rest_energy);
}

double nu_from_kinetic(const PhysicalConstants& pc, const Species& s, double kinetic) {
  if (!(kinetic >= 0.0)) throw DomainError("nu_from_kinetic: kinetic energy must be >= 0");
  const double pcnu = std::sqrt(kinetic * (kinetic + 2.0 * s.rest_energy));
  return pcnu / (2.0 * M_PI * pc.hbar);
}

double omega_from_kinetic(const PhysicalConstants& pc, const Species& s, double kinetic) {
  if (!(kinetic >= 0.0)) throw DomainError("omega_from_kinetic: kinetic energy must be >= 0");
  return (s.rest_energy + kinetic) / pc.hbar;
}

}  // namespace cavkin
