#ifndef CAVKIN_DISPERSION_HPP
#define CAVKIN_DISPERSION_HPP

#include "cavkin/constants.hpp"
#include "cavkin/species.hpp"

namespace cavkin {

// hbar*omega = sqrt((M c^2)^2 + (2 pi hbar nu)^2); photons reduce to
// omega = 2 pi nu. nu is defined through 2 pi nu = c |k| for every species.
double omega_of_nu(const PhysicalConstants& pc, const Species& s, double nu);

// Inverse of omega_of_nu. Requires hbar*omega >= M c^2.
double nu_of_omega(const PhysicalConstants& pc, const Species& s, double omega);

// E_k = hbar*omega - M c^2.
double kinetic_energy(const PhysicalConstants& pc, const Species& s, double omega);

// Cancellation-free forms parameterized by kinetic energy. Near the rest
// energy (E_k << M c^2) the subtraction hbar*omega - M c^2 loses all
// precision in double; these use 2 pi hbar nu = sqrt(E_k (E_k + 2 M c^2)).
double nu_from_kinetic(const PhysicalConstants& pc, const Species& s, double kinetic);
double omega_from_kinetic(const PhysicalConstants& pc, const Species& s, double kinetic);
double kinetic_from_nu(const PhysicalConstants& pc, const Species& s, double nu);

}  // namespace cavkin

#endif
