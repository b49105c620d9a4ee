#include "cavkin/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cavkin/dispersion.hpp"
#include "cavkin/errors.hpp"

namespace cavkin {

void CavitySpec::validate() const {
  for (double L : edge_lengths)
    if (!(L > 0.0) || !std::isfinite(L))
      throw DomainError("cavity edge lengths must be finite and > 0");
  if (!(temperature > 0.0)) throw DomainError("cavity temperature must be > 0");
}

namespace {

void check_band(double omega_center, double d_omega) {
  if (!(omega_center > 0.0)) throw DomainError("band center must be > 0");
  if (!(d_omega > 0.0)) throw DomainError("band width must be > 0");
  if (d_omega > 0.1 * omega_center)
    throw DomainError("band width must be narrow (d_omega <= omega_center/10)");
}

double band_density(const PhysicalConstants& pc, double omega, double nu,
                    double d_omega, double volume) {
  const double c3 = pc.c * pc.c * pc.c;
  return omega * nu / (M_PI * c3) * d_omega * volume;
}

}  // namespace

double resonance_count_in_band(const PhysicalConstants& pc, const Species& s,
                               double omega_center, double d_omega, double volume) {
  check_band(omega_center, d_omega);
  if (!(volume > 0.0)) throw DomainError("volume must be > 0");
  const double lower = pc.hbar * (omega_center - 0.5 * d_omega);
  if (lower <= s.rest_energy)
    throw DomainError("band straddles the rest energy of '" + s.name + "'");
  const double nu = nu_of_omega(pc, s, omega_center);
  return band_density(pc, omega_center, nu, d_omega, volume);
}

double resonance_count_in_band_kinetic(const PhysicalConstants& pc, const Species& s,
                                       double kinetic_center, double d_omega,
                                       double volume) {
  if (!(kinetic_center > 0.0))
    throw DomainError("band center must be above the rest energy");
  if (!(d_omega > 0.0)) throw DomainError("band width must be > 0");
  if (!(volume > 0.0)) throw DomainError("volume must be > 0");
  if (kinetic_center - 0.5 * pc.hbar * d_omega <= 0.0)
    throw DomainError("band straddles the rest energy of '" + s.name + "'");
  const double omega = omega_from_kinetic(pc, s, kinetic_center);
  const double nu = nu_from_kinetic(pc, s, kinetic_center);
  return band_density(pc, omega, nu, d_omega, volume);
}

namespace {

// Squared lattice radius (2 nu / c)^2 for the standing-wave grid
// nu(n) = (c/2) sqrt(sum (n_i/L_i)^2).
double lattice_rsq(const PhysicalConstants& pc, double nu) {
  const double r = 2.0 * nu / pc.c;
  return r * r;
}

}  // namespace

std::vector<Mode> enumerate_modes(const PhysicalConstants& pc, const Species& s,
                                  const CavitySpec& cavity, double nu_max) {
  if (!(nu_max > 0.0)) throw DomainError("nu_max must be > 0");
  cavity.validate();
  validate_species(s);

  const double expected =
      s.degeneracy * (4.0 * M_PI / 3.0) * std::pow(nu_max / pc.c, 3) * cavity.volume();
  if (expected * 1.3 + 64.0 > static_cast<double>(kEnumerationGuard))
    throw GuardError("enumerate_modes: expected mode count " +
                     std::to_string(static_cast<std::int64_t>(expected)) +
                     " exceeds the guard of " + std::to_string(kEnumerationGuard));

  const double rsq = lattice_rsq(pc, nu_max);
  const auto& L = cavity.edge_lengths;
  std::vector<Mode> modes;
  modes.reserve(static_cast<std::size_t>(std::max(expected, 16.0)));

  const int nx_max = static_cast<int>(std::floor(std::sqrt(rsq) * L[0]));
  for (int nx = 1; nx <= nx_max; ++nx) {
    const double x2 = (nx / L[0]) * (nx / L[0]);
    if (x2 > rsq) break;
    const int ny_max = static_cast<int>(std::floor(std::sqrt(rsq - x2) * L[1]));
    for (int ny = 1; ny <= ny_max; ++ny) {
      const double xy2 = x2 + (ny / L[1]) * (ny / L[1]);
      if (xy2 > rsq) break;
      const int nz_max = static_cast<int>(std::floor(std::sqrt(rsq - xy2) * L[2]));
      for (int nz = 1; nz <= nz_max; ++nz) {
        const double k2 = xy2 + (nz / L[2]) * (nz / L[2]);
        const double nu = 0.5 * pc.c * std::sqrt(k2);
        const double omega = omega_of_nu(pc, s, nu);
        for (int slot = 0; slot < s.degeneracy; ++slot) {
          if (static_cast<std::int64_t>(modes.size()) >= kEnumerationGuard)
            throw GuardError("enumerate_modes: mode count exceeded the guard");
          modes.push_back(Mode{s, nu, omega, slot, std::array<int, 3>{nx, ny, nz}});
        }
      }
    }
  }
  return modes;
}

std::int64_t lattice_count_below(const PhysicalConstants& pc, const Species& s,
                                 const CavitySpec& cavity, double nu) {
  if (nu <= 0.0) return 0;
  cavity.validate();
  const double rsq = lattice_rsq(pc, nu);
  const auto& L = cavity.edge_lengths;
  std::int64_t points = 0;
  const int nx_max = static_cast<int>(std::floor(std::sqrt(rsq) * L[0]));
  for (int nx = 1; nx <= nx_max; ++nx) {
    const double x2 = (nx / L[0]) * (nx / L[0]);
    if (x2 > rsq) break;
    const int ny_max = static_cast<int>(std::floor(std::sqrt(rsq - x2) * L[1]));
    for (int ny = 1; ny <= ny_max; ++ny) {
      const double xy2 = x2 + (ny / L[1]) * (ny / L[1]);
      if (xy2 > rsq) break;
      points += static_cast<std::int64_t>(std::floor(std::sqrt(rsq - xy2) * L[2]));
    }
  }
  return points * s.degeneracy;
}

std::int64_t lattice_count_in_band(const PhysicalConstants& pc, const Species& s,
                                   const CavitySpec& cavity, double omega_center,
                                   double d_omega) {
  check_band(omega_center, d_omega);
  const double nu_lo = nu_of_omega(pc, s, omega_center - 0.5 * d_omega);
  const double nu_hi = nu_of_omega(pc, s, omega_center + 0.5 * d_omega);
  return lattice_count_below(pc, s, cavity, nu_hi) -
         lattice_count_below(pc, s, cavity, nu_lo);
}

std::int64_t lattice_count_in_band_kinetic(const PhysicalConstants& pc, const Species& s,
                                           const CavitySpec& cavity,
                                           double kinetic_center, double d_omega) {
  if (!(kinetic_center > 0.0) || !(d_omega > 0.0))
    throw DomainError("invalid kinetic band");
  const double half = 0.5 * pc.hbar * d_omega;
  if (kinetic_center - half <= 0.0)
    throw DomainError("band straddles the rest energy of '" + s.name + "'");
  const double nu_lo = nu_from_kinetic(pc, s, kinetic_center - half);
  const double nu_hi = nu_from_kinetic(pc, s, kinetic_center + half);
  return lattice_count_below(pc, s, cavity, nu_hi) -
         lattice_count_below(pc, s, cavity, nu_lo);
}

namespace {

double pair_count_impl(const PhysicalConstants& pc, const SpeciesTriple& triple,
                       double omega_phi_center, double ground_kinetic_center,
                       double d_omega, double volume) {
  if (d_omega == 0.0) return 0.0;
  if (!(d_omega > 0.0)) throw DomainError("band width must be >= 0");
  if (!(volume > 0.0)) throw DomainError("volume must be > 0");
  if (ground_kinetic_center <= 0.0)
    throw DomainError("energy conservation unsolvable: no kinetic energy left for '" +
                      triple.ground.name + "'");
  const double count_phi =
      resonance_count_in_band(pc, triple.boson, omega_phi_center, d_omega, volume);
  const double count_a = resonance_count_in_band_kinetic(pc, triple.ground,
                                                         ground_kinetic_center, d_omega,
                                                         volume);
  return std::min(count_phi, count_a);
}

}  // namespace

double pair_count_in_band(const PhysicalConstants& pc, const SpeciesTriple& triple,
                          double omega_phi_center, double d_omega, double volume,
                          double excited_kinetic) {
  triple.validate();
  if (!(omega_phi_center > 0.0)) throw DomainError("photon band center must be > 0");
  // E_k(a) = (hbar omega_excited) - (hbar omega_phi) - M0 c^2, carried in
  // energy space relative to the transition.
  const double kinetic = triple.transition_energy + excited_kinetic -
                         pc.hbar * omega_phi_center;
  return pair_count_impl(pc, triple, omega_phi_center, kinetic, d_omega, volume);
}

double pair_count_in_band_detuned(const PhysicalConstants& pc, const SpeciesTriple& triple,
                                  double detuning, double d_omega, double volume,
                                  double excited_kinetic) {
  triple.validate();
  const double omega_phi_center = triple.transition_energy / pc.hbar + detuning;
  const double kinetic = excited_kinetic - pc.hbar * detuning;
  return pair_count_impl(pc, triple, omega_phi_center, kinetic, d_omega, volume);
}

}  // namespace cavkin
