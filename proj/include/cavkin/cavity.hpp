#ifndef CAVKIN_CAVITY_HPP
#define CAVKIN_CAVITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cavkin/constants.hpp"
#include "cavkin/species.hpp"

namespace cavkin {

// Rectangular ideal cavity with perfectly reflecting walls. Standing-wave
// quantization k_i = pi n_i / L_i, n_i >= 1.
struct CavitySpec {
  std::array<double, 3> edge_lengths{};  // m
  double temperature = 0.0;              // K

  double volume() const { return edge_lengths[0] * edge_lengths[1] * edge_lengths[2]; }
  void validate() const;
};

// One resonant cavity state of one species and one degeneracy slot.
struct Mode {
  Species species;
  double nu = 0.0;     // Hz
  double omega = 0.0;  // rad/s
  int degeneracy_slot = 0;
  std::optional<std::array<int, 3>> lattice_index;
};

// Continuum count of resonant nu values in [omega - d_omega/2, omega + d_omega/2]:
// (omega * nu / (pi c^3)) * d_omega * V. Degeneracy is NOT included; multiply
// by species.degeneracy for the mode count. For photons this equals
// (4 pi nu^2 / c^3) dnu V with dnu = d_omega / 2 pi.
double resonance_count_in_band(const PhysicalConstants& pc, const Species& s,
                               double omega_center, double d_omega, double volume);

// Same count parameterized by the kinetic energy at band center (exact near
// the rest energy where omega_center is not representable).
double resonance_count_in_band_kinetic(const PhysicalConstants& pc, const Species& s,
                                       double kinetic_center, double d_omega,
                                       double volume);

inline constexpr std::int64_t kEnumerationGuard = 10'000'000;

// All standing-wave modes with nu <= nu_max, each lattice point repeated once
// per degeneracy slot. Throws GuardError if the estimated count exceeds
// kEnumerationGuard.
std::vector<Mode> enumerate_modes(const PhysicalConstants& pc, const Species& s,
                                  const CavitySpec& cavity, double nu_max);

// Number of lattice modes (including degeneracy) with nu(n) <= nu, computed
// column-by-column without materializing the lattice.
std::int64_t lattice_count_below(const PhysicalConstants& pc, const Species& s,
                                 const CavitySpec& cavity, double nu);

// Lattice modes with omega in (omega_center - d_omega/2, omega_center + d_omega/2].
std::int64_t lattice_count_in_band(const PhysicalConstants& pc, const Species& s,
                                   const CavitySpec& cavity, double omega_center,
                                   double d_omega);
std::int64_t lattice_count_in_band_kinetic(const PhysicalConstants& pc, const Species& s,
                                           const CavitySpec& cavity,
                                           double kinetic_center, double d_omega);

// Count of (nu_a, nu_phi) resonance pairs that satisfy energy conservation
// omega_excited = omega_a + omega_phi with omega_phi in the band of width
// d_omega around omega_phi_center: min(dN_phi, dN_a). The excited state is
// taken at rest plus excited_kinetic. Returns 0 for a zero-width band.
double pair_count_in_band(const PhysicalConstants& pc, const SpeciesTriple& triple,
                          double omega_phi_center, double d_omega, double volume,
                          double excited_kinetic = 0.0);

// Exact-detuning variant: the photon band center is transition_energy/hbar
// plus detuning. Use when |detuning| is far below one ulp of omega_phi
// (e.g. the 1e-13 eV kinetic energies against GeV rest masses).
double pair_count_in_band_detuned(const PhysicalConstants& pc, const SpeciesTriple& triple,
                                  double detuning, double d_omega, double volume,
                                  double excited_kinetic = 0.0);

}  // namespace cavkin

#endif
