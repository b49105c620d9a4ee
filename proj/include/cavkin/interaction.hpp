#ifndef CAVKIN_INTERACTION_HPP
#define CAVKIN_INTERACTION_HPP

#include "cavkin/cavity.hpp"
#include "cavkin/constants.hpp"
#include "cavkin/line_shape.hpp"
#include "cavkin/species.hpp"

namespace cavkin {

// Per-channel micro-rates for one (m, n, k) mode combination. Energy
// conservation at equilibrium forces all four equal; they are kept as
// separate fields so perturbation tests can break the equality on purpose.
struct RateSet {
  double alpha = 0.0;     // spontaneous decay, 1/s
  double beta_abs = 0.0;  // absorption
  double beta_em = 0.0;   // decay stimulated by the photon mode
  double gamma = 0.0;     // decay stimulated by the ground-state matter mode
};

// One radiative decay channel: species triple, spontaneous lifetime, line
// shape and host cavity. excited_kinetic is the kinetic energy of the
// excited-state mode (0 = at rest); it fixes omega_excited and thereby which
// photon detunings conserve energy.
struct DecayChannel {
  SpeciesTriple triple;
  double t_sp = 0.0;  // spontaneous lifetime, s
  LineShape line;
  CavitySpec cavity;
  double excited_kinetic = 0.0;  // J

  void validate(const PhysicalConstants& pc) const;

  // Total energy of the excited mode, J.
  double excited_energy() const { return triple.excited.rest_energy + excited_kinetic; }
  // Kinetic energy left to the ground-state atom when the photon carries
  // hbar*omega_phi. Computed in energy space; throws DomainError if <= 0.
  double ground_kinetic(const PhysicalConstants& pc, double omega_phi) const;
  // Same with the photon expressed as offset from the line center (exact
  // for grid sums).
  double ground_kinetic_at_offset(const PhysicalConstants& pc, double delta) const;
};

// alpha = pi c^3 / (d_phi d_a omega_phi nu_phi) * (1/t_sp) * f(omega_phi - center) / V,
// replicated into all four fields.
RateSet micro_rate(const PhysicalConstants& pc, const DecayChannel& ch, double omega_phi);

// Probability per unit time of stimulated decay towards the d_a ground modes
// of equal energy, driven by per-mode photon energy density u_k (J/m^3).
double w_em(const PhysicalConstants& pc, const DecayChannel& ch, double u_k,
            double omega_phi);

// Absorption of a photon in mode k by a ground-state atom: (d_exc/d_a) * w_em.
double w_abs(const PhysicalConstants& pc, const DecayChannel& ch, double u_k,
             double omega_phi);

// The forgotten process: decay into a given matter mode n (energy density
// u_n), summed over the d_phi photon modes of equal energy.
double w_forgotten(const PhysicalConstants& pc, const DecayChannel& ch, double u_n,
                   double omega_a);
// Cancellation-free variant: the ground mode identified by its kinetic energy.
double w_forgotten_kinetic(const PhysicalConstants& pc, const DecayChannel& ch,
                           double u_n, double ground_kinetic);

// A = 1/t_sp.
double einstein_A(const DecayChannel& ch);

// B_em = (1/d_phi) c^3 / (4 pi hbar omega_phi0 nu_phi0^2) / t_sp
// (multiplies the spectral density per unit nu).
double einstein_B_em(const PhysicalConstants& pc, const DecayChannel& ch);

// B_abs = (d_exc / d_a) B_em.
double einstein_B_abs(const PhysicalConstants& pc, const DecayChannel& ch);

// C = (1/d_a) c^3 / (4 pi hbar omega_a0 nu_a0^2) / t_sp with
// omega_a0 = omega_excited - line center. Requires positive ground kinetic
// energy at the line center.
double coefficient_C(const PhysicalConstants& pc, const DecayChannel& ch);

// Broad-band reconstruction: rebuild a coefficient from the per-mode W's
// summed over the line grid against a flat ambient spectrum, versus the
// closed form. rel_error carries sign (grid sum minus closed form).
struct BroadbandRebuild {
  double closed_form = 0.0;
  double grid_sum = 0.0;
  double rel_error = 0.0;
};

BroadbandRebuild rebuild_B_em(const PhysicalConstants& pc, const DecayChannel& ch);
BroadbandRebuild rebuild_B_abs(const PhysicalConstants& pc, const DecayChannel& ch);
BroadbandRebuild rebuild_C(const PhysicalConstants& pc, const DecayChannel& ch);

}  // namespace cavkin

#endif
