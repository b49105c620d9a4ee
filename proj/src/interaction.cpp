#include "cavkin/interaction.hpp"

#include <cmath>

#include "cavkin/dispersion.hpp"
#include "cavkin/errors.hpp"

namespace cavkin {

void DecayChannel::validate(const PhysicalConstants& pc) const {
  triple.validate();
  cavity.validate();
  if (!(t_sp > 0.0)) throw DomainError("spontaneous lifetime must be > 0");
  if (!(excited_kinetic >= 0.0)) throw DomainError("excited kinetic energy must be >= 0");
  const double omega0 = triple.transition_energy / pc.hbar;
  if (std::abs(line.center() - omega0) > line.fwhm())
    throw DomainError("line center inconsistent with the transition energy");
}

double DecayChannel::ground_kinetic(const PhysicalConstants& pc, double omega_phi) const {
  const double kinetic = triple.transition_energy + excited_kinetic - pc.hbar * omega_phi;
  if (!(kinetic > 0.0))
    throw DomainError("energy conservation unsolvable: photon carries the full excitation");
  return kinetic;
}

double DecayChannel::ground_kinetic_at_offset(const PhysicalConstants& pc,
                                              double delta) const {
  const double kinetic = (triple.transition_energy - pc.hbar * line.center()) +
                         excited_kinetic - pc.hbar * delta;
  if (!(kinetic > 0.0))
    throw DomainError("energy conservation unsolvable: photon carries the full excitation");
  return kinetic;
}

namespace {

double pi_c3(const PhysicalConstants& pc) { return M_PI * pc.c * pc.c * pc.c; }

}  // namespace

RateSet micro_rate(const PhysicalConstants& pc, const DecayChannel& ch, double omega_phi) {
  const double delta = omega_phi - ch.line.center();
  if (std::abs(delta) > ch.line.half_window())
    throw DomainError("micro_rate: omega_phi outside the line window");
  ch.ground_kinetic(pc, omega_phi);  // energy conservation check
  const double f = ch.line.value_at_offset(delta);
  const double nu_phi = nu_of_omega(pc, ch.triple.boson, omega_phi);
  const double d_phi = ch.triple.boson.degeneracy;
  const double d_a = ch.triple.ground.degeneracy;
  const double alpha = pi_c3(pc) / (d_phi * d_a * omega_phi * nu_phi) * (1.0 / ch.t_sp) *
                       f / ch.cavity.volume();
  return RateSet{alpha, alpha, alpha, alpha};
}

double w_em(const PhysicalConstants& pc, const DecayChannel& ch, double u_k,
            double omega_phi) {
  if (!(u_k >= 0.0)) throw DomainError("w_em: energy density must be >= 0");
  const double f = ch.line.value(omega_phi);
  if (f == 0.0) return 0.0;
  const double nu_phi = nu_of_omega(pc, ch.triple.boson, omega_phi);
  const double d_phi = ch.triple.boson.degeneracy;
  return pi_c3(pc) / (d_phi * omega_phi * nu_phi) * (1.0 / ch.t_sp) * f * u_k /
         (pc.hbar * omega_phi);
}

double w_abs(const PhysicalConstants& pc, const DecayChannel& ch, double u_k,
             double omega_phi) {
  const double d_ratio =
      static_cast<double>(ch.triple.excited.degeneracy) / ch.triple.ground.degeneracy;
  return d_ratio * w_em(pc, ch, u_k, omega_phi);
}

double w_forgotten_kinetic(const PhysicalConstants& pc, const DecayChannel& ch,
                           double u_n, double ground_kinetic) {
  if (!(u_n >= 0.0)) throw DomainError("w_forgotten: energy density must be >= 0");
  if (!(ground_kinetic > 0.0))
    throw DomainError("w_forgotten: ground mode below its rest energy");
  // hbar*omega_phi = (transition + excited kinetic) - ground kinetic.
  const double photon_energy =
      ch.triple.transition_energy + ch.excited_kinetic - ground_kinetic;
  if (!(photon_energy > 0.0))
    throw DomainError("w_forgotten: energy conservation leaves no photon energy");
  const double omega_phi = photon_energy / pc.hbar;
  const double delta_energy = photon_energy - pc.hbar * ch.line.center();
  const double f = ch.line.value_at_offset(delta_energy / pc.hbar);
  if (f == 0.0) return 0.0;
  const double nu_phi = nu_of_omega(pc, ch.triple.boson, omega_phi);
  const double d_a = ch.triple.ground.degeneracy;
  const double atom_energy = ch.triple.ground.rest_energy + ground_kinetic;
  return pi_c3(pc) / (d_a * omega_phi * nu_phi) * (1.0 / ch.t_sp) * f * u_n / atom_energy;
}

double w_forgotten(const PhysicalConstants& pc, const DecayChannel& ch, double u_n,
                   double omega_a) {
  const double kinetic = kinetic_energy(pc, ch.triple.ground, omega_a);
  return w_forgotten_kinetic(pc, ch, u_n, kinetic);
}

double einstein_A(const DecayChannel& ch) { return 1.0 / ch.t_sp; }

double einstein_B_em(const PhysicalConstants& pc, const DecayChannel& ch) {
  const double omega0 = ch.line.center();
  const double nu0 = nu_of_omega(pc, ch.triple.boson, omega0);
  const double d_phi = ch.triple.boson.degeneracy;
  const double c3 = pc.c * pc.c * pc.c;
  return (1.0 / d_phi) * c3 / (4.0 * M_PI * pc.hbar * omega0 * nu0 * nu0) / ch.t_sp;
}

double einstein_B_abs(const PhysicalConstants& pc, const DecayChannel& ch) {
  const double d_ratio =
      static_cast<double>(ch.triple.excited.degeneracy) / ch.triple.ground.degeneracy;
  return d_ratio * einstein_B_em(pc, ch);
}

double coefficient_C(const PhysicalConstants& pc, const DecayChannel& ch) {
  const double kinetic0 = ch.ground_kinetic_at_offset(pc, 0.0);
  const double omega_a0 = omega_from_kinetic(pc, ch.triple.ground, kinetic0);
  const double nu_a0 = nu_from_kinetic(pc, ch.triple.ground, kinetic0);
  const double d_a = ch.triple.ground.degeneracy;
  const double c3 = pc.c * pc.c * pc.c;
  return (1.0 / d_a) * c3 / (4.0 * M_PI * pc.hbar * omega_a0 * nu_a0 * nu_a0) / ch.t_sp;
}

namespace {

// Grid sums against a flat ambient spectrum (the broad-band ideal; the
// per-mode energy density cancels between the sum and the spectral density).
// Offsets come from grid indices rather than absolute frequencies, so the
// line shape sees exact multiples of the grid spacing.

struct GridAccumulator {
  double sum = 0.0;

  template <typename Term>
  void accumulate(const LineShape& line, Term&& term) {
    for (std::int64_t l = line.grid_radius(); l >= 1; --l) {
      sum += term(line.grid_offset(l));
      sum += term(-line.grid_offset(l));
    }
    sum += term(0.0);
  }
};

}  // namespace

BroadbandRebuild rebuild_B_em(const PhysicalConstants& pc, const DecayChannel& ch) {
  const LineShape& line = ch.line;
  const double u0 = 1.0;  // J/m^3, cancels
  const double omega0 = line.center();
  const double nu0 = nu_of_omega(pc, ch.triple.boson, omega0);
  const double d_phi = ch.triple.boson.degeneracy;

  GridAccumulator acc;
  acc.accumulate(line, [&](double delta) {
    const double omega = omega0 + delta;
    const double nu = nu_of_omega(pc, ch.triple.boson, omega);
    return d_phi * pi_c3(pc) / (d_phi * omega * nu) * (1.0 / ch.t_sp) *
           line.value_at_offset(delta) * u0 / (pc.hbar * omega);
  });

  // Flat ambient spectrum: rho~ = d_phi u0 / dOmega, rho = rho~ * 4 pi^2 nu0 / omega0.
  const double rho = d_phi * u0 / line.grid_spacing() * 4.0 * M_PI * M_PI * nu0 / omega0;
  BroadbandRebuild out;
  out.closed_form = einstein_B_em(pc, ch);
  out.grid_sum = acc.sum / rho;
  out.rel_error = (out.grid_sum - out.closed_form) / out.closed_form;
  return out;
}

BroadbandRebuild rebuild_B_abs(const PhysicalConstants& pc, const DecayChannel& ch) {
  const double d_ratio =
      static_cast<double>(ch.triple.excited.degeneracy) / ch.triple.ground.degeneracy;
  BroadbandRebuild out = rebuild_B_em(pc, ch);
  out.closed_form = einstein_B_abs(pc, ch);
  out.grid_sum *= d_ratio;
  out.rel_error = (out.grid_sum - out.closed_form) / out.closed_form;
  return out;
}

BroadbandRebuild rebuild_C(const PhysicalConstants& pc, const DecayChannel& ch) {
  const LineShape& line = ch.line;
  const double u0 = 1.0;  // J/m^3, cancels
  const double omega0 = line.center();
  const double nu0 = nu_of_omega(pc, ch.triple.boson, omega0);
  const double d_a = ch.triple.ground.degeneracy;
  const double kinetic0 = ch.ground_kinetic_at_offset(pc, 0.0);
  // The grid must not push the atom below its rest energy.
  if (kinetic0 <= pc.hbar * line.half_window())
    throw DomainError("rebuild_C: line window wider than the atom kinetic energy");
  const double omega_a0 = omega_from_kinetic(pc, ch.triple.ground, kinetic0);
  const double nu_a0 = nu_from_kinetic(pc, ch.triple.ground, kinetic0);

  GridAccumulator acc;
  acc.accumulate(line, [&](double delta) {
    const double omega = omega0 + delta;
    const double nu = nu_of_omega(pc, ch.triple.boson, omega);
    const double kinetic = kinetic0 - pc.hbar * delta;
    const double atom_energy = ch.triple.ground.rest_energy + kinetic;
    return d_a * pi_c3(pc) / (d_a * omega * nu) * (1.0 / ch.t_sp) *
           line.value_at_offset(delta) * u0 / atom_energy;
  });

  // In one photon-grid step the atom has dN_a = (omega_a0 nu_a0)/(omega0 nu0)
  // resonant rays; rho~_a = d_a u0 dN_a / dOmega.
  const double ray_count = omega_a0 * nu_a0 / (omega0 * nu0);
  const double rho = d_a * u0 * ray_count / line.grid_spacing() * 4.0 * M_PI * M_PI *
                     nu_a0 / omega_a0;
  BroadbandRebuild out;
  out.closed_form = coefficient_C(pc, ch);
  out.grid_sum = acc.sum / rho;
  out.rel_error = (out.grid_sum - out.closed_form) / out.closed_form;
  return out;
}

}  // namespace cavkin
