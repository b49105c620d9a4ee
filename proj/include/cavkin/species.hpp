#ifndef CAVKIN_SPECIES_HPP
#define CAVKIN_SPECIES_HPP

#include <string>

#include "cavkin/constants.hpp"

namespace cavkin {

// One boson kind. Photons are the massless, doubly degenerate special case;
// everything downstream treats them through the same dispersion relation.
struct Species {
  std::string name;
  double rest_energy = 0.0;  // M c^2, J (>= 0)
  int degeneracy = 1;        // internal states per mode (d >= 1)

  bool is_massless() const { return rest_energy == 0.0; }
};

Species make_photon();

void validate_species(const Species& s);

// The reaction partners of  a phi <-> a + phi  (or ab <-> a + b generally):
// ground-state boson a, emitted boson phi, bound/excited state a*phi.
struct SpeciesTriple {
  Species ground;
  Species boson;
  Species excited;
  double transition_energy = 0.0;  // hbar*omega_0 = E_excited - E_ground, J

  // Internal-energy bookkeeping: rest masses must satisfy
  // M_excited c^2 = M_ground c^2 + hbar*omega_0 (to 1e-12 relative).
  void validate() const;
};

}  // namespace cavkin

#endif
