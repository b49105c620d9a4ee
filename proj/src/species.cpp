#include "cavkin/species.hpp"

#include <cmath>

#include "cavkin/errors.hpp"

namespace cavkin {

Species make_photon() { return Species{"photon", 0.0, 2}; }

void validate_species(const Species& s) {
  if (s.name.empty()) throw DomainError("species needs a name");
  if (!(s.rest_energy >= 0.0) || !std::isfinite(s.rest_energy))
    throw DomainError("species '" + s.name + "': rest_energy must be finite and >= 0");
  if (s.degeneracy < 1)
    throw DomainError("species '" + s.name + "': degeneracy must be >= 1");
}

void SpeciesTriple::validate() const {
  validate_species(ground);
  validate_species(boson);
  validate_species(excited);
  if (!(transition_energy > 0.0))
    throw DomainError("transition_energy must be > 0");
  const double expected = ground.rest_energy + transition_energy;
  if (std::abs(excited.rest_energy - expected) > 1e-12 * expected)
    throw DomainError("excited rest energy inconsistent with ground + transition");
}

}  // namespace cavkin
