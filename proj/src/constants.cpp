#include "cavkin/constants.hpp"

#include "cavkin/errors.hpp"

namespace cavkin {

void PhysicalConstants::validate() const {
  if (!(c > 0.0)) throw DomainError("speed of light must be > 0");
  if (!(hbar > 0.0)) throw DomainError("hbar must be > 0");
  if (!(k_B > 0.0)) throw DomainError("k_B must be > 0");
}

}  // namespace cavkin
