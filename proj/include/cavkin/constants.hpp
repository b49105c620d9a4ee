#ifndef CAVKIN_CONSTANTS_HPP
#define CAVKIN_CONSTANTS_HPP

namespace cavkin {

// 2018 CODATA (c, k_B exact by SI definition; hbar = h/2pi with h exact).
struct PhysicalConstants {
  double c = 299792458.0;         // speed of light, m/s
  double hbar = 1.054571817e-34;  // reduced Planck constant, J*s
  double k_B = 1.380649e-23;      // Boltzmann constant, J/K

  void validate() const;  // throws DomainError unless all strictly positive
};

// Exact conversion factor, J per eV.
inline constexpr double kJoulePerEv = 1.602176634e-19;

inline constexpr double ev_to_joule(double ev) { return ev * kJoulePerEv; }
inline constexpr double joule_to_ev(double j) { return j / kJoulePerEv; }

}  // namespace cavkin

#endif
