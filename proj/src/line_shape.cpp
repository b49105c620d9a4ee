#include "cavkin/line_shape.hpp"

#include <cmath>

#include "cavkin/errors.hpp"

namespace cavkin {

LineShape LineShape::make(double center, double fwhm, double grid_spacing,
                          double half_window) {
  if (!(center > 0.0)) throw DomainError("line center must be > 0");
  if (!(fwhm > 0.0)) throw DomainError("line fwhm must be > 0");
  if (!(grid_spacing > 0.0)) throw DomainError("line grid spacing must be > 0");
  if (grid_spacing > fwhm / 100.0)
    throw DomainError("line grid spacing must satisfy grid_spacing <= fwhm/100");
  if (fwhm / 100.0 > center / 1e4)
    throw DomainError("line width must satisfy fwhm <= center/100");
  if (half_window < 5.0 * fwhm)
    throw DomainError("line half window must be >= 5*fwhm (grid normalization)");
  if (half_window > 0.5 * center)
    throw DomainError("line half window must be <= center/2");

  LineShape ls;
  ls.center_ = center;
  ls.fwhm_ = fwhm;
  ls.grid_spacing_ = grid_spacing;
  // Snap the window onto the grid so the endpoints sit on grid points.
  ls.grid_radius_ = std::llround(half_window / grid_spacing);
  ls.half_window_ = static_cast<double>(ls.grid_radius_) * grid_spacing;
  // Integral of the unit Lorentzian (fwhm/2pi)/(d^2 + (fwhm/2)^2) over the
  // truncation window.
  ls.norm_ = (2.0 / M_PI) * std::atan(2.0 * ls.half_window_ / fwhm);
  return ls;
}

double LineShape::value_at_offset(double delta) const {
  // Open-interval truncation: the profile vanishes at the window edge, so
  // grid sums carry a one-sided O(grid_spacing) deficit that shrinks
  // monotonically under grid refinement.
  if (std::abs(delta) >= half_window_) return 0.0;
  const double hw = 0.5 * fwhm_;
  const double lorentz = (fwhm_ / (2.0 * M_PI)) / (delta * delta + hw * hw);
  return lorentz / norm_;
}

double LineShape::value(double omega_phi) const {
  return value_at_offset(omega_phi - center_);
}

double LineShape::grid_sum() const {
  double sum = 0.0;
  // Symmetric accumulation, tails first.
  for (std::int64_t l = grid_radius_; l >= 1; --l)
    sum += 2.0 * value_at_offset(grid_offset(l));
  sum += value_at_offset(0.0);
  return sum * grid_spacing_;
}

LineShape LineShape::with_grid_spacing(double grid_spacing) const {
  return make(center_, fwhm_, grid_spacing, half_window_);
}

}  // namespace cavkin
