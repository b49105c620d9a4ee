#ifndef CAVKIN_LINE_SHAPE_HPP
#define CAVKIN_LINE_SHAPE_HPP

#include <cstdint>

namespace cavkin {

// Normalized emission profile f(omega - center): a Lorentzian truncated at
// +/- half_window and rescaled by its integral over the window, so that
// int f domega = 1 exactly on the window. The discrete grid
// omega_l = center + l * grid_spacing then sums to 1 + O(grid_spacing),
// within 1e-4 for the enforced parameter regime.
//
// The window is snapped to a whole number of grid steps so that the grid
// endpoints land exactly on the truncation radius.
class LineShape {
 public:
  LineShape() = default;  // unconfigured; build real lines through make()

  // Requires: grid_spacing <= fwhm/100, fwhm/100 <= center/1e4,
  // 5*fwhm <= half_window <= center/2.
  static LineShape make(double center, double fwhm, double grid_spacing,
                        double half_window);

  double center() const { return center_; }
  double fwhm() const { return fwhm_; }
  double grid_spacing() const { return grid_spacing_; }
  double half_window() const { return half_window_; }

  // f(omega_phi - center), s/rad; 0 outside the window.
  double value(double omega_phi) const;
  // Same, parameterized by the offset from center (exact for grid sums).
  double value_at_offset(double delta) const;

  std::int64_t grid_radius() const { return grid_radius_; }  // K: l in [-K, K]
  double grid_offset(std::int64_t l) const { return static_cast<double>(l) * grid_spacing_; }
  double grid_point(std::int64_t l) const { return center_ + grid_offset(l); }

  // Sum_l f(omega_l - center) * grid_spacing over the grid.
  double grid_sum() const;

  // Identical line on a refined grid (for convergence checks).
  LineShape with_grid_spacing(double grid_spacing) const;

 private:
  double center_ = 0.0;
  double fwhm_ = 0.0;
  double grid_spacing_ = 0.0;
  double half_window_ = 0.0;
  double norm_ = 1.0;  // integral of the raw Lorentzian over the window
  std::int64_t grid_radius_ = 0;
};

}  // namespace cavkin

#endif
