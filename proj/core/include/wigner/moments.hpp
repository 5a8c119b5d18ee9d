#pragma once

#include <vector>

#include "wigner/state.hpp"

namespace wigner {

// Spatial profiles of the p-moments of w:
//   N      = int w dp                 (number density)
//   J      = int (p/m) w dp           (current density)
//   E      = int (p^2/2m) w dp        (energy density)
//   flux_J = int (p^2/m^2) w dp       (current flux; equals 2E/m identically)
//   flux_E = int (p^3/2m^2) w dp      (energy flux)
struct MomentFields {
  std::vector<double> x;
  std::vector<double> N, J, E, flux_J, flux_E;
  double dx = 0.0;
  double time = 0.0;
  double mass_m = 0.0;  // the mass parameter the moments were taken with
};

// Rectangle-rule quadrature over the uniform p grid, row summation order fixed.
// Warns when |w| at the p boundary exceeds 1e-8 of max |w|.
MomentFields moments(const WignerState& state, double m);

}  // namespace wigner
