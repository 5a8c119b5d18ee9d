#pragma once

#include <vector>

#include "wigner/gaussian.hpp"
#include "wigner/grids.hpp"

namespace wigner {

// Real-valued Wigner function w(x, p) on a phase-space grid at one instant.
// Wigner functions are signed: positivity is never assumed or enforced.
struct WignerState {
  PhaseGrid grid;
  std::vector<double> w;  // row-major [i_x * n_p + i_p]
  double time = 0.0;

  explicit WignerState(const PhaseGrid& g) : grid(g), w(g.size(), 0.0) {}

  double& at(int i, int j) { return w[grid.index(i, j)]; }
  double at(int i, int j) const { return w[grid.index(i, j)]; }

  double mass() const;     // dx dp sum of w
  double max_abs() const;
  bool finite() const;
  // Largest |w| on the outermost x rows and p columns, for leak monitoring.
  double boundary_max_abs() const;
};

// Synthesizes exp(-(A p^2 + B p x + C x^2 + D)) on the grid.
// Throws if the parameters are not normalizable or if the boundary tail
// exceeds tail_tol * peak (the grid is too small for the requested state).
WignerState gaussian_state(const GaussianParams& params, const PhaseGrid& grid,
                           double tail_tol = 1e-12);

}  // namespace wigner
