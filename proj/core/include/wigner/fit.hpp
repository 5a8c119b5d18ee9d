#pragma once

#include "wigner/state.hpp"

namespace wigner {

struct GaussianFit {
  GaussianParams params;
  double residual = 0.0;     // ||X beta + log w||_2 / ||log w||_2 over the fit region
  long n_points = 0;
  long n_nonpositive = 0;    // points inside the region where w <= 0 (excluded)
};

// Least-squares fit of -log w against (p^2, p x, x^2, 1) over the region
// where w > threshold * max(w). Non-positive values inside the region are
// excluded and counted; a large residual flags a non-gaussian state.
GaussianFit fit_gaussian(const WignerState& state, double threshold = 1e-8);

}  // namespace wigner
