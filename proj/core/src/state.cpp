#include "wigner/state.hpp"

#include <cmath>
#include <stdexcept>

namespace wigner {

double WignerState::mass() const {
  double sum = 0.0;
  for (double v : w) sum += v;
  return sum * grid.dx() * grid.dp();
}

double WignerState::max_abs() const {
  double m = 0.0;
  for (double v : w) m = std::max(m, std::abs(v));
  return m;
}

bool WignerState::finite() const {
  for (double v : w) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double WignerState::boundary_max_abs() const {
  const int nx = grid.n_x(), np = grid.n_p();
  double m = 0.0;
  for (int j = 0; j < np; ++j) {
    m = std::max(m, std::abs(at(0, j)));
    m = std::max(m, std::abs(at(nx - 1, j)));
  }
  for (int i = 0; i < nx; ++i) {
    m = std::max(m, std::abs(at(i, 0)));
    m = std::max(m, std::abs(at(i, np - 1)));
  }
  return m;
}

WignerState gaussian_state(const GaussianParams& g, const PhaseGrid& grid, double tail_tol) {
  if (!g.normalizable()) {
    throw std::invalid_argument("gaussian_state: parameters not normalizable (4AC - B^2 <= 0)");
  }
  WignerState s(grid);
  double peak = 0.0;
  for (int i = 0; i < grid.n_x(); ++i) {
    const double x = grid.x(i);
    for (int j = 0; j < grid.n_p(); ++j) {
      const double p = grid.p(j);
      const double v = std::exp(-(g.A * p * p + g.B * p * x + g.C * x * x + g.D));
      s.at(i, j) = v;
      peak = std::max(peak, v);
    }
  }
  const double tail = s.boundary_max_abs();
  if (tail > tail_tol * peak) {
    throw std::runtime_error("gaussian_state: boundary tail " + std::to_string(tail / peak) +
                             " of peak exceeds tolerance; enlarge the grid");
  }
  return s;
}

}  // namespace wigner
