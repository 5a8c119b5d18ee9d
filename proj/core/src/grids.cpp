#include "wigner/grids.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wigner {

namespace {
bool is_pow2(int n) { return n >= 2 && (n & (n - 1)) == 0; }
}

std::vector<double> XiGrid::points() const {
  std::vector<double> v(n);
  for (int l = 0; l < n; ++l) v[l] = xi(l);
  return v;
}

PhaseGrid::PhaseGrid(double x_min, double x_max, int n_x,
                     double p_min, double p_max, int n_p, double hbar)
    : x_min_(x_min), x_max_(x_max), p_min_(p_min), p_max_(p_max),
      nx_(n_x), np_(n_p), hbar_(hbar) {
  if (!(x_max > x_min) || !(p_max > p_min)) {
    throw std::invalid_argument("PhaseGrid: bounds must satisfy x_max > x_min, p_max > p_min");
  }
  if (!is_pow2(n_x) || !is_pow2(n_p)) {
    throw std::invalid_argument("PhaseGrid: n_x and n_p must be powers of two, got " +
                                std::to_string(n_x) + " x " + std::to_string(n_p));
  }
  if (!(hbar > 0.0)) {
    throw std::invalid_argument("PhaseGrid: hbar must be positive");
  }
  dx_ = (x_max - x_min) / n_x;
  dp_ = (p_max - p_min) / n_p;
}

XiGrid PhaseGrid::conjugate_xi_grid() const {
  return XiGrid{np_, 2.0 * M_PI * hbar_ / (np_ * dp_)};
}

bool PhaseGrid::same_shape(const PhaseGrid& o) const {
  return nx_ == o.nx_ && np_ == o.np_ && x_min_ == o.x_min_ && x_max_ == o.x_max_ &&
         p_min_ == o.p_min_ && p_max_ == o.p_max_ && hbar_ == o.hbar_;
}

}  // namespace wigner
