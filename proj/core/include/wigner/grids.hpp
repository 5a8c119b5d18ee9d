#pragma once

#include <vector>

namespace wigner {

// Uniform symmetric correlation grid: xi_l = (l - n/2) * dxi, l = 0..n-1.
struct XiGrid {
  int n = 0;
  double dxi = 0.0;

  double xi(int l) const { return (l - n / 2) * dxi; }
  int center() const { return n / 2; }
  std::vector<double> points() const;
};

// Rectangular periodic phase-space grid. The stored bounds are the periodic
// box; grid points are x_i = x_min + i dx (excluding x_max), same for p.
class PhaseGrid {
 public:
  PhaseGrid(double x_min, double x_max, int n_x,
            double p_min, double p_max, int n_p, double hbar = 1.0);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double p_min() const { return p_min_; }
  double p_max() const { return p_max_; }
  int n_x() const { return nx_; }
  int n_p() const { return np_; }
  double dx() const { return dx_; }
  double dp() const { return dp_; }
  double hbar() const { return hbar_; }

  double x(int i) const { return x_min_ + i * dx_; }
  double p(int j) const { return p_min_ + j * dp_; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * np_ + j; }
  std::size_t size() const { return static_cast<std::size_t>(nx_) * np_; }

  // Correlation grid conjugate to the p axis: dxi = 2 pi hbar / (n_p dp).
  XiGrid conjugate_xi_grid() const;

  bool same_shape(const PhaseGrid& other) const;

 private:
  double x_min_, x_max_, p_min_, p_max_;
  int nx_, np_;
  double dx_, dp_, hbar_;
};

}  // namespace wigner
