#include "wigner/fit.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace wigner {

namespace {

// Solves the symmetric 4x4 system M beta = rhs by Gauss elimination with
// partial pivoting.
std::array<double, 4> solve4(std::array<std::array<double, 4>, 4> M, std::array<double, 4> rhs) {
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    }
    if (M[piv][col] == 0.0) throw std::runtime_error("fit_gaussian: singular normal equations");
    std::swap(M[col], M[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (int r = col + 1; r < 4; ++r) {
      const double f = M[r][col] / M[col][col];
      for (int c = col; c < 4; ++c) M[r][c] -= f * M[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::array<double, 4> beta{};
  for (int r = 3; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < 4; ++c) s -= M[r][c] * beta[c];
    beta[r] = s / M[r][r];
  }
  return beta;
}

}  // namespace

GaussianFit fit_gaussian(const WignerState& state, double threshold) {
  const PhaseGrid& g = state.grid;
  const double wmax = state.max_abs();
  if (wmax == 0.0) throw std::invalid_argument("fit_gaussian: state is identically zero");
  const double cut = threshold * wmax;

  std::array<std::array<double, 4>, 4> M{};
  std::array<double, 4> rhs{};
  GaussianFit fit;

  for (int i = 0; i < g.n_x(); ++i) {
    const double x = g.x(i);
    for (int j = 0; j < g.n_p(); ++j) {
      const double v = state.at(i, j);
      if (!(v > cut)) {
        if (std::abs(v) > cut) ++fit.n_nonpositive;  // |v| in region but v <= 0
        continue;
      }
      const double p = g.p(j);
      const std::array<double, 4> row{p * p, p * x, x * x, 1.0};
      const double y = -std::log(v);
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) M[a][b] += row[a] * row[b];
        rhs[a] += row[a] * y;
      }
      ++fit.n_points;
    }
  }
  if (fit.n_points < 8) throw std::runtime_error("fit_gaussian: too few points above threshold");

  const std::array<double, 4> beta = solve4(M, rhs);
  fit.params = GaussianParams{beta[0], beta[1], beta[2], beta[3]};

  double ss_res = 0.0, ss_y = 0.0;
  for (int i = 0; i < g.n_x(); ++i) {
    const double x = g.x(i);
    for (int j = 0; j < g.n_p(); ++j) {
      const double v = state.at(i, j);
      if (!(v > cut)) continue;
      const double p = g.p(j);
      const double y = -std::log(v);
      const double e = beta[0] * p * p + beta[1] * p * x + beta[2] * x * x + beta[3] - y;
      ss_res += e * e;
      ss_y += y * y;
    }
  }
  fit.residual = std::sqrt(ss_res / std::max(ss_y, 1e-300));
  return fit;
}

}  // namespace wigner
