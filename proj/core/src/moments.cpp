#include "wigner/moments.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "wigner/log.hpp"

namespace wigner {

MomentFields moments(const WignerState& state, double m) {
  if (!(m > 0.0)) throw std::invalid_argument("moments: mass must be positive");
  const PhaseGrid& g = state.grid;
  const int nx = g.n_x(), np = g.n_p();
  const double dp = g.dp();

  MomentFields f;
  f.x.resize(nx);
  f.N.resize(nx);
  f.J.resize(nx);
  f.E.resize(nx);
  f.flux_J.resize(nx);
  f.flux_E.resize(nx);
  f.dx = g.dx();
  f.time = state.time;
  f.mass_m = m;

  double edge = 0.0, wmax = 0.0;
  for (int i = 0; i < nx; ++i) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (int j = 0; j < np; ++j) {
      const double p = g.p(j);
      const double v = state.at(i, j);
      s0 += v;
      s1 += p * v;
      s2 += p * p * v;
      s3 += p * p * p * v;
      wmax = std::max(wmax, std::abs(v));
    }
    edge = std::max(edge, std::max(std::abs(state.at(i, 0)), std::abs(state.at(i, np - 1))));
    f.x[i] = g.x(i);
    f.N[i] = dp * s0;
    f.J[i] = dp * s1 / m;
    f.E[i] = dp * s2 / (2.0 * m);
    f.flux_J[i] = dp * s2 / (m * m);
    f.flux_E[i] = dp * s3 / (2.0 * m * m);
  }
  if (wmax > 0.0 && edge > 1e-8 * wmax) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "moments: |w| at the p boundary is %.2e of max |w|", edge / wmax);
    log::warn(buf);
  }
  return f;
}

}  // namespace wigner
