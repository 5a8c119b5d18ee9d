#include "wigner/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace wigner {

namespace {

// Periodic 4-point Lagrange interpolation on the uniform x grid.
double tabulated_at(const std::vector<double>& V, double x, const PhaseGrid& g) {
  const int n = g.n_x();
  const double L = g.x_max() - g.x_min();
  double u = (x - g.x_min()) / g.dx();
  u -= std::floor(u / n) * n;  // wrap into [0, n)
  const int b = static_cast<int>(u);
  const double t = u - b;
  auto at = [&](int i) { return V[((i % n) + n) % n]; };
  const double w0 = -t * (t - 1.0) * (t - 2.0) / 6.0;
  const double w1 = (t * t - 1.0) * (t - 2.0) / 2.0;
  const double w2 = -t * (t + 1.0) * (t - 2.0) / 2.0;
  const double w3 = t * (t * t - 1.0) / 6.0;
  (void)L;
  return w0 * at(b - 1) + w1 * at(b) + w2 * at(b + 1) + w3 * at(b + 2);
}

}  // namespace

double potential_value(const PotentialSpec& pot, double x, const PhaseGrid& grid) {
  if (std::holds_alternative<ZeroPotential>(pot)) return 0.0;
  if (const auto* h = std::get_if<HarmonicPotential>(&pot)) return 0.5 * h->kappa * x * x;
  if (const auto* l = std::get_if<LinearPotential>(&pot)) return l->F * x;
  if (const auto* p = std::get_if<PolynomialPotential>(&pot)) {
    double v = 0.0;
    for (std::size_t k = p->coeffs.size(); k-- > 0;) v = v * x + p->coeffs[k];
    return v;
  }
  return tabulated_at(std::get<TabulatedPotential>(pot).V, x, grid);
}

double potential_derivative(const PotentialSpec& pot, double x, const PhaseGrid& grid) {
  if (std::holds_alternative<ZeroPotential>(pot)) return 0.0;
  if (const auto* h = std::get_if<HarmonicPotential>(&pot)) return h->kappa * x;
  if (const auto* l = std::get_if<LinearPotential>(&pot)) return l->F;
  if (const auto* p = std::get_if<PolynomialPotential>(&pot)) {
    double v = 0.0;
    for (std::size_t k = p->coeffs.size(); k-- > 1;) v = v * x + k * p->coeffs[k];
    return v;
  }
  // Fourth-order centered difference on the periodic samples.
  const auto& V = std::get<TabulatedPotential>(pot).V;
  const int n = grid.n_x();
  double u = (x - grid.x_min()) / grid.dx();
  u -= std::floor(u / n) * n;
  const int i = static_cast<int>(std::lround(u)) % n;
  auto at = [&](int k) { return V[((k % n) + n) % n]; };
  return (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * grid.dx());
}

void validate_potential(const PotentialSpec& pot, const PhaseGrid& grid) {
  if (const auto* h = std::get_if<HarmonicPotential>(&pot)) {
    if (!(h->kappa >= 0.0)) throw std::invalid_argument("HarmonicPotential: kappa must be >= 0");
    return;
  }
  if (const auto* t = std::get_if<TabulatedPotential>(&pot)) {
    if (static_cast<int>(t->V.size()) != grid.n_x()) {
      throw std::invalid_argument("TabulatedPotential: sample count must equal n_x");
    }
    for (double v : t->V) {
      if (!std::isfinite(v)) throw std::invalid_argument("TabulatedPotential: samples must be finite");
    }
    return;
  }
  if (const auto* p = std::get_if<PolynomialPotential>(&pot)) {
    for (double c : p->coeffs) {
      if (!std::isfinite(c)) throw std::invalid_argument("PolynomialPotential: coefficients must be finite");
    }
  }
}

}  // namespace wigner
