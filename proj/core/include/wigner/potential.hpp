#pragma once

#include <variant>
#include <vector>

#include "wigner/grids.hpp"

namespace wigner {

struct ZeroPotential {};
struct HarmonicPotential {
  double kappa = 1.0;  // V(x) = kappa x^2 / 2
};
struct LinearPotential {
  double F = 0.0;  // V(x) = F x
};
struct TabulatedPotential {
  std::vector<double> V;  // samples on the x grid, extended periodically
};
struct PolynomialPotential {
  std::vector<double> coeffs;  // V(x) = sum coeffs[k] x^k
};

using PotentialSpec = std::variant<ZeroPotential, HarmonicPotential, LinearPotential,
                                   TabulatedPotential, PolynomialPotential>;

// Point evaluation anywhere on the line. Tabulated samples are wrapped
// periodically and cubic-interpolated.
double potential_value(const PotentialSpec& pot, double x, const PhaseGrid& grid);
double potential_derivative(const PotentialSpec& pot, double x, const PhaseGrid& grid);

void validate_potential(const PotentialSpec& pot, const PhaseGrid& grid);

}  // namespace wigner
