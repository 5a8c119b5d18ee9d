#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "wigner/gaussian_ode.hpp"

using namespace wigner;

namespace {

OdeParams fig_params(double kappa, double eta) {
  OdeParams p;
  p.m = 0.4;
  p.tau = 1.0;
  p.lambda0 = 1.0;
  p.kappa = kappa;
  p.eta = eta;
  p.hbar = 1.0;
  return p;
}

}  // namespace

TEST_CASE("ode right-hand side") {
  SUBCASE("origin is an equilibrium of the frictionless system") {
    const OdeDerivative d = ode_rhs(fig_params(1.0, 0.0), GaussianParams{0, 0, 0, 0.3});
    CHECK(d.dA == 0.0);
    CHECK(d.dB == 0.0);
    CHECK(d.dC == 0.0);
    CHECK(d.dD == 0.0);
  }
  SUBCASE("figure-2 equilibrium zeroes the full right-hand side") {
    const OdeDerivative d = ode_rhs(fig_params(1.0, 0.5), GaussianParams{0.25, 0.0, 0.1, 0.0});
    CHECK(d.dA == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(d.dB == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(d.dC == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(d.dD == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  }
  SUBCASE("term-by-term evaluation") {
    OdeParams p;
    p.m = 1.0;
    p.tau = 1.0;
    p.lambda0 = 1.0;
    p.kappa = 0.0;
    p.eta = 0.0;
    const OdeDerivative d = ode_rhs(p, GaussianParams{1, 0, 0, 0});
    CHECK(d.dA == doctest::Approx(-4.0));
    CHECK(d.dB == 0.0);
    CHECK(d.dC == 0.0);
    CHECK(d.dD == doctest::Approx(2.0));
  }
}

TEST_CASE("figure trajectories") {
  const GaussianParams init{1, 0, 1, 0};

  SUBCASE("no friction: A, B, C and exp(-D) all decay") {
    const Trajectory t = integrate(fig_params(1.0, 0.0), init, 50.0, 1e-3, 100);
    const TrajectoryPoint& f = t.back();
    CHECK(f.t == doctest::Approx(50.0));
    CHECK(std::abs(f.A) < 0.02);
    CHECK(std::abs(f.B) < 0.02);
    CHECK(std::abs(f.C) < 0.02);
    CHECK(f.exp_minus_D() < 0.02);
    // much further out the decay continues
    const Trajectory longer = integrate(fig_params(1.0, 0.0), init, 500.0, 1e-3, 1000);
    CHECK(std::abs(longer.back().A) < 1.1e-3);
    CHECK(longer.back().exp_minus_D() < 1e-3);
  }
  SUBCASE("friction stabilizes both spreads at the equilibrium") {
    const Trajectory t = integrate(fig_params(1.0, 0.5), init, 50.0, 1e-3, 100);
    const TrajectoryPoint& f = t.back();
    CHECK(std::abs(f.A - 0.25) < 1e-9);
    CHECK(std::abs(f.B) < 1e-9);
    CHECK(std::abs(f.C - 0.1) < 1e-9);
    CHECK(f.exp_minus_D() > 0.1);  // D converges, the state does not vanish
  }
  SUBCASE("friction without the trap stabilizes only the momentum spread") {
    const Trajectory t = integrate(fig_params(0.0, 0.5), init, 50.0, 1e-3, 100);
    const TrajectoryPoint& f = t.back();
    CHECK(std::abs(f.A - 0.25) < 0.01);
    CHECK(f.C < 1e-3);
    CHECK(f.C > 0.0);
    CHECK(f.exp_minus_D() < 0.01);
  }
}

TEST_CASE("equilibrium") {
  SUBCASE("figure-2 parameters") {
    const auto eq = equilibrium(fig_params(1.0, 0.5));
    REQUIRE(eq.has_value());
    CHECK(eq->A0 == doctest::Approx(0.25));
    CHECK(eq->B0 == 0.0);
    CHECK(eq->C0 == doctest::Approx(0.1));
  }
  SUBCASE("no friction: the origin") {
    const auto eq = equilibrium(fig_params(1.0, 0.0));
    REQUIRE(eq.has_value());
    CHECK(eq->A0 == 0.0);
    CHECK(eq->C0 == 0.0);
  }
  SUBCASE("no trap: position spread unbounded") {
    const auto eq = equilibrium(fig_params(0.0, 0.5));
    REQUIRE(eq.has_value());
    CHECK(eq->A0 == doctest::Approx(0.25));
    CHECK(eq->C0 == 0.0);
  }
  SUBCASE("lambda0 = 0 with friction has no finite equilibrium") {
    OdeParams p = fig_params(1.0, 0.5);
    p.lambda0 = 0.0;
    CHECK_FALSE(equilibrium(p).has_value());
  }
  SUBCASE("rhs vanishes at the equilibrium for random parameters") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
      OdeParams p;
      p.m = u(rng);
      p.tau = u(rng);
      p.lambda0 = u(rng);
      p.kappa = u(rng);
      p.eta = u(rng);
      const auto eq = equilibrium(p);
      REQUIRE(eq.has_value());
      const OdeDerivative d = ode_rhs(p, GaussianParams{eq->A0, eq->B0, eq->C0, 0.0});
      CHECK(std::abs(d.dA) < 1e-13);
      CHECK(std::abs(d.dB) < 1e-13);
      CHECK(std::abs(d.dC) < 1e-13);
    }
  }
}

TEST_CASE("asymptotics") {
  SUBCASE("coherence length formula") {
    OdeParams p = fig_params(1.0, 0.5);
    const AsymptoticReport r = asymptotics(p);
    CHECK(r.coherence_length == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  }
  SUBCASE("thermal identities under lambda0 = tau m eta kBT") {
    OdeParams p;
    p.m = 1.0;
    p.tau = 1.0;
    p.eta = 1.0;
    p.lambda0 = 1.0;  // implies kBT = 1
    p.kappa = 1.0;
    p.hbar = 1.0;
    const AsymptoticReport r = asymptotics(p);
    CHECK(r.implied_kBT == doctest::Approx(1.0));
    CHECK(r.coherence_length == doctest::Approx(1.0));
    CHECK(r.thermal_length == doctest::Approx(1.0));
  }
  SUBCASE("position spread equals sqrt(kBT/kappa); both formulas agree") {
    OdeParams p;
    p.m = 2.0;
    p.tau = 1.0;
    p.eta = 0.5;
    p.lambda0 = 1.0;  // kBT = 1/(2*0.5) = 1
    p.kappa = 1.0;
    const AsymptoticReport r = asymptotics(p);
    CHECK(r.implied_kBT == doctest::Approx(1.0));
    CHECK(r.position_spread == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.thermal_position_spread == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("identities hold to machine precision for random parameters") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
      OdeParams p;
      p.m = u(rng);
      p.tau = u(rng);
      p.lambda0 = u(rng);
      p.kappa = u(rng);
      p.eta = u(rng);
      p.hbar = u(rng);
      const AsymptoticReport r = asymptotics(p);
      CHECK(r.coherence_length ==
            doctest::Approx(p.hbar * std::sqrt(p.tau * p.eta / p.lambda0)).epsilon(1e-12));
      CHECK(r.coherence_length == doctest::Approx(r.thermal_length).epsilon(1e-12));
      CHECK(r.position_spread == doctest::Approx(r.thermal_position_spread).epsilon(1e-12));
    }
  }
  SUBCASE("kappa = 0 reports infinite position spread") {
    const AsymptoticReport r = asymptotics(fig_params(0.0, 0.5));
    CHECK(std::isinf(r.position_spread));
  }
  SUBCASE("requires positive eta and lambda0") {
    CHECK_THROWS_AS(asymptotics(fig_params(1.0, 0.0)), std::invalid_argument);
  }
}

TEST_CASE("integration properties") {
  SUBCASE("random damped-trapped systems converge to the equilibrium") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(0.3, 2.0), uc(0.2, 1.5);
    for (int trial = 0; trial < 100; ++trial) {
      OdeParams p;
      p.m = u(rng);
      p.tau = u(rng);
      p.lambda0 = u(rng);
      p.kappa = u(rng);
      p.eta = u(rng);
      GaussianParams init{uc(rng), 0.0, uc(rng), 0.0};
      init.B = 0.5 * std::sqrt(4.0 * init.A * init.C) * (u(rng) - 1.0);
      REQUIRE(init.normalizable());
      const auto eq = equilibrium(p);
      REQUIRE(eq.has_value());
      const Trajectory t = integrate(p, init, 120.0, 2e-3, 1000);
      const TrajectoryPoint& f = t.back();
      CHECK(std::abs(f.A - eq->A0) < 1e-6);
      CHECK(std::abs(f.B - eq->B0) < 1e-6);
      CHECK(std::abs(f.C - eq->C0) < 1e-6);
    }
  }
  SUBCASE("RK4 step-halving shrinks the error ~16x on the figure-2 benchmark") {
    const OdeParams p = fig_params(1.0, 0.5);
    const GaussianParams init{1, 0, 1, 0};
    const double t_end = 2.0;
    auto final_at = [&](double dt) {
      const Trajectory t = integrate(p, init, t_end, dt, 1 << 30);
      return t.back();
    };
    const TrajectoryPoint ref = final_at(1e-5);
    auto err = [&](double dt) {
      const TrajectoryPoint f = final_at(dt);
      return std::max({std::abs(f.A - ref.A), std::abs(f.B - ref.B), std::abs(f.C - ref.C),
                       std::abs(f.D - ref.D)});
    };
    const double e1 = err(0.04), e2 = err(0.02);
    CHECK(e1 / e2 >= 12.0);
    CHECK(e1 / e2 <= 20.0);
  }
  SUBCASE("frictionless trajectories: dC sign identity and eventual monotone A") {
    const OdeParams p = fig_params(1.0, 0.0);
    const Trajectory t = integrate(p, GaussianParams{1, 0, 1, 0}, 60.0, 1e-3, 10);
    for (const TrajectoryPoint& pt : t) {
      const OdeDerivative d = ode_rhs(p, GaussianParams{pt.A, pt.B, pt.C, pt.D});
      const double indicator = pt.B * (p.kappa - p.lambda0 * pt.B / p.tau);
      if (indicator <= 0.0) CHECK(d.dC <= 1e-15);
    }
    // after the initial transient A decreases up to a small oscillation
    // ripple, and its local maxima decrease strictly
    double worst_uptick = 0.0, prev_max = 1e300;
    bool maxima_decreasing = true;
    for (std::size_t k = 1; k + 1 < t.size(); ++k) {
      if (t[k].t < 5.0) continue;
      worst_uptick = std::max(worst_uptick, (t[k].A - t[k - 1].A) / t[k].A);
      if (t[k].A > t[k - 1].A && t[k].A >= t[k + 1].A) {
        maxima_decreasing &= t[k].A < prev_max;
        prev_max = t[k].A;
      }
    }
    CHECK(worst_uptick < 1e-3);
    CHECK(maxima_decreasing);
  }
}
