#include "darboux/classical.hpp"
#include "darboux/hyperspherical.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

using namespace darboux;
using namespace darboux::classical;

namespace {

ModelParams params(int dim, double lambda, double omega = 1.0) { return ModelParams{dim, lambda, omega, 1.0}; }

double radius(const PhaseState& s) {
  double r2 = 0.0;
  for (double x : s.q) r2 += x * x;
  return std::sqrt(r2);
}

}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("equations of motion are Hamilton's equations") {
    std::mt19937_64 rng(3);
    for (int dim = 2; dim <= 4; ++dim) {
      const ModelParams p = params(dim, 0.07, 1.3);
      const PhaseState s = random_state(dim, rng);
      const Flow f = equations_of_motion(p, s);
      const double h = 1e-6;
      for (int i = 0; i < dim; ++i) {
        const auto k = static_cast<std::size_t>(i);
        PhaseState up = s, down = s;
        up.p[k] += h;
        down.p[k] -= h;
        CHECK(f.dq[k] == doctest::Approx((hamiltonian(p, up) - hamiltonian(p, down)) / (2 * h)).epsilon(1e-7));
        up = s;
        down = s;
        up.q[k] += h;
        down.q[k] -= h;
        CHECK(f.dp[k] == doctest::Approx(-(hamiltonian(p, up) - hamiltonian(p, down)) / (2 * h)).epsilon(1e-7));
      }
    }
  }

  TEST_CASE("every monitored invariant Poisson-commutes with H") {
    std::mt19937_64 rng(5);
    for (int dim = 2; dim <= 4; ++dim) {
      const ModelParams p = params(dim, 0.02);
      const PhaseFunction h = [&](const PhaseState& s) { return hamiltonian(p, s); };
      const auto names = invariant_names(dim);
      REQUIRE(names.size() == invariant_vector(p, random_state(dim, rng)).size());
      for (int trial = 0; trial < 5; ++trial) {
        const PhaseState s = random_state(dim, rng);
        for (std::size_t i = 0; i < names.size(); ++i) {
          const PhaseFunction f = [&, i](const PhaseState& x) { return invariant_vector(p, x)[i]; };
          CAPTURE(names[i]);
          CHECK(std::abs(poisson_bracket(h, f, s)) < 1e-8);
        }
      }
    }
  }

  TEST_CASE("Fradkin trace reproduces twice the energy") {
    std::mt19937_64 rng(6);
    const ModelParams p = params(3, 0.05);
    for (int trial = 0; trial < 10; ++trial) {
      const auto inv = classical_invariants(p, random_state(3, rng));
      CHECK(inv.fradkin[0] + inv.fradkin[4] + inv.fradkin[8] == doctest::Approx(2 * inv.hamiltonian));
      CHECK(inv.upper.back() == doctest::Approx(inv.lower.back()));
    }
  }

  TEST_CASE("poisson bracket of the canonical pair") {
    const PhaseState s{{0.3, -0.2}, {0.1, 0.5}, 0.0};
    const PhaseFunction q1 = [](const PhaseState& x) { return x.q[0]; };
    const PhaseFunction p1 = [](const PhaseState& x) { return x.p[0]; };
    const PhaseFunction p2 = [](const PhaseState& x) { return x.p[1]; };
    CHECK(poisson_bracket(q1, p1, s) == doctest::Approx(1.0));
    CHECK(std::abs(poisson_bracket(q1, p2, s)) < 1e-12);
  }

  TEST_CASE("integration conserves all invariants") {
    std::mt19937_64 rng(11);
    const ModelParams p = params(3, 0.02);
    const PhaseState s = random_state(3, rng);
    const auto rec = integrate(p, s, 50.0);
    CHECK(rec.max_drift() < 1e-7);
    CHECK(rec.drift.size() == invariant_names(3).size());
    CHECK(rec.steps > 0);
    CHECK(rec.samples.back().t == doctest::Approx(50.0));
  }

  TEST_CASE("period formula matches the numerically detected return time") {
    std::mt19937_64 rng(13);
    for (int dim = 2; dim <= 3; ++dim)
      for (double lambda : {0.0, 0.02, 0.1}) {
        const ModelParams p = params(dim, lambda, 1.4);
        const PhaseState s = random_state(dim, rng);
        const auto c = orbit_closure(p, s);
        REQUIRE(c.conclusive);
        CHECK(c.distance < 1e-4);
        CHECK(c.period == doctest::Approx(period_estimate(p, s)).epsilon(1e-8));
        if (lambda == 0.0) CHECK(c.period == doctest::Approx(2 * std::numbers::pi / 1.4).epsilon(1e-10));
      }
  }

  TEST_CASE("curved orbits are slower than flat ones with the same data") {
    const PhaseState s{{0.5, 0.1, -0.2}, {0.1, 0.4, 0.3}, 0.0};
    CHECK(period_estimate(params(3, 0.05), s) > period_estimate(params(3, 0.0), s));
  }

  TEST_CASE("motion above the threshold is unbounded") {
    const ModelParams p = params(3, 0.02);
    // Speed chosen so that H > omega^2 / (2 lambda) = 25.
    const PhaseState s{{0.5, 0.0, 0.0}, {0.0, 8.0, 0.0}, 0.0};
    REQUIRE(hamiltonian(p, s) > 25.0);
    CHECK_THROWS_AS((void)period_estimate(p, s), std::domain_error);
    IntegrationOptions options;
    options.sample_interval = 5.0;
    const auto rec = integrate(p, s, 200.0, options);
    double prev = 0.0;
    for (std::size_t i = 2; i < rec.samples.size(); ++i) {
      const double r = radius(rec.samples[i]);
      CHECK(r > prev);
      prev = r;
    }
    CHECK(prev > 50.0);
  }

  TEST_CASE("2N-1 functionally independent invariants, N in involution") {
    std::mt19937_64 rng(19);
    for (int dim = 2; dim <= 4; ++dim) {
      const ModelParams p = params(dim, 0.02);
      for (int trial = 0; trial < 3; ++trial) {
        const PhaseState s = random_state(dim, rng);
        CHECK(independence_rank(p, s, 0) == 2 * dim - 1);
        CHECK(jacobian_rank(involutive_set(p), s) == dim);
        const auto inv = involutive_set(p);
        for (std::size_t a = 0; a < inv.size(); ++a)
          for (std::size_t b = a + 1; b < inv.size(); ++b) CHECK(std::abs(poisson_bracket(inv[a], inv[b], s)) < 1e-8);
      }
    }
  }

  TEST_CASE("hyperspherical chart round trip and radial reduction") {
    std::mt19937_64 rng(23);
    for (int dim = 2; dim <= 4; ++dim) {
      const ModelParams p = params(dim, 0.03);
      for (int trial = 0; trial < 10; ++trial) {
        const PhaseState s = random_state(dim, rng);
        const HypersphericalState h = to_hyperspherical(s);
        const PhaseState back = from_hyperspherical(h);
        for (int i = 0; i < dim; ++i) {
          CHECK(back.q[static_cast<std::size_t>(i)] == doctest::Approx(s.q[static_cast<std::size_t>(i)]).epsilon(1e-12));
          CHECK(back.p[static_cast<std::size_t>(i)] == doctest::Approx(s.p[static_cast<std::size_t>(i)]).epsilon(1e-12));
        }
        const auto inv = classical_invariants(p, s);
        CHECK(angular_momentum_squared(h) == doctest::Approx(inv.lower.back()).epsilon(1e-10));
        for (int m = 2; m <= dim; ++m)
          CHECK(lower_casimir(h, m) == doctest::Approx(inv.lower[static_cast<std::size_t>(m - 2)]).epsilon(1e-10));
        CHECK(radial_reduction_check(p, s).consistent());
      }
    }
    CHECK_THROWS_AS((void)to_hyperspherical(PhaseState{{0.0, 0.0}, {1.0, 0.0}, 0.0}), std::domain_error);
  }

  TEST_CASE("random states are reproducible and lie in the unit ball") {
    std::mt19937_64 a(99), b(99);
    for (int trial = 0; trial < 20; ++trial) {
      const PhaseState x = random_state(3, a);
      const PhaseState y = random_state(3, b);
      CHECK(x.q == y.q);
      CHECK(x.p == y.p);
      CHECK(radius(x) <= 1.0);
    }
  }

  TEST_CASE("suite summary on a small sample") {
    SuiteOptions options;
    options.states = 3;
    options.t_end = 20.0;
    const auto report = run_suite(params(2, 0.02), options);
    CHECK(report.states.size() == 3);
    CHECK(report.invariants_ok());
    CHECK(report.closures_ok());
    CHECK(report.min_rank() == 3);
  }

  TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS((void)hamiltonian(params(3, 0.02), PhaseState{{0.1, 0.2}, {0.1, 0.2}, 0.0}), std::invalid_argument);
  }
}
