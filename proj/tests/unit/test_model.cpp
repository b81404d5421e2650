#include "darboux/model.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <functional>

using namespace darboux;

namespace {

ModelParams params(int dim, double lambda, double omega = 1.0, double hbar = 1.0) {
  return ModelParams{dim, lambda, omega, hbar};
}

// Fourth-order central second derivative.
double second_derivative(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

double first_derivative(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(params(1, 0.1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(params(3, -0.1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(params(3, 0.1, 1.0, 0.0).validate(), std::invalid_argument);
    CHECK_NOTHROW(params(3, 0.0).validate());
  }

  TEST_CASE("scalar curvature agrees with the conformal-metric formula evaluated numerically") {
    // g = exp(2 phi) delta, phi = log(D)/2:
    // R = -exp(-2 phi) (2 (N-1) Lap phi + (N-2)(N-1) |grad phi|^2).
    for (int dim = 2; dim <= 5; ++dim)
      for (double lambda : {0.02, 0.1, 0.7}) {
        const ModelParams p = params(dim, lambda);
        auto phi = [&](double r) { return 0.5 * std::log(conformal_factor(p, r)); };
        for (double r : {0.3, 1.0, 2.5, 6.0}) {
          const double d1 = first_derivative(phi, r, 1e-3);
          const double d2 = second_derivative(phi, r, 1e-3);
          const double lap = d2 + (dim - 1) * d1 / r;
          const double oracle = -(2.0 * (dim - 1) * lap + (dim - 2.0) * (dim - 1) * d1 * d1) / conformal_factor(p, r);
          CHECK(scalar_curvature(p, r) == doctest::Approx(oracle).epsilon(1e-7));
        }
      }
    CHECK(scalar_curvature(params(3, 0.1), 0.0) == doctest::Approx(-1.2).epsilon(1e-15));
    CHECK(scalar_curvature(params(3, 0.0), 1.0) == 0.0);
  }

  TEST_CASE("curvature is negative, minimal at the origin and vanishes at infinity") {
    const ModelParams p = params(3, 0.1);
    double prev = scalar_curvature(p, 0.0);
    for (double r = 0.1; r < 50.0; r += 0.1) {
      const double v = scalar_curvature(p, r);
      CHECK(v < 0.0);
      CHECK(v >= prev);
      prev = v;
    }
    CHECK(std::abs(scalar_curvature(p, 1e4)) < 1e-6);
  }

  TEST_CASE("oscillator potential tends to omega^2 / (2 lambda)") {
    for (double lambda : {0.02, 0.04, 0.06, 0.1}) {
      const ModelParams p = params(3, lambda);
      CHECK(oscillator_potential(p, 1e7) == doctest::Approx(1.0 / (2.0 * lambda)).epsilon(1e-9));
      CHECK(*continuum_threshold(p) == doctest::Approx(1.0 / (2.0 * lambda)));
    }
    CHECK_FALSE(continuum_threshold(params(3, 0.0)).has_value());
    CHECK(format_threshold(std::nullopt) == "infinity");
  }

  TEST_CASE("flattening coordinate has dQ/dr = sqrt(D) and inverts") {
    for (double lambda : {0.0, 0.02, 0.5}) {
      const ModelParams p = params(3, lambda);
      auto q = [&](double r) { return flattening_coordinate(p, r); };
      for (double r : {0.01, 0.5, 3.0, 40.0}) {
        CHECK(first_derivative(q, r, 1e-4) == doctest::Approx(std::sqrt(conformal_factor(p, r))).epsilon(1e-8));
        const double back = inverse_flattening(p, q(r));
        CHECK(std::abs(flattening_coordinate(p, back) - q(r)) <= 1e-12 * (1.0 + q(r)));
        CHECK(back == doctest::Approx(r).epsilon(1e-10));
      }
    }
    CHECK(inverse_flattening(params(3, 0.02), 0.0) == 0.0);
  }

  TEST_CASE("classical effective minimum") {
    const auto curved = classical_effective_minimum(params(3, 0.02), 100.0);
    CHECK(curved.r_min == doctest::Approx(3.49).epsilon(0.005 / 3.49));
    CHECK(curved.u_min == doctest::Approx(8.2).epsilon(0.05 / 8.2));
    const auto flat = classical_effective_minimum(params(3, 0.0), 100.0);
    CHECK(flat.r_min == doctest::Approx(std::sqrt(10.0)));
    CHECK(flat.u_min == doctest::Approx(10.0));
    // Stationary point of the curve.
    auto u = [](double r) { return classical_effective_potential(params(3, 0.02), 100.0, r); };
    CHECK(std::abs(first_derivative(u, curved.r_min, 1e-4)) < 1e-8);
    CHECK(u(1e6) == doctest::Approx(25.0).epsilon(1e-6));
    CHECK_THROWS_AS((void)classical_effective_potential(params(3, 0.02), 1.0, 0.0), std::domain_error);
  }

  TEST_CASE("quantum effective potential is the Liouville normal form of the tlb radial equation") {
    // For -(hbar^2/2)(1/w)(p y')' + V with w = r^(N-1) D^(N/2), p = r^(N-1) D^(N/2-1),
    // Q = int sqrt(w/p) dr and y = m^-1 u with m = (p w)^(1/4), the potential becomes
    // V + (hbar^2/2) m''(Q) / m.
    for (int dim = 2; dim <= 4; ++dim)
      for (int l : {0, 1, 3}) {
        if (dim == 2 && l == 0) continue;
        const ModelParams p = params(dim, 0.05, 1.2, 0.8);
        const double n = dim;
        auto v = [&](double r) {
          const double d = conformal_factor(p, r);
          const double h2 = p.hbar * p.hbar;
          return h2 * l * (l + n - 2) / (2 * r * r * d) + oscillator_potential(p, r) -
                 h2 * p.lambda * (n - 2) * (2 * n + 3 * p.lambda * r * r * (n - 2)) / (8 * d * d * d);
        };
        auto m_of_q = [&](double qv) {
          const double r = inverse_flattening(p, qv);
          const double d = conformal_factor(p, r);
          return std::pow(std::pow(r, 2 * (n - 1)) * std::pow(d, n - 1), 0.25);
        };
        for (double r : {0.7, 2.0, 5.0}) {
          const double qv = flattening_coordinate(p, r);
          const double oracle = v(r) + 0.5 * p.hbar * p.hbar * second_derivative(m_of_q, qv, 1e-3) / m_of_q(qv);
          CHECK(quantum_effective_potential(p, l, r) == doctest::Approx(oracle).epsilon(1e-7));
        }
      }
  }

  TEST_CASE("flat quantum effective potential") {
    const ModelParams p = params(3, 0.0);
    const int l = 10;
    const double c = l * (l + 1.0);
    CHECK(quantum_effective_potential(p, l, 2.0) == doctest::Approx(c / 8.0 + 2.0));
    const auto m = flat_quantum_effective_minimum(p, l);
    CHECK(m.u_min == doctest::Approx(std::sqrt(110.0)));
    CHECK(m.r_min == doctest::Approx(std::pow(110.0, 0.25)));
    CHECK(quantum_effective_minimum(p, l).u_min == doctest::Approx(std::sqrt(110.0)).epsilon(1e-9));
  }

  TEST_CASE("quantum effective minimum for N = 3, l = 10") {
    const auto m = quantum_effective_minimum(params(3, 0.02), 10);
    CHECK(m.r_min == doctest::Approx(3.59).epsilon(0.005 / 3.59));
    CHECK(m.u_min == doctest::Approx(8.52).epsilon(0.005 / 8.52));
    auto u = [](double r) { return quantum_effective_potential(params(3, 0.02), 10, r); };
    CHECK(std::abs(first_derivative(u, m.r_min, 1e-4)) < 1e-6);
    CHECK_THROWS_AS((void)quantum_effective_minimum(params(2, 0.02), 0), std::domain_error);
    CHECK_THROWS_AS((void)quantum_effective_potential(params(3, 0.02), 1, 0.0), std::domain_error);
  }

  TEST_CASE("closed-form energies") {
    for (double lambda : {0.0, 0.01, 0.02, 0.04})
      for (int dim = 2; dim <= 4; ++dim) {
        const ModelParams p = params(dim, lambda, 1.3, 0.7);
        double prev_gap = INFINITY;
        for (int n = 0; n <= 30; ++n) {
          const double a = n + dim / 2.0;
          const double h = p.hbar;
          const double oracle = -lambda * h * h * a * a + h * a * std::sqrt(h * h * lambda * lambda * a * a + p.omega * p.omega);
          const double e = closed_form_energy(p, n);
          CHECK(e == doctest::Approx(oracle).epsilon(1e-12));
          // E = hbar Omega(E) (n + N/2)
          CHECK(h * effective_frequency(p, e) * a == doctest::Approx(e).epsilon(1e-12));
          if (lambda > 0) CHECK(e < *continuum_threshold(p));
          const double gap = closed_form_energy(p, n + 1) - e;
          if (lambda > 0)
            CHECK(gap < prev_gap);
          else
            CHECK(gap == doctest::Approx(h * p.omega));
          prev_gap = gap;
        }
      }
    const ModelParams p = params(3, 0.02);
    CHECK(closed_form_energy(p, 100000) == doctest::Approx(25.0).epsilon(1e-3));
    CHECK(closed_form_energy(params(3, 0.01), 0) == doctest::Approx(1.4777).epsilon(1e-4));
    CHECK_THROWS_AS((void)effective_frequency(p, 30.0), std::domain_error);
  }
}
