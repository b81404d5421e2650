#include "darboux/coefficient.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace darboux::algebra;

namespace {

// Small random polynomial in lambda, q1..q3, omega, hbar with Gaussian-rational coefficients.
Polynomial random_polynomial(std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<PolyTerm> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::of(Symbol::lambda, exp(rng)) * Monomial::of(Symbol::q1, exp(rng)) *
                 Monomial::of(Symbol::q2, exp(rng)) * Monomial::of(Symbol::q3, exp(rng)) *
                 Monomial::of(Symbol::hbar, exp(rng));
    out.push_back({m, GaussianRational(Rational(coef(rng), 1 + exp(rng)), Rational(coef(rng), 3))});
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace

TEST_SUITE("arithmetic") {
  TEST_CASE("rationals normalize and compare exactly") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(-2, 5).inverse() == Rational(-5, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(7, 2).to_string() == "7/2");
  }

  TEST_CASE("rational overflow throws instead of wrapping") {
    const Rational big(INT64_MAX / 2 + 1);
    CHECK_THROWS_AS((void)(big * Rational(2)), std::overflow_error);
    CHECK_THROWS_AS((void)(big + big), std::overflow_error);
  }

  TEST_CASE("gaussian rationals: i^2 = -1 and conj/inverse") {
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    const GaussianRational z(Rational(3), Rational(-4));
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK((z * z.conj()).is_real());
    CHECK((z * z.conj()).re() == Rational(25));
  }

  TEST_CASE("polynomial ring axioms on random samples") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
      const Polynomial a = random_polynomial(rng);
      const Polynomial b = random_polynomial(rng);
      const Polynomial c = random_polynomial(rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      // Leibniz rule
      CHECK((a * b).derivative(Symbol::q1) == a.derivative(Symbol::q1) * b + a * b.derivative(Symbol::q1));
    }
  }

  TEST_CASE("polynomial evaluation is a ring homomorphism") {
    std::mt19937 rng(5);
    const double q[3] = {0.3, -1.1, 0.7};
    const Polynomial::Values at{0.02, 1.3, 0.9, q};
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial a = random_polynomial(rng);
      const Polynomial b = random_polynomial(rng);
      const auto lhs = (a * b).evaluate(at);
      const auto rhs = a.evaluate(at) * b.evaluate(at);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
  }

  TEST_CASE("exact division by the conformal factor") {
    std::mt19937 rng(9);
    const Polynomial& d = Polynomial::conformal(3);
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial a = random_polynomial(rng);
      const auto q = (a * d).divide_by_conformal(3);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
    CHECK_FALSE(Polynomial::symbol(Symbol::q1).divide_by_conformal(3).has_value());
  }

  TEST_CASE("coefficients stay canonical") {
    const int dim = 2;
    const Coefficient d(dim, Polynomial::conformal(dim));
    const Coefficient inv = Coefficient::conformal_power(dim, -1);
    CHECK(d * inv == Coefficient(dim, GaussianRational(1)));
    // d/dq1 (1/D) = -2 lambda q1 / D^2
    const Coefficient expected(dim,
                               Polynomial(Monomial::of(Symbol::lambda) * Monomial::of(Symbol::q1),
                                          GaussianRational(-2)),
                               2);
    CHECK(inv.derivative(0) == expected);
    const auto back = inv.scalar_d_power_inverse();
    REQUIRE(back.has_value());
    CHECK(*back == d);
    CHECK(Coefficient(dim, Polynomial::conformal(dim), 1) == Coefficient(dim, GaussianRational(1)));
  }

  TEST_CASE("coefficient quotient rule matches numerical differentiation") {
    std::mt19937 rng(3);
    const int dim = 3;
    for (int trial = 0; trial < 10; ++trial) {
      const Coefficient c(dim, random_polynomial(rng), 2);
      const Coefficient dc = c.derivative(1);
      double q[3] = {0.4, -0.6, 0.9};
      const double h = 1e-6;
      const Polynomial::Values at{0.05, 1.0, 1.0, q};
      const auto analytic = dc.evaluate(at);
      q[1] += h;
      const auto up = c.evaluate({0.05, 1.0, 1.0, q});
      q[1] -= 2 * h;
      const auto down = c.evaluate({0.05, 1.0, 1.0, q});
      CHECK(std::abs(analytic - (up - down) / (2 * h)) <= 1e-6 * (1.0 + std::abs(analytic)));
    }
  }
}
