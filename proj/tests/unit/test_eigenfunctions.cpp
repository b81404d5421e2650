#include "darboux/eigenfunctions.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace darboux;
using namespace darboux::spectra;

namespace {

ModelParams params(int dim, double lambda) { return ModelParams{dim, lambda, 1.0, 1.0}; }

std::vector<std::vector<double>> sample_points(int dim, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<std::vector<double>> out(static_cast<std::size_t>(count), std::vector<double>(static_cast<std::size_t>(dim)));
  for (auto& q : out)
    for (auto& x : q) x = u(rng);
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double q_squared(const std::vector<double>& q) {
  double s = 0.0;
  for (double x : q) s += x * x;
  return s;
}

}  // namespace

TEST_SUITE("eigenfunctions") {
  TEST_CASE("Hermite polynomials match explicit forms") {
    for (double x : {-2.5, -0.3, 0.0, 0.7, 1.9}) {
      CHECK(hermite(0, x) == doctest::Approx(1.0));
      CHECK(hermite(1, x) == doctest::Approx(2 * x));
      CHECK(hermite(2, x) == doctest::Approx(4 * x * x - 2));
      CHECK(hermite(3, x) == doctest::Approx(8 * x * x * x - 12 * x));
      CHECK(hermite(4, x) == doctest::Approx(16 * std::pow(x, 4) - 48 * x * x + 12));
    }
  }

  TEST_CASE("ground state shape and flavor prefactors") {
    const auto p = params(3, 0.02);
    const auto tlb = make_eigenfunction(p, {0, 0, 0}, RadialFlavor::tlb);
    const auto sch = make_eigenfunction(p, {0, 0, 0}, RadialFlavor::schrodinger);
    const auto pdm = make_eigenfunction(p, {0, 0, 0}, RadialFlavor::tpdm);
    CHECK(tlb.beta() == doctest::Approx(std::sqrt(std::sqrt(1.0 - 2.0 * 0.02 * tlb.energy()))));
    for (const auto& q : sample_points(3, 10, 3)) {
      const double d = 1.0 + 0.02 * q_squared(q);
      const double gauss = std::exp(-tlb.beta() * tlb.beta() * q_squared(q) / 2.0);
      CHECK(eigenfunction_value(tlb, q) == doctest::Approx(std::pow(d, -0.25) * gauss).epsilon(1e-13));
      CHECK(eigenfunction_value(sch, q) == doctest::Approx(gauss).epsilon(1e-13));
      CHECK(eigenfunction_value(pdm, q) / eigenfunction_value(tlb, q) == doctest::Approx(std::pow(d, 0.75)).epsilon(1e-13));
    }
  }

  TEST_CASE("parity follows the total quantum number") {
    const auto ef = make_eigenfunction(params(3, 0.02), {2, 1, 0});
    for (auto q : sample_points(3, 10, 5)) {
      const double plus = eigenfunction_value(ef, q);
      for (auto& x : q) x = -x;
      CHECK(eigenfunction_value(ef, q) == doctest::Approx(-plus).epsilon(1e-13));
    }
  }

  TEST_CASE("residuals vanish for every partition with n <= 4") {
    for (int dim : {2, 3}) {
      const auto points = sample_points(dim, 40, 11);
      for (int n = 0; n <= 4; ++n)
        for (const auto& part : compositions(dim, n))
          for (auto f : {RadialFlavor::schrodinger, RadialFlavor::tlb, RadialFlavor::tpdm}) {
            const auto ef = make_eigenfunction(params(dim, 0.02), part, f);
            const auto r = residual_check(ef, points);
            CHECK(r.max_relative < 1e-10);
            CHECK(r.evaluated + r.skipped == points.size());
          }
    }
  }

  TEST_CASE("flat limit is the Hermite product") {
    const auto ef = make_eigenfunction(params(2, 0.0), {3, 0});
    CHECK(ef.energy() == doctest::Approx(4.0));
    CHECK(ef.beta() == doctest::Approx(1.0));
    const auto points = sample_points(2, 100, 2);
    CHECK(residual_check(ef, points).max_relative < 1e-12);
    for (const auto& q : points)
      CHECK(eigenfunction_value(ef, q) ==
            doctest::Approx(hermite(3, q[0]) * std::exp(-q_squared(q) / 2.0)).epsilon(1e-13));
  }

  TEST_CASE("wrong energy is caught") {
    const auto ef = make_eigenfunction(params(3, 0.02), {1, 1, 0});
    const auto points = sample_points(3, 50, 9);
    CHECK(residual_check(ef, points, ef.energy() * 1.01).max_relative > 1e-3);
  }

  TEST_CASE("flavor Hamiltonians annihilate H - E on their eigenfunctions") {
    for (int dim : {2, 3}) {
      const auto points = sample_points(dim, 20, 4);
      for (auto f : {RadialFlavor::schrodinger, RadialFlavor::tlb, RadialFlavor::tpdm}) {
        std::vector<int> part(static_cast<std::size_t>(dim), 0);
        part[0] = 2;
        part[1] = 1;
        const auto ef = make_eigenfunction(params(dim, 0.03), part, f);
        CHECK(hamiltonian_residual(ef, points).max_relative < 1e-10);
      }
    }
  }

  TEST_CASE("degeneracy census") {
    for (int dim = 2; dim <= 4; ++dim)
      for (int n = 0; n <= 10; ++n) {
        CHECK(static_cast<std::int64_t>(compositions(dim, n).size()) == binomial(n + dim - 1, dim - 1));
        const auto census = degeneracy_census(dim, n);
        CHECK(census.agree());
        CHECK(census.cartesian == binomial(n + dim - 1, dim - 1));
      }
    for (int dim = 2; dim <= 5; ++dim)
      for (int l = 0; l <= 8; ++l) {
        const std::int64_t oracle =
            dim == 2 ? (l == 0 ? 1 : 2) : binomial(l + dim - 1, dim - 1) - binomial(l + dim - 3, dim - 1);
        CHECK(harmonic_dimension(dim, l) == oracle);
      }
    CHECK(degeneracy_census(3, 2).cartesian == 6);
  }

  TEST_CASE("invalid requests") {
    CHECK_THROWS((void)make_eigenfunction(params(3, 0.02), {1, 1}));
    CHECK_THROWS((void)make_eigenfunction(params(3, 0.02), {-1, 0, 0}));
    CHECK_THROWS((void)make_eigenfunction(params(3, -0.1), {0, 0, 0}));
    // Levels crowd below the threshold but never reach it.
    const auto high = make_eigenfunction(params(3, 0.5), {40, 0, 0});
    CHECK(high.energy() < 1.0);
    CHECK(high.beta() > 0.0);
  }
}
