#include "darboux/tridiagonal.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

using namespace darboux::spectra;

namespace {

SymmetricTridiagonal random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  SymmetricTridiagonal t;
  for (std::size_t i = 0; i < n; ++i) t.diag.push_back(u(rng));
  for (std::size_t i = 0; i + 1 < n; ++i) t.off.push_back(u(rng));
  return t;
}

Eigen::VectorXd eigen_reference(const SymmetricTridiagonal& t) {
  const auto n = static_cast<Eigen::Index>(t.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = t.diag[static_cast<std::size_t>(i)];
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = t.off[static_cast<std::size_t>(i)];
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST_SUITE("tridiagonal") {
  TEST_CASE("eigenvalues agree with a dense solver") {
    std::mt19937 rng(1);
    for (std::size_t n : {1u, 2u, 5u, 40u, 200u}) {
      const auto t = random_matrix(rng, n);
      const Eigen::VectorXd ref = eigen_reference(t);
      const auto k = std::min<std::size_t>(n, 10);
      const auto values = lowest_eigenvalues(t, k);
      REQUIRE(values.size() == k);
      for (std::size_t i = 0; i < k; ++i) {
        CHECK(values[i] == doctest::Approx(ref(static_cast<Eigen::Index>(i))).epsilon(1e-12).scale(1.0));
        CHECK(eigenvalue_at(t, i) == doctest::Approx(values[i]).epsilon(1e-13).scale(1.0));
      }
      CHECK(count_below(t, ref(static_cast<Eigen::Index>(k - 1)) + 1e-9) >= k);
    }
  }

  TEST_CASE("discrete Laplacian has the textbook spectrum") {
    const std::size_t n = 1000;
    SymmetricTridiagonal t{std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
    const auto values = lowest_eigenvalues(t, 5);
    for (std::size_t k = 0; k < 5; ++k)
      CHECK(values[k] == doctest::Approx(2.0 - 2.0 * std::cos((k + 1) * std::numbers::pi / (n + 1))).epsilon(1e-10));
    CHECK(count_below(t, 0.0) == 0);
    CHECK(count_below(t, 4.0) == n);
  }

  TEST_CASE("inverse iteration: residual, orthogonality, unit norm") {
    std::mt19937 rng(7);
    const auto t = random_matrix(rng, 300);
    const auto values = lowest_eigenvalues(t, 6);
    std::vector<std::vector<double>> vectors;
    for (double e : values) {
      auto v = eigenvector(t, e);
      CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-12));
      auto tv = darboux::spectra::apply(t, v);
      for (std::size_t i = 0; i < v.size(); ++i) tv[i] -= e * v[i];
      CHECK(norm(tv) < 1e-10);
      vectors.push_back(std::move(v));
    }
    for (std::size_t a = 0; a < vectors.size(); ++a)
      for (std::size_t b = a + 1; b < vectors.size(); ++b) {
        double dot = 0.0;
        for (std::size_t i = 0; i < vectors[a].size(); ++i) dot += vectors[a][i] * vectors[b][i];
        CHECK(std::abs(dot) < 1e-10);
      }
  }

  TEST_CASE("malformed input") {
    SymmetricTridiagonal bad{{1.0, 2.0}, {}};
    CHECK_THROWS_AS((void)lowest_eigenvalues(bad, 1), std::invalid_argument);
    CHECK(lowest_eigenvalues(SymmetricTridiagonal{}, 3).empty());
    SymmetricTridiagonal one{{4.0}, {}};
    CHECK_THROWS_AS((void)eigenvalue_at(one, 1), std::out_of_range);
  }
}
