#pragma once

// Closed-form Cartesian eigenfunctions: a flat Hermite-Gaussian product with
// the level-dependent width beta^2 = Omega(E_n)/hbar, times a flavor-specific
// power of D = 1 + lambda q^2.

#include "darboux/model.hpp"
#include "darboux/radial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace darboux::spectra {

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
[[nodiscard]] double hermite(int n, double x);

struct CartesianEigenfunction {
  ModelParams params;
  /// Quantum numbers n_1..n_N.
  std::vector<int> partition;
  RadialFlavor flavor = RadialFlavor::tlb;

  [[nodiscard]] int n() const;
  [[nodiscard]] double energy() const;
  [[nodiscard]] double beta() const;
  /// Exponent s in Psi_flavor = D^s Psi.
  [[nodiscard]] double prefactor_exponent() const;
};

/// Validates the partition and that E_n lies below the threshold.
[[nodiscard]] CartesianEigenfunction make_eigenfunction(const ModelParams& params,
                                                        std::vector<int> partition,
                                                        RadialFlavor flavor = RadialFlavor::tlb);

/// Unnormalized value of the flavor's eigenfunction at q.
[[nodiscard]] double eigenfunction_value(const CartesianEigenfunction& ef, std::span<const double> q);

struct ResidualReport {
  double max_relative = 0.0;
  std::size_t evaluated = 0;
  /// Points dropped for sitting too close to a node.
  std::size_t skipped = 0;
};

/// max |(-hbar^2 Lap + Omega^2 q^2) Psi - 2 E Psi| / |2 E Psi| over the
/// points, with derivatives taken analytically. Points where |Psi| is below
/// 1e-8 times the largest |Psi| among the samples are skipped. `energy`
/// overrides E_n (Omega stays tied to E_n), which is how a wrong level shows up.
[[nodiscard]] ResidualReport residual_check(const CartesianEigenfunction& ef,
                                            const std::vector<std::vector<double>>& points,
                                            std::optional<double> energy = std::nullopt);

/// Same test against the flavor's own Hamiltonian, built symbolically and
/// evaluated numerically: max |H Psi_f - E Psi_f| / |E Psi_f|.
[[nodiscard]] ResidualReport hamiltonian_residual(const CartesianEigenfunction& ef,
                                                  const std::vector<std::vector<double>>& points);

/// All (n_1..n_N) with n_i >= 0 summing to n, in lexicographic order.
[[nodiscard]] std::vector<std::vector<int>> compositions(int dim, int n);

/// Dimension of the degree-l spherical harmonics on S^(N-1).
[[nodiscard]] std::int64_t harmonic_dimension(int dim, int l);

struct DegeneracyCensus {
  int dim = 0;
  int n = 0;
  std::int64_t cartesian = 0;
  std::int64_t radial = 0;
  /// (l, dim Y_l) for every l with n - l even and >= 0.
  std::vector<std::pair<int, std::int64_t>> by_l;

  [[nodiscard]] bool agree() const noexcept { return cartesian == radial; }
};

[[nodiscard]] DegeneracyCensus degeneracy_census(int dim, int n);

}  // namespace darboux::spectra
