#pragma once

// Lowest eigenpairs of real symmetric tridiagonal matrices: Sturm-sequence
// bisection for eigenvalues, inverse iteration for eigenvectors.

#include <cstddef>
#include <vector>

namespace darboux::spectra {

struct SymmetricTridiagonal {
  std::vector<double> diag;
  /// off[i] couples rows i and i+1; size diag.size() - 1.
  std::vector<double> off;

  [[nodiscard]] std::size_t size() const noexcept { return diag.size(); }
};

/// Number of eigenvalues strictly below x.
[[nodiscard]] std::size_t count_below(const SymmetricTridiagonal& t, double x);

/// The k smallest eigenvalues in increasing order (fewer if the matrix is
/// smaller), each bracketed to |hi - lo| <= abs_tol + rel_tol |value|.
[[nodiscard]] std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& t, std::size_t k,
                                                     double rel_tol = 1e-15, double abs_tol = 0.0);

/// Eigenvalue number `index` (0-based, increasing order) by bisection.
[[nodiscard]] double eigenvalue_at(const SymmetricTridiagonal& t, std::size_t index,
                                   double rel_tol = 1e-15);

/// Unit eigenvector for a converged eigenvalue, by inverse iteration with a
/// partially pivoted LU factorization of T - shift I.
[[nodiscard]] std::vector<double> eigenvector(const SymmetricTridiagonal& t, double eigenvalue);

/// y = T x.
[[nodiscard]] std::vector<double> apply(const SymmetricTridiagonal& t, const std::vector<double>& x);

}  // namespace darboux::spectra
