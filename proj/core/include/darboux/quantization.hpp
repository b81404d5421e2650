#pragma once

// Quantum Hamiltonians of the oscillator under the different ordering
// prescriptions, together with their symmetry operators. N is concrete;
// lambda, omega and hbar stay symbolic.

#include "darboux/operator_expr.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace darboux::algebra {

enum class Flavor { schrodinger, lb, tlb, pdm, tpdm };

[[nodiscard]] std::string_view flavor_name(Flavor f) noexcept;
[[nodiscard]] std::optional<Flavor> parse_flavor(std::string_view name) noexcept;

/// omega^2 q^2 / (2D).
[[nodiscard]] OperatorExpr oscillator_potential_operator(int dim);

/// Hamiltonian of the requested flavor. The lb and pdm kinetic terms are
/// built from their defining divergence forms, not from the corrections below.
[[nodiscard]] OperatorExpr build_hamiltonian(Flavor flavor, int dim);

/// Momentum-dependent term separating the lb Hamiltonian from the direct one.
[[nodiscard]] OperatorExpr lb_momentum_term(int dim);
/// Curvature potential added on top of lb to restore the Fradkin symmetries.
[[nodiscard]] OperatorExpr tlb_curvature_term(int dim);
/// Momentum-dependent term separating pdm from the direct Hamiltonian.
[[nodiscard]] OperatorExpr pdm_momentum_term(int dim);
/// Central potential added on top of pdm.
[[nodiscard]] OperatorExpr tpdm_potential_term(int dim);

/// Exponent a with H_flavor = D^a H D^-a (schrodinger, tlb, tpdm only).
[[nodiscard]] Rational similarity_exponent(Flavor flavor, int dim);
/// Exponent w of the weight D^w making H_flavor formally self-adjoint.
[[nodiscard]] Rational self_adjoint_weight(Flavor flavor, int dim);

struct NamedOperator {
  std::string name;
  OperatorExpr op;
};

/// Angular invariants: sums of squared angular momenta over the leading
/// ("C^(m)") and trailing ("C_(m)") m coordinates, m = 2..N. The two m = N
/// sums coincide and appear once, so 2N-3 operators are returned.
[[nodiscard]] std::vector<NamedOperator> build_angular_invariants(int dim);

/// N x N Fradkin tensor of the schrodinger, tlb or tpdm Hamiltonian, each
/// written out from its own closed form.
[[nodiscard]] std::vector<std::vector<OperatorExpr>> build_fradkin(Flavor flavor, int dim);

/// sl(2) realization J+ = p^2, J- = q^2, J3 = q.p - i hbar N / 2.
struct Sl2Realization {
  OperatorExpr j_plus;
  OperatorExpr j_minus;
  OperatorExpr j_3;
};
[[nodiscard]] Sl2Realization build_sl2(int dim);

struct ConformalIdentityResult {
  bool holds = false;
  /// Curvature potential obtained from the similarity transform.
  OperatorExpr derived_potential;
  /// hbar^2 (N-2)/(8(N-1)) R with R from the conformal-metric formula.
  OperatorExpr curvature_side;
  /// The conformal-metric curvature matched the closed-form curvature.
  bool curvature_matches_closed_form = false;
};

/// Checks that the curvature potential is hbar^2 (N-2)/(8(N-1)) times the
/// scalar curvature, as exact rational functions.
[[nodiscard]] ConformalIdentityResult conformal_potential_identity(int dim);

}  // namespace darboux::algebra
