#pragma once

// Closed-form scalar functions of the Darboux III oscillator: geometry of the
// conformally flat metric ds^2 = (1 + lambda r^2) dq^2, the intrinsic
// oscillator potential, classical and quantum radial effective potentials and
// the exact bound-state spectrum.
//
// All functions take the radius r = |q| as their argument. Callers working on
// the flattened radial line Q compose with inverse_flattening().

#include <optional>
#include <string>

namespace darboux {

/// Physical parameters of the model. Dimensionless units; the defaults match
/// hbar = omega = 1, N = 3 with a moderate deformation.
struct ModelParams {
  int dim = 3;
  double lambda = 0.02;
  double omega = 1.0;
  double hbar = 1.0;

  /// Throws std::invalid_argument unless dim >= 2, lambda >= 0, omega >= 0
  /// and hbar > 0.
  void validate() const;

  [[nodiscard]] bool is_flat() const noexcept { return lambda == 0.0; }
};

struct EffectiveMinimum {
  double r_min = 0.0;
  double u_min = 0.0;
};

/// Conformal factor 1 + lambda r^2.
[[nodiscard]] double conformal_factor(const ModelParams& params, double r) noexcept;

[[nodiscard]] double scalar_curvature(const ModelParams& params, double r);

[[nodiscard]] double oscillator_potential(const ModelParams& params, double r);

/// Q(r) = r sqrt(1 + lambda r^2)/2 + asinh(sqrt(lambda) r)/(2 sqrt(lambda)),
/// the coordinate in which the radial kinetic term becomes flat. Q = r when
/// lambda = 0.
[[nodiscard]] double flattening_coordinate(const ModelParams& params, double r);

/// Inverse of flattening_coordinate. Bracketed Newton iteration; the result
/// satisfies |Q(r) - Q*| <= 1e-12 (1 + Q*).
[[nodiscard]] double inverse_flattening(const ModelParams& params, double q_value);

/// Radial effective potential seen by the classical motion with squared
/// angular momentum c_n. Throws std::domain_error at r = 0 when c_n > 0.
[[nodiscard]] double classical_effective_potential(const ModelParams& params, double c_n,
                                                   double r);

/// Interior minimum of classical_effective_potential. Requires c_n > 0 and
/// omega > 0.
[[nodiscard]] EffectiveMinimum classical_effective_minimum(const ModelParams& params,
                                                           double c_n);

/// Potential of the one-dimensional Schroedinger problem on the Q line for
/// angular quantum number l (includes the N = 2, l = 0 case, which has no
/// minimum). Throws std::domain_error for r <= 0.
[[nodiscard]] double quantum_effective_potential(const ModelParams& params, int l, double r);

/// Location and value of the minimum of quantum_effective_potential, found
/// numerically. Throws std::domain_error for N = 2, l = 0 (no minimum).
[[nodiscard]] EffectiveMinimum quantum_effective_minimum(const ModelParams& params, int l);

/// Flat-space (lambda = 0) minimum, closed form.
[[nodiscard]] EffectiveMinimum flat_quantum_effective_minimum(const ModelParams& params, int l);

/// E_n = -lambda hbar^2 (n + N/2)^2 + hbar (n + N/2) sqrt(hbar^2 lambda^2 (n + N/2)^2 + omega^2).
[[nodiscard]] double closed_form_energy(const ModelParams& params, int n);

/// Effective frequency sqrt(omega^2 - 2 lambda E) of the flat oscillator
/// equivalent to the level E. Throws std::domain_error above threshold.
[[nodiscard]] double effective_frequency(const ModelParams& params, double energy);

/// Bottom of the continuous spectrum omega^2 / (2 lambda); std::nullopt
/// stands for +infinity (flat case).
[[nodiscard]] std::optional<double> continuum_threshold(const ModelParams& params);

/// Helper for reports: "infinity" for nullopt, the number otherwise.
[[nodiscard]] std::string format_threshold(const std::optional<double>& threshold);

}  // namespace darboux
