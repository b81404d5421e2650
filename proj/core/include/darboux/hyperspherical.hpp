#pragma once

// Hyperspherical phase-space coordinates (r, theta_1..theta_(N-1), p_r,
// p_theta) and the radial reduction of the classical Hamiltonian.
//
// q_j = r cos(theta_j) prod_(k<j) sin(theta_k) for j < N and
// q_N = r prod_(k<N) sin(theta_k), with theta_k in [0, pi] for k < N-1 and
// theta_(N-1) in [0, 2 pi).

#include "darboux/classical.hpp"

#include <vector>

namespace darboux::classical {

struct HypersphericalState {
  double r = 0.0;
  std::vector<double> theta;
  double p_r = 0.0;
  std::vector<double> p_theta;
};

/// Throws std::domain_error at the origin or where some sin(theta_k) with
/// k < N-1 vanishes (the chart degenerates there).
[[nodiscard]] HypersphericalState to_hyperspherical(const PhaseState& state);
[[nodiscard]] PhaseState from_hyperspherical(const HypersphericalState& h);

/// Total angular momentum sum_j p_theta_j^2 / prod_(k<j) sin^2(theta_k).
[[nodiscard]] double angular_momentum_squared(const HypersphericalState& h);

/// C_(m) in angular variables, m = 2..N; C_(N) is the total angular momentum.
[[nodiscard]] double lower_casimir(const HypersphericalState& h, int m);

struct RadialReduction {
  /// H evaluated in Cartesian variables.
  double cartesian = 0.0;
  /// (p_r^2 + L^2 / r^2 + omega^2 r^2) / (2 (1 + lambda r^2)).
  double hyperspherical = 0.0;
  /// P^2 / 2 + U_eff(r) with P = p_r / sqrt(1 + lambda r^2).
  double flattened = 0.0;
  /// Flattened coordinate Q(r) and momentum P.
  double flat_q = 0.0;
  double flat_p = 0.0;

  [[nodiscard]] bool consistent(double tolerance = 1e-12) const noexcept;
};

[[nodiscard]] RadialReduction radial_reduction_check(const ModelParams& params,
                                                     const PhaseState& state);

}  // namespace darboux::classical
