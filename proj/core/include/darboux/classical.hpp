#pragma once

// Classical motion generated by H = (p^2 + omega^2 q^2) / (2 (1 + lambda q^2)):
// integration, conserved quantities and numerical superintegrability evidence.

#include "darboux/model.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace darboux::classical {

struct PhaseState {
  std::vector<double> q;
  std::vector<double> p;
  double t = 0.0;

  [[nodiscard]] int dim() const noexcept { return static_cast<int>(q.size()); }
};

struct Flow {
  std::vector<double> dq;
  std::vector<double> dp;
};

/// Raised when the adaptive step size collapses.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[nodiscard]] double hamiltonian(const ModelParams& params, const PhaseState& state);
[[nodiscard]] Flow equations_of_motion(const ModelParams& params, const PhaseState& state);

/// Values of H, the angular invariants and the Fradkin tensor at a point.
struct Invariants {
  double hamiltonian = 0.0;
  /// C^(m) for m = 2..N (index m - 2).
  std::vector<double> upper;
  /// C_(m) for m = 2..N (index m - 2); C_(N) equals C^(N).
  std::vector<double> lower;
  /// Row-major N x N tensor I_ij.
  std::vector<double> fradkin;
};

[[nodiscard]] Invariants classical_invariants(const ModelParams& params, const PhaseState& state);

/// Flat list of all monitored invariants with matching names: H, C^(m),
/// C_(m) for m < N, then every I_ij.
[[nodiscard]] std::vector<double> invariant_vector(const ModelParams& params, const PhaseState& state);
[[nodiscard]] std::vector<std::string> invariant_names(int dim);

struct IntegrationOptions {
  double tolerance = 1e-10;
  /// Spacing of recorded samples; 0 records every accepted step.
  double sample_interval = 0.0;
  /// Steps below this size (relative to 1 + |t|) abort the integration.
  double min_step = 1e-14;
};

struct TrajectoryRecord {
  std::vector<PhaseState> samples;
  std::vector<std::string> invariant_names;
  /// max_t |I(t) - I(0)| / max(1, |I(0)|), per invariant, over accepted steps.
  std::vector<double> drift;
  std::size_t steps = 0;

  [[nodiscard]] double max_drift() const;
};

/// Dormand-Prince 5(4) with error control and dense output.
[[nodiscard]] TrajectoryRecord integrate(const ModelParams& params, const PhaseState& initial,
                                         double t_end, const IntegrationOptions& options = {});

/// Time-dependent state along a trajectory, evaluated by dense output.
class DenseTrajectory {
 public:
  DenseTrajectory(const ModelParams& params, const PhaseState& initial, double t_end,
                  double tolerance);
  [[nodiscard]] PhaseState at(double t) const;
  [[nodiscard]] double t_end() const noexcept { return t_end_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  double t_end_;
};

/// Period of a bounded orbit. In the time variable tau with dt = D dtau the
/// motion is a flat oscillator of frequency Omega = sqrt(omega^2 - 2 lambda E),
/// and integrating D over one tau-period gives
/// T = (2 pi / Omega) (1 + lambda (|q0|^2 + |p0|^2 / Omega^2) / 2).
/// Throws std::domain_error for unbounded data.
[[nodiscard]] double period_estimate(const ModelParams& params, const PhaseState& state);

struct ClosureResult {
  bool conclusive = false;
  double period = 0.0;
  double distance = 0.0;
  double period_estimate = 0.0;
};

struct ClosureOptions {
  double threshold = 1e-4;
  double tolerance = 1e-12;
  /// Coarse scan step as a fraction of the period estimate.
  double scan_fraction = 1.0 / 2000.0;
};

/// First return of the phase-space point to its start within (0, horizon].
/// horizon <= 0 selects 1.5 times the period estimate.
[[nodiscard]] ClosureResult orbit_closure(const ModelParams& params, const PhaseState& initial,
                                          double horizon = 0.0, const ClosureOptions& options = {});

using PhaseFunction = std::function<double(const PhaseState&)>;

/// {F, G} = sum_i dF/dq_i dG/dp_i - dF/dp_i dG/dq_i by central differences
/// with step h (1 + |x|) per coordinate.
[[nodiscard]] double poisson_bracket(const PhaseFunction& f, const PhaseFunction& g,
                                     const PhaseState& state, double h = 1e-6);

/// Numerical rank of the Jacobian of the functions at a point: singular values
/// above rel_threshold times the largest.
[[nodiscard]] int jacobian_rank(const std::vector<PhaseFunction>& functions,
                                const PhaseState& state, double rel_threshold = 1e-8,
                                double h = 1e-6);

/// H, C^(m) (m = 2..N), C_(m) (m = 2..N-1) and I_ii for the fixed index.
[[nodiscard]] std::vector<PhaseFunction> superintegrable_set(const ModelParams& params, int fixed_i);
/// H and C_(m), m = 2..N.
[[nodiscard]] std::vector<PhaseFunction> involutive_set(const ModelParams& params);

[[nodiscard]] int independence_rank(const ModelParams& params, const PhaseState& state, int fixed_i);

/// q and p drawn uniformly from the unit ball, rejecting points where any
/// hyperspherical sin(theta_k) of q is below 1e-3 in magnitude.
[[nodiscard]] PhaseState random_state(int dim, std::mt19937_64& rng);

struct StateCheck {
  PhaseState initial;
  double energy = 0.0;
  double max_drift = 0.0;
  /// max |{H, I}| over every monitored invariant I at the initial point.
  double max_bracket = 0.0;
  int rank = 0;
  ClosureResult closure;
};

struct SuiteOptions {
  int states = 20;
  std::uint64_t seed = 7;
  double t_end = 100.0;
  double tolerance = 1e-10;
  double drift_limit = 1e-7;
  double bracket_limit = 1e-6;
};

struct SuiteReport {
  ModelParams params;
  SuiteOptions options;
  std::vector<StateCheck> states;

  [[nodiscard]] double max_drift() const;
  [[nodiscard]] double max_bracket() const;
  [[nodiscard]] int min_rank() const;
  /// Largest closure distance among conclusive closures.
  [[nodiscard]] double max_closure_distance() const;
  [[nodiscard]] std::size_t inconclusive_closures() const;
  /// Drift, brackets and rank 2N-1 on every state.
  [[nodiscard]] bool invariants_ok() const;
  /// Every closure conclusive and within its threshold.
  [[nodiscard]] bool closures_ok() const;
};

/// Random bounded initial conditions, each integrated over [0, t_end] with
/// drift monitoring, checked for brackets, rank and orbit closure.
[[nodiscard]] SuiteReport run_suite(const ModelParams& params, const SuiteOptions& options = {});

}  // namespace darboux::classical
