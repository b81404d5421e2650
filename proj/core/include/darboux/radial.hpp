#pragma once

// Bound states of the radial problems. The production path works on the
// flattened line Q, where every flavor reduces to -hbar^2/2 u'' + U_eff u;
// the isospectrality check instead discretizes each flavor's own radial
// operator in r.

#include "darboux/model.hpp"
#include "darboux/tridiagonal.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace darboux::spectra {

enum class RadialFlavor { schrodinger, tlb, tpdm };

[[nodiscard]] std::string_view flavor_name(RadialFlavor f) noexcept;
[[nodiscard]] std::optional<RadialFlavor> parse_radial_flavor(std::string_view name) noexcept;

struct RadialGrid {
  /// Right end of the Q interval; 0 selects auto_q_max().
  double q_max = 0.0;
  /// Interior grid points.
  int points = 4000;
};

struct RadialProblem {
  ModelParams params;
  int l = 0;
  RadialFlavor flavor = RadialFlavor::tlb;
  RadialGrid grid;
};

/// Q_max such that the Gaussian envelope (beta r)^n exp(-beta^2 r^2 / 2) of
/// the highest requested level (n = 2 (levels - 1) + l, beta^2 = Omega / hbar)
/// has dropped below 1e-12.
[[nodiscard]] double auto_q_max(const ModelParams& params, int l, int levels);

struct DiscreteRadialProblem {
  SymmetricTridiagonal matrix;
  double step = 0.0;
  double q_max = 0.0;
  /// Grid coordinates (Q for the flattened problem, r for the r-form).
  std::vector<double> nodes;
  /// Radius at each node.
  std::vector<double> radii;
  std::vector<std::string> warnings;
};

/// Second-order central differences of -hbar^2/2 d^2/dQ^2 + U_eff on the
/// vertex grid Q_i = i h, i = 1..M, h = Q_max / (M + 1), Dirichlet ends.
[[nodiscard]] DiscreteRadialProblem effective_1d_problem(const RadialProblem& problem,
                                                         int levels = 6);

/// Flavor's own radial operator -(hbar^2/2)(1/w)(p y')' + V on the cell
/// centres r_i = (i - 1/2) h of [0, r_max], symmetrized with sqrt(w).
[[nodiscard]] DiscreteRadialProblem radial_operator_problem(const ModelParams& params, int l,
                                                            RadialFlavor flavor, double r_max,
                                                            int cells);

struct LevelRecord {
  int n_r = 0;
  int n = 0;
  double e_numeric = 0.0;
  double e_closed = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  /// log2 of successive differences across the refinement sequence.
  double measured_order = 0.0;
  /// Raw eigenvalue on each grid of the refinement sequence.
  std::vector<double> grid_values;
};

struct SpectrumReport {
  ModelParams params;
  int l = 0;
  RadialFlavor flavor = RadialFlavor::tlb;
  std::optional<double> threshold;
  /// Eigenvalues of the base grid below the threshold (all of them if flat).
  std::size_t count_below_threshold = 0;
  double q_max = 0.0;
  int points = 0;
  int refinements = 0;
  bool extrapolated = false;
  bool truncated = false;
  std::vector<LevelRecord> levels;
  std::vector<std::string> warnings;

  [[nodiscard]] double max_rel_residual() const;
  [[nodiscard]] double min_measured_order() const;
};

struct SolveOptions {
  /// Additional grids, each halving the step (M_s = (M + 1) 2^s - 1).
  int refinements = 2;
  /// Richardson extrapolation of the two finest grids, assuming order 2.
  bool extrapolate = true;
  /// Levels within this fraction of the threshold are not trusted.
  double threshold_margin = 0.05;
};

[[nodiscard]] SpectrumReport solve_bound_states(const RadialProblem& problem, int levels,
                                                const SolveOptions& options = {});

struct IsospectralityReport {
  ModelParams params;
  int l = 0;
  std::vector<double> closed;
  std::vector<double> schrodinger;
  std::vector<double> tlb;
  std::vector<double> tpdm;
  double max_pairwise_rel = 0.0;
  double max_closed_rel = 0.0;
  double tolerance = 1e-8;
  /// For N = 2: the schrodinger and tlb Hamiltonians compared symbolically.
  std::optional<bool> n2_operators_identical;

  [[nodiscard]] bool agree() const noexcept;
};

/// Solves the schrodinger, tlb and tpdm radial operators independently
/// (r-form, three grids, Richardson) and compares them pairwise.
[[nodiscard]] IsospectralityReport isospectrality_check(const ModelParams& params, int l, int levels,
                                                        int cells = 4000, double tolerance = 1e-8);

struct ThresholdStage {
  double q_max = 0.0;
  int points = 0;
  std::size_t count_below = 0;
  /// Largest eigenvalue below the threshold (may be a box state).
  double top = 0.0;
  /// Eigenvalues below the threshold that reappear, to 1e-6 relative, after
  /// one more doubling; box states move when Q_max doubles, bound states do not.
  std::size_t resolved = 0;
  double top_resolved = 0.0;
};

struct ThresholdReport {
  ModelParams params;
  int l = 0;
  double threshold = 0.0;
  std::vector<ThresholdStage> stages;
  /// Counts below the threshold and resolved counts never decrease and grow overall.
  bool counts_increase = false;
  /// Top resolved eigenvalues increase and stay below the threshold.
  bool top_approaches_threshold = false;
  /// Gaps between consecutive resolved eigenvalues of the last stage decrease.
  bool gaps_decrease = false;

  [[nodiscard]] bool passed() const noexcept {
    return counts_increase && top_approaches_threshold && gaps_decrease;
  }
};

/// Doubles Q_max `doublings` times at fixed step (doublings + 1 stages).
[[nodiscard]] ThresholdReport threshold_accumulation(const ModelParams& params, int l,
                                                     double q_max0, int points0, int doublings);

struct WavefunctionSample {
  double r = 0.0;
  double value = 0.0;
};

/// Radial wave function of the requested flavor for radial index n_r,
/// reconstructed from the Q-line eigenvector, normalized to max |value| = 1.
[[nodiscard]] std::vector<WavefunctionSample> radial_wavefunction(const RadialProblem& problem,
                                                                  int n_r);

/// Converts a tlb radial value to another flavor at radius r.
[[nodiscard]] double convert_radial_flavor(const ModelParams& params, double r, double phi_tlb,
                                           RadialFlavor target);

}  // namespace darboux::spectra
