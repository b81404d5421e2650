#pragma once

// Exact verification of the quantum symmetry statements: every required
// commutator or identity is reduced to canonical form and compared with zero.

#include "darboux/quantization.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace darboux::algebra {

enum class TheoremPart {
  commuting,    // [H, C^(m)], [H, C_(m)], [H, I_ij]
  involution,   // [I_ii, I_jj], [C^(m), C^(m')], [C_(m), C_(m')]
  sl2,          // sl(2) relations of the realization, H as a function of it
  trace,        // H = 1/2 sum_i I_ii
  conjugation,  // H, C, I of the flavor as D-power conjugates of the direct ones
  identities,   // decompositions into correction terms, conformal identity
  adjoint,      // formal self-adjointness with the flavor's weight
};

[[nodiscard]] std::string_view part_name(TheoremPart p) noexcept;
[[nodiscard]] std::optional<TheoremPart> parse_part(std::string_view name) noexcept;
[[nodiscard]] std::set<TheoremPart> all_parts();

/// Commutators and products must stay within these bounds.
inline constexpr int kMaxMomentumDegree = 4;
inline constexpr int kMaxDPower = 6;

struct CheckResult {
  std::string part;
  /// "commutator" ([lhs, rhs] = 0) or "equality" (lhs - rhs = 0).
  std::string relation;
  std::string lhs;
  std::string rhs;
  bool commutator_zero = false;
  std::size_t residual_terms = 0;
  /// Printed residual operator, empty when zero.
  std::string residual;
  /// Momentum degree and D-power of the largest intermediate product.
  int product_degree = 0;
  int product_d_power = 0;
  bool within_degree_bound = true;

  [[nodiscard]] bool passed() const noexcept { return commutator_zero && within_degree_bound; }
};

struct VerifyOptions {
  Flavor flavor = Flavor::schrodinger;
  int dim = 3;
  std::set<TheoremPart> parts = all_parts();
  /// Name of a Fradkin entry such as "I11" whose omega^2 q_i q_j term is
  /// removed before checking.
  std::optional<std::string> corrupt;
  unsigned threads = 1;
};

struct VerificationReport {
  Flavor flavor = Flavor::schrodinger;
  int dim = 0;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  [[nodiscard]] bool all_passed() const noexcept;
  [[nodiscard]] std::size_t failures() const noexcept;
};

/// Runs the requested checks. Flavors lb and pdm have no Fradkin tensor;
/// for them the Fradkin-dependent checks are skipped.
[[nodiscard]] VerificationReport verify_theorem(const VerifyOptions& options);

}  // namespace darboux::algebra
