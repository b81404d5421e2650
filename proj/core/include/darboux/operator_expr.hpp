#pragma once

// Normal-ordered differential operators on R^N:
//
//   X = sum_alpha c_alpha(q) p^alpha,   [q_i, p_j] = i hbar delta_ij,
//
// with every coefficient c_alpha in the ring of Coefficient values (position
// dependence on the left, momenta on the right). Canonical form makes
// operator equality a structural comparison; in particular two operators
// commute iff commutator() returns the empty term map.

#include "darboux/coefficient.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace darboux::algebra {

/// Momentum multi-index alpha in N^N (unused slots stay zero).
struct MomentumIndex {
  std::array<std::uint8_t, kMaxDim> powers{};

  static MomentumIndex unit(int index, int power = 1);
  [[nodiscard]] int order() const noexcept;
  [[nodiscard]] int operator[](int i) const noexcept { return powers[static_cast<std::size_t>(i)]; }
  friend MomentumIndex operator+(const MomentumIndex& a, const MomentumIndex& b);
  friend auto operator<=>(const MomentumIndex&, const MomentumIndex&) = default;
};

class OperatorExpr {
 public:
  using TermMap = std::map<MomentumIndex, Coefficient>;

  OperatorExpr() = default;
  explicit OperatorExpr(int dim);
  OperatorExpr(int dim, TermMap terms);

  static OperatorExpr zero(int dim) { return OperatorExpr(dim); }
  static OperatorExpr identity(int dim) { return scalar(dim, 1); }
  static OperatorExpr scalar(int dim, const GaussianRational& c);
  static OperatorExpr multiplication(const Coefficient& c);
  static OperatorExpr multiplication(int dim, const Coefficient& c);
  static OperatorExpr symbol(int dim, Symbol s, int power = 1);
  /// Position operator q_(index+1).
  static OperatorExpr position(int dim, int index);
  /// Momentum operator p_(index+1) = -i hbar d/dq.
  static OperatorExpr momentum(int dim, int index);
  static OperatorExpr conformal_power(int dim, int power);

  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  /// Highest total momentum order |alpha| present (0 for the zero operator).
  [[nodiscard]] int momentum_degree() const noexcept;
  /// Largest D-power over the coefficients.
  [[nodiscard]] int max_d_power() const noexcept;
  /// True when the operator is a pure multiplication (only alpha = 0).
  [[nodiscard]] bool is_multiplication() const noexcept;
  [[nodiscard]] Coefficient coefficient(const MomentumIndex& alpha) const;

  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator-(const OperatorExpr& a);
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  OperatorExpr& operator+=(const OperatorExpr& o) { return *this = *this + o; }
  OperatorExpr& operator-=(const OperatorExpr& o) { return *this = *this - o; }

  [[nodiscard]] OperatorExpr scaled(const GaussianRational& c) const;
  /// Multiplies every coefficient on the left by c (c X).
  [[nodiscard]] OperatorExpr left_multiplied(const Coefficient& c) const;
  [[nodiscard]] OperatorExpr at_lambda_zero() const;

  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) {
    return a.terms_ == b.terms_;
  }

  /// Text accepted back by parse(), e.g. "(1/2)/D*p1^2 + (omega^2*q1^2)/D".
  [[nodiscard]] std::string to_string() const;

 private:
  void check_dim(const OperatorExpr& other) const;

  int dim_ = 0;
  TermMap terms_;
};

/// Normal-ordered product a * b via p^alpha f = sum_gamma C(alpha,gamma)
/// (-i hbar)^|gamma| (d^gamma f) p^(alpha-gamma).
[[nodiscard]] OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b);

[[nodiscard]] OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);

/// Integer power, exponent >= 0.
[[nodiscard]] OperatorExpr power(const OperatorExpr& x, int exponent);

/// D^a X D^-a for rational a, through p_i -> p_i + 2 i hbar a lambda q_i / D.
[[nodiscard]] OperatorExpr conjugate_by_d_power(const OperatorExpr& x, const Rational& exponent);

/// Formal adjoint with respect to the flat L^2 product: reverses operator
/// order and conjugates i (q, p, lambda, omega, hbar are self-adjoint).
[[nodiscard]] OperatorExpr formal_adjoint(const OperatorExpr& x);

/// Adjoint with respect to the weight D^w: W^-1 X^T W.
[[nodiscard]] OperatorExpr weighted_adjoint(const OperatorExpr& x, const Rational& weight_exponent);

}  // namespace darboux::algebra
