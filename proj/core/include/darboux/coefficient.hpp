#pragma once

#include "darboux/polynomial.hpp"

#include <complex>
#include <string>

namespace darboux::algebra {

/// Element numerator / D^d_power of the coefficient ring, with
/// D = 1 + lambda (q1^2 + ... + qN^2).
///
/// Canonical form: D does not divide the numerator whenever d_power > 0, and
/// zero is (0, 0). Every public operation returns canonical values, so two
/// coefficients are equal iff their fields are equal.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(int dim, Polynomial numerator, int d_power = 0);
  Coefficient(int dim, GaussianRational constant) : Coefficient(dim, Polynomial(constant)) {}

  /// D^power for any integer power; negative powers land in the denominator.
  static Coefficient conformal_power(int dim, int power);

  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] const Polynomial& numerator() const noexcept { return num_; }
  [[nodiscard]] int d_power() const noexcept { return d_power_; }
  [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }

  [[nodiscard]] Coefficient scaled(const GaussianRational& c) const;
  /// d/dq_index (0-based), staying inside the ring:
  /// d(P / D^k) = (D dP - 2 k lambda q P) / D^(k+1).
  [[nodiscard]] Coefficient derivative(int index) const;
  [[nodiscard]] Coefficient conj() const;
  /// Substitutes lambda = 0 (so D = 1).
  [[nodiscard]] Coefficient at_lambda_zero() const;

  /// If this equals c * D^m for a nonzero scalar c and integer m, returns its
  /// multiplicative inverse.
  [[nodiscard]] std::optional<Coefficient> scalar_d_power_inverse() const;

  [[nodiscard]] std::complex<double> evaluate(const Polynomial::Values& values) const;

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.d_power_ == b.d_power_ && a.num_ == b.num_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  /// Raw (non-canonical) numerator of the same value over D^target.
  [[nodiscard]] Polynomial numerator_over(int target) const;
  void canonicalize();

  int dim_ = 0;
  Polynomial num_;
  int d_power_ = 0;

  friend class CoefficientAccumulator;
};

/// Sums of coefficients with mixed D-powers. Numerators are grouped by
/// D-power and only lifted to the common power once, in finish().
class CoefficientAccumulator {
 public:
  explicit CoefficientAccumulator(int dim) : dim_(dim) {}
  void add(const Coefficient& c, const GaussianRational& scale = 1);
  void add_product(const Coefficient& a, const Coefficient& b, const GaussianRational& scale);
  [[nodiscard]] Coefficient finish() &&;

 private:
  int dim_;
  std::vector<PolynomialAccumulator> by_power_;
};

}  // namespace darboux::algebra
