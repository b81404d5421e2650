#pragma once

// Sparse multivariate polynomials in {lambda, q1..q5, omega, hbar} with
// Gaussian-rational coefficients.
//
// A monomial is packed into one 64-bit word, one byte of exponent per
// variable, with lambda in the most significant byte followed by q1..q5,
// omega and hbar. Comparing the packed words therefore realises the
// lexicographic order lambda > q1 > ... > q5 > omega > hbar, in which the
// leading term of D = 1 + lambda (q1^2 + ... + qN^2) is lambda q1^2.

#include "darboux/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace darboux::algebra {

inline constexpr int kMaxDim = 5;

enum class Symbol : std::uint8_t { lambda, q1, q2, q3, q4, q5, omega, hbar };

[[nodiscard]] constexpr int symbol_shift(Symbol s) noexcept {
  return 8 * (7 - static_cast<int>(s));
}

[[nodiscard]] constexpr Symbol position_symbol(int index) noexcept {
  return static_cast<Symbol>(static_cast<int>(Symbol::q1) + index);
}

class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}

  static Monomial of(Symbol s, int power = 1);

  [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr bool is_one() const noexcept { return bits_ == 0; }
  [[nodiscard]] int exponent(Symbol s) const noexcept {
    return static_cast<int>((bits_ >> symbol_shift(s)) & 0xFFu);
  }
  [[nodiscard]] bool divisible_by(Monomial other) const noexcept;
  /// Precondition: divisible_by(other).
  [[nodiscard]] Monomial divided_by(Monomial other) const noexcept {
    return Monomial(bits_ - other.bits_);
  }
  [[nodiscard]] Monomial without(Symbol s) const noexcept {
    return Monomial(bits_ & ~(std::uint64_t{0xFF} << symbol_shift(s)));
  }

  friend Monomial operator*(Monomial a, Monomial b);
  friend constexpr auto operator<=>(Monomial, Monomial) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

struct PolyTerm {
  Monomial mono;
  GaussianRational coeff;
  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

/// Terms are kept sorted by decreasing monomial with no zero coefficients, so
/// structural equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(GaussianRational constant);  // NOLINT(implicit)
  Polynomial(Monomial mono, GaussianRational coeff);

  static Polynomial symbol(Symbol s, int power = 1) { return {Monomial::of(s, power), 1}; }
  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static Polynomial from_terms(std::vector<PolyTerm> terms);

  /// D = 1 + lambda (q1^2 + ... + q_dim^2).
  static const Polynomial& conformal(int dim);
  /// D^power, cached per thread.
  static const Polynomial& conformal_power(int dim, int power);

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
  }
  [[nodiscard]] GaussianRational constant_term() const;
  [[nodiscard]] std::span<const PolyTerm> terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] int degree_in(Symbol s) const noexcept;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

  [[nodiscard]] Polynomial scaled(const GaussianRational& c) const;
  [[nodiscard]] Polynomial times(Monomial m, const GaussianRational& c) const;
  [[nodiscard]] Polynomial derivative(Symbol s) const;
  [[nodiscard]] Polynomial conj() const;
  /// Sets one symbol to zero.
  [[nodiscard]] Polynomial at_zero(Symbol s) const;

  /// Exact quotient by D = conformal(dim), or nullopt when D does not divide.
  [[nodiscard]] std::optional<Polynomial> divide_by_conformal(int dim) const;

  struct Values {
    double lambda = 0.0;
    double omega = 0.0;
    double hbar = 0.0;
    std::span<const double> q;
  };
  [[nodiscard]] std::complex<double> evaluate(const Values& values) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Parser-compatible text, e.g. "1 + lambda*q1^2 + (1/2+i)*hbar".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<PolyTerm> terms_;
};

/// Accumulates scaled products of terms without intermediate sorting.
class PolynomialAccumulator {
 public:
  void add(const Polynomial& p, const GaussianRational& scale = 1);
  void add_product(const Polynomial& a, const Polynomial& b, const GaussianRational& scale);
  [[nodiscard]] Polynomial finish() &&;
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

 private:
  std::vector<PolyTerm> terms_;
};

}  // namespace darboux::algebra
