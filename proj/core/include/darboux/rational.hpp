#pragma once

// Exact scalars for the symbolic engine: reduced fractions over int64 with
// checked arithmetic, and Gaussian rationals a + b i built on top of them.
// Every operation either returns the exact result or throws
// std::overflow_error; nothing is ever rounded.

#include <compare>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace darboux::algebra {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  [[nodiscard]] std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] std::int64_t den() const noexcept { return den_; }
  [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return Rational(add(a.num_, b.num_));
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t bd = b.den_ / g;
    const std::int64_t num = add(mul(a.num_, bd), mul(b.num_, a.den_ / g));
    return Rational(num, mul(a.den_, bd));
  }
  friend Rational operator-(const Rational& a) { return Rational::raw(neg(a.num_), a.den_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) return {};
    if (a.den_ == 1 && b.den_ == 1) return Rational(mul(a.num_, b.num_));
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    return Rational::raw(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  [[nodiscard]] Rational inverse() const {
    if (num_ == 0) throw std::domain_error("Rational: division by zero");
    return num_ < 0 ? Rational::raw(neg(den_), neg(num_)) : Rational::raw(den_, num_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Compare a.num/a.den with b.num/b.den via 128-bit cross products.
    __extension__ using wide = __int128;
    const wide lhs = static_cast<wide>(a.num_) * b.den_;
    const wide rhs = static_cast<wide>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  [[nodiscard]] std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Rational raw(std::int64_t num, std::int64_t den) {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = neg(num_);
      den_ = neg(den_);
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Rational: overflow");
    return out;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Rational: overflow");
    return out;
  }
  static std::int64_t neg(std::int64_t a) {
    if (a == INT64_MIN) throw std::overflow_error("Rational: overflow");
    return -a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// a + b i with rational a, b.
class GaussianRational {
 public:
  constexpr GaussianRational() = default;
  GaussianRational(Rational re) : re_(re) {}  // NOLINT(implicit)
  GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT(implicit)
  GaussianRational(Rational re, Rational im) : re_(re), im_(im) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  [[nodiscard]] const Rational& re() const noexcept { return re_; }
  [[nodiscard]] const Rational& im() const noexcept { return im_; }
  [[nodiscard]] bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_real() const noexcept { return im_.is_zero(); }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_, Rational()};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
  [[nodiscard]] GaussianRational inverse() const {
    const Rational norm = re_ * re_ + im_ * im_;
    if (norm.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    const Rational inv = norm.inverse();
    return {re_ * inv, -im_ * inv};
  }

  [[nodiscard]] std::complex<double> to_complex() const {
    return {re_.to_double(), im_.to_double()};
  }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  /// Text form accepted back by the operator parser: "3/2", "-i", "(1/2+3*i)".
  [[nodiscard]] std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    if (im_ == Rational(1))
      imag = "i";
    else if (im_ == Rational(-1))
      imag = "-i";
    else
      imag = im_.to_string() + "*i";
    if (re_.is_zero()) return imag;
    std::string out = "(" + re_.to_string();
    out += (imag.front() == '-') ? imag : "+" + imag;
    return out + ")";
  }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace darboux::algebra
