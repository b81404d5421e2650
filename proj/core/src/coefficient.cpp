#include "darboux/coefficient.hpp"

#include <cmath>
#include <stdexcept>

namespace darboux::algebra {

namespace {

void check_dims(const Coefficient& a, const Coefficient& b) {
  if (a.dim() != b.dim() && !a.is_zero() && !b.is_zero())
    throw std::invalid_argument("Coefficient: mixed dimensions");
}

}  // namespace

Coefficient::Coefficient(int dim, Polynomial numerator, int d_power)
    : dim_(dim), num_(std::move(numerator)), d_power_(d_power) {
  if (dim < 1 || dim > kMaxDim) throw std::domain_error("Coefficient: unsupported dimension");
  if (d_power < 0) {
    num_ = num_ * Polynomial::conformal_power(dim, -d_power);
    d_power_ = 0;
  }
  canonicalize();
}

Coefficient Coefficient::conformal_power(int dim, int power) {
  if (power >= 0) return {dim, Polynomial::conformal_power(dim, power), 0};
  return {dim, Polynomial(GaussianRational(1)), -power};
}

void Coefficient::canonicalize() {
  if (num_.is_zero()) {
    d_power_ = 0;
    return;
  }
  while (d_power_ > 0) {
    auto q = num_.divide_by_conformal(dim_);
    if (!q) break;
    num_ = std::move(*q);
    --d_power_;
  }
}

Polynomial Coefficient::numerator_over(int target) const {
  if (target == d_power_) return num_;
  return num_ * Polynomial::conformal_power(dim_, target - d_power_);
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  check_dims(a, b);
  const int k = std::max(a.d_power_, b.d_power_);
  return {a.dim_, a.numerator_over(k) + b.numerator_over(k), k};
}

Coefficient operator-(const Coefficient& a) { return a.scaled(GaussianRational(-1)); }

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.is_zero() || b.is_zero()) return {};
  check_dims(a, b);
  return {a.dim_, a.num_ * b.num_, a.d_power_ + b.d_power_};
}

Coefficient Coefficient::scaled(const GaussianRational& c) const {
  if (c.is_zero() || is_zero()) return {};
  Coefficient out = *this;
  out.num_ = num_.scaled(c);
  return out;
}

Coefficient Coefficient::derivative(int index) const {
  if (index < 0 || index >= dim_) throw std::out_of_range("Coefficient: derivative index");
  if (is_zero()) return {};
  const Symbol q = position_symbol(index);
  Polynomial dp = num_.derivative(q);
  if (d_power_ == 0) return {dim_, std::move(dp), 0};
  const Polynomial& d = Polynomial::conformal(dim_);
  const Monomial lq = Monomial::of(Symbol::lambda) * Monomial::of(q);
  Polynomial numerator = d * dp + num_.times(lq, GaussianRational(-2 * d_power_));
  return {dim_, std::move(numerator), d_power_ + 1};
}

Coefficient Coefficient::conj() const {
  Coefficient out = *this;
  out.num_ = num_.conj();
  return out;
}

Coefficient Coefficient::at_lambda_zero() const {
  if (is_zero()) return {};
  return {dim_, num_.at_zero(Symbol::lambda), 0};
}

std::optional<Coefficient> Coefficient::scalar_d_power_inverse() const {
  if (is_zero()) return std::nullopt;
  Polynomial rest = num_;
  int m = 0;
  while (!rest.is_constant()) {
    auto q = rest.divide_by_conformal(dim_);
    if (!q) return std::nullopt;
    rest = std::move(*q);
    ++m;
  }
  // value = c D^(m - d_power); inverse = (1/c) D^(d_power - m)
  const GaussianRational c = rest.constant_term();
  return Coefficient(dim_, Polynomial(c.inverse()), m - d_power_);
}

std::complex<double> Coefficient::evaluate(const Polynomial::Values& values) const {
  if (is_zero()) return 0.0;
  std::complex<double> v = num_.evaluate(values);
  if (d_power_ == 0) return v;
  double q2 = 0.0;
  for (int i = 0; i < dim_; ++i) q2 += values.q[static_cast<std::size_t>(i)] * values.q[static_cast<std::size_t>(i)];
  return v / std::pow(1.0 + values.lambda * q2, d_power_);
}

std::string Coefficient::to_string() const {
  std::string out = "(" + num_.to_string() + ")";
  if (d_power_ == 1) out += "/D";
  if (d_power_ > 1) out += "/D^" + std::to_string(d_power_);
  return out;
}

void CoefficientAccumulator::add(const Coefficient& c, const GaussianRational& scale) {
  if (c.is_zero() || scale.is_zero()) return;
  const auto k = static_cast<std::size_t>(c.d_power());
  if (by_power_.size() <= k) by_power_.resize(k + 1);
  by_power_[k].add(c.numerator(), scale);
}

void CoefficientAccumulator::add_product(const Coefficient& a, const Coefficient& b,
                                         const GaussianRational& scale) {
  if (a.is_zero() || b.is_zero() || scale.is_zero()) return;
  const auto k = static_cast<std::size_t>(a.d_power() + b.d_power());
  if (by_power_.size() <= k) by_power_.resize(k + 1);
  by_power_[k].add_product(a.numerator(), b.numerator(), scale);
}

Coefficient CoefficientAccumulator::finish() && {
  int top = -1;
  std::vector<Polynomial> parts(by_power_.size());
  for (std::size_t k = 0; k < by_power_.size(); ++k) {
    if (by_power_[k].empty()) continue;
    parts[k] = std::move(by_power_[k]).finish();
    if (!parts[k].is_zero()) top = static_cast<int>(k);
  }
  if (top < 0) return {};
  Polynomial total;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].is_zero()) continue;
    total += parts[k] * Polynomial::conformal_power(dim_, top - static_cast<int>(k));
  }
  return {dim_, std::move(total), top};
}

}  // namespace darboux::algebra
