#include "darboux/operator_expr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace darboux::algebra {

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// (-i)^k
GaussianRational minus_i_power(int k) {
  switch (k % 4) {
    case 0: return GaussianRational(1);
    case 1: return {Rational(0), Rational(-1)};
    case 2: return GaussianRational(-1);
    default: return {Rational(0), Rational(1)};
  }
}

// Calls f(gamma) for every multi-index gamma <= alpha (componentwise).
void for_each_sub_index(const MomentumIndex& alpha, int dim,
                        const std::function<void(const MomentumIndex&)>& f) {
  MomentumIndex gamma;
  std::function<void(int)> rec = [&](int i) {
    if (i == dim) {
      f(gamma);
      return;
    }
    for (int g = 0; g <= alpha[i]; ++g) {
      gamma.powers[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(g);
      rec(i + 1);
    }
    gamma.powers[static_cast<std::size_t>(i)] = 0;
  };
  rec(0);
}

MomentumIndex difference(const MomentumIndex& a, const MomentumIndex& b) {
  MomentumIndex out;
  for (std::size_t i = 0; i < out.powers.size(); ++i)
    out.powers[i] = static_cast<std::uint8_t>(a.powers[i] - b.powers[i]);
  return out;
}

// hbar^|gamma| d^gamma c, memoised over gamma for one fixed coefficient.
class DerivativeTable {
 public:
  DerivativeTable(int dim, const Coefficient& base) : dim_(dim) { table_.emplace(MomentumIndex{}, base); }

  const Coefficient& get(const MomentumIndex& gamma) {
    if (auto it = table_.find(gamma); it != table_.end()) return it->second;
    int i = 0;
    while (gamma[i] == 0) ++i;
    MomentumIndex lower = gamma;
    --lower.powers[static_cast<std::size_t>(i)];
    const Coefficient& prev = get(lower);
    Coefficient next = prev.is_zero() ? Coefficient()
                                      : prev.derivative(i) *
                                            Coefficient(dim_, Polynomial::symbol(Symbol::hbar));
    return table_.emplace(gamma, std::move(next)).first->second;
  }

 private:
  int dim_;
  std::map<MomentumIndex, Coefficient> table_;
};

}  // namespace

MomentumIndex MomentumIndex::unit(int index, int power) {
  if (index < 0 || index >= kMaxDim) throw std::out_of_range("MomentumIndex: index");
  MomentumIndex m;
  m.powers[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(power);
  return m;
}

int MomentumIndex::order() const noexcept {
  int s = 0;
  for (auto p : powers) s += p;
  return s;
}

MomentumIndex operator+(const MomentumIndex& a, const MomentumIndex& b) {
  MomentumIndex out;
  for (std::size_t i = 0; i < out.powers.size(); ++i)
    out.powers[i] = static_cast<std::uint8_t>(a.powers[i] + b.powers[i]);
  return out;
}

OperatorExpr::OperatorExpr(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) throw std::domain_error("OperatorExpr: unsupported dimension");
}

OperatorExpr::OperatorExpr(int dim, TermMap terms) : OperatorExpr(dim) {
  for (auto& [alpha, c] : terms)
    if (!c.is_zero()) terms_.emplace(alpha, std::move(c));
}

OperatorExpr OperatorExpr::scalar(int dim, const GaussianRational& c) {
  return multiplication(dim, Coefficient(dim, c));
}

OperatorExpr OperatorExpr::multiplication(const Coefficient& c) {
  return multiplication(c.dim() == 0 ? 1 : c.dim(), c);
}

OperatorExpr OperatorExpr::multiplication(int dim, const Coefficient& c) {
  OperatorExpr out(dim);
  if (!c.is_zero()) out.terms_.emplace(MomentumIndex{}, c);
  return out;
}

OperatorExpr OperatorExpr::symbol(int dim, Symbol s, int power) {
  return multiplication(dim, Coefficient(dim, Polynomial::symbol(s, power)));
}

OperatorExpr OperatorExpr::position(int dim, int index) {
  if (index < 0 || index >= dim) throw std::out_of_range("OperatorExpr: position index");
  return symbol(dim, position_symbol(index));
}

OperatorExpr OperatorExpr::momentum(int dim, int index) {
  if (index < 0 || index >= dim) throw std::out_of_range("OperatorExpr: momentum index");
  OperatorExpr out(dim);
  out.terms_.emplace(MomentumIndex::unit(index), Coefficient(dim, GaussianRational(1)));
  return out;
}

OperatorExpr OperatorExpr::conformal_power(int dim, int power) {
  return multiplication(dim, Coefficient::conformal_power(dim, power));
}

int OperatorExpr::momentum_degree() const noexcept {
  int deg = 0;
  for (const auto& [alpha, c] : terms_) deg = std::max(deg, alpha.order());
  return deg;
}

int OperatorExpr::max_d_power() const noexcept {
  int k = 0;
  for (const auto& [alpha, c] : terms_) k = std::max(k, c.d_power());
  return k;
}

bool OperatorExpr::is_multiplication() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.order() == 0);
}

Coefficient OperatorExpr::coefficient(const MomentumIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Coefficient() : it->second;
}

void OperatorExpr::check_dim(const OperatorExpr& other) const {
  if (dim_ != other.dim_ && !is_zero() && !other.is_zero()) throw std::invalid_argument("OperatorExpr: dimension mismatch");
}

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
  a.check_dim(b);
  if (a.is_zero() && b.dim() != 0) return b;
  OperatorExpr out = a;
  for (const auto& [alpha, c] : b.terms_) {
    auto it = out.terms_.find(alpha);
    if (it == out.terms_.end()) {
      out.terms_.emplace(alpha, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) out.terms_.erase(it);
  }
  return out;
}

OperatorExpr operator-(const OperatorExpr& a) { return a.scaled(GaussianRational(-1)); }

OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) { return a + (-b); }

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) { return multiply(a, b); }

OperatorExpr OperatorExpr::scaled(const GaussianRational& c) const {
  OperatorExpr out(dim_);
  if (c.is_zero()) return out;
  for (const auto& [alpha, coeff] : terms_) out.terms_.emplace(alpha, coeff.scaled(c));
  return out;
}

OperatorExpr OperatorExpr::left_multiplied(const Coefficient& c) const {
  OperatorExpr out(dim_);
  for (const auto& [alpha, coeff] : terms_) {
    Coefficient prod = c * coeff;
    if (!prod.is_zero()) out.terms_.emplace(alpha, std::move(prod));
  }
  return out;
}

OperatorExpr OperatorExpr::at_lambda_zero() const {
  OperatorExpr out(dim_);
  for (const auto& [alpha, coeff] : terms_) {
    Coefficient c = coeff.at_lambda_zero();
    if (!c.is_zero()) out.terms_.emplace(alpha, std::move(c));
  }
  return out;
}

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [alpha, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    for (int i = 0; i < dim_; ++i) {
      if (alpha[i] == 0) continue;
      out += "*p" + std::to_string(i + 1);
      if (alpha[i] > 1) out += "^" + std::to_string(alpha[i]);
    }
  }
  return out;
}

OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b) {
  if (a.is_zero() || b.is_zero()) return OperatorExpr(std::max(a.dim(), b.dim()));
  if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
  const int dim = a.dim();
  std::map<MomentumIndex, CoefficientAccumulator> acc;
  auto slot = [&](const MomentumIndex& idx) -> CoefficientAccumulator& {
    return acc.try_emplace(idx, dim).first->second;
  };

  for (const auto& [beta, d] : b.terms()) {
    DerivativeTable derivatives(dim, d);
    for (const auto& [alpha, c] : a.terms()) {
      for_each_sub_index(alpha, dim, [&](const MomentumIndex& gamma) {
        std::int64_t weight = 1;
        for (int i = 0; i < dim; ++i) weight *= binomial(alpha[i], gamma[i]);
        const GaussianRational scale = minus_i_power(gamma.order()) * GaussianRational(weight);
        const Coefficient& dg = derivatives.get(gamma);
        if (dg.is_zero()) return;
        slot(difference(alpha, gamma) + beta).add_product(c, dg, scale);
      });
    }
  }

  OperatorExpr::TermMap terms;
  for (auto& [idx, sum] : acc) {
    Coefficient c = std::move(sum).finish();
    if (!c.is_zero()) terms.emplace(idx, std::move(c));
  }
  return OperatorExpr(dim, std::move(terms));
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
  return multiply(a, b) - multiply(b, a);
}

OperatorExpr power(const OperatorExpr& x, int exponent) {
  if (exponent < 0) throw std::domain_error("power: negative exponent");
  OperatorExpr result = OperatorExpr::identity(x.dim());
  for (int i = 0; i < exponent; ++i) result = multiply(result, x);
  return result;
}

OperatorExpr conjugate_by_d_power(const OperatorExpr& x, const Rational& exponent) {
  if (exponent.is_zero()) return x;
  const int dim = x.dim();
  // 2 i hbar a lambda q_i / D
  const GaussianRational shift_scale{Rational(0), exponent * Rational(2)};
  std::vector<std::vector<OperatorExpr>> powers(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    Polynomial num = Polynomial::symbol(Symbol::hbar) * Polynomial::symbol(Symbol::lambda) *
                     Polynomial::symbol(position_symbol(i));
    OperatorExpr shifted = OperatorExpr::momentum(dim, i) +
                           OperatorExpr::multiplication(dim, Coefficient(dim, num.scaled(shift_scale), 1));
    powers[static_cast<std::size_t>(i)] = {OperatorExpr::identity(dim), shifted};
  }
  auto shifted_power = [&](int i, int k) -> const OperatorExpr& {
    auto& cache = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(cache.size()) <= k) cache.push_back(multiply(cache.back(), cache[1]));
    return cache[static_cast<std::size_t>(k)];
  };

  OperatorExpr result(dim);
  for (const auto& [alpha, c] : x.terms()) {
    OperatorExpr term = OperatorExpr::multiplication(dim, c);
    for (int i = 0; i < dim; ++i)
      if (alpha[i] > 0) term = multiply(term, shifted_power(i, alpha[i]));
    result += term;
  }
  return result;
}

OperatorExpr formal_adjoint(const OperatorExpr& x) {
  const int dim = x.dim();
  OperatorExpr result(dim);
  for (const auto& [alpha, c] : x.terms()) {
    OperatorExpr momenta(dim, {{alpha, Coefficient(dim, GaussianRational(1))}});
    result += multiply(momenta, OperatorExpr::multiplication(dim, c.conj()));
  }
  return result;
}

OperatorExpr weighted_adjoint(const OperatorExpr& x, const Rational& weight_exponent) {
  return conjugate_by_d_power(formal_adjoint(x), -weight_exponent);
}

}  // namespace darboux::algebra
