#include "darboux/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace darboux::algebra {

namespace {

constexpr std::uint64_t kHighBits = 0x8080808080808080ull;

constexpr const char* symbol_name(Symbol s) {
  switch (s) {
    case Symbol::lambda: return "lambda";
    case Symbol::q1: return "q1";
    case Symbol::q2: return "q2";
    case Symbol::q3: return "q3";
    case Symbol::q4: return "q4";
    case Symbol::q5: return "q5";
    case Symbol::omega: return "omega";
    case Symbol::hbar: return "hbar";
  }
  return "?";
}

constexpr Symbol kAllSymbols[] = {Symbol::lambda, Symbol::q1, Symbol::q2,    Symbol::q3,
                                  Symbol::q4,     Symbol::q5, Symbol::omega, Symbol::hbar};

void merge_sorted(std::vector<PolyTerm>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const PolyTerm& a, const PolyTerm& b) { return a.mono > b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    PolyTerm acc = terms[i];
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].mono == acc.mono; ++j) acc.coeff += terms[j].coeff;
    if (!acc.coeff.is_zero()) terms[out++] = acc;
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Monomial Monomial::of(Symbol s, int power) {
  if (power < 0 || power > 127) throw std::domain_error("Monomial: exponent out of range");
  return Monomial(static_cast<std::uint64_t>(power) << symbol_shift(s));
}

bool Monomial::divisible_by(Monomial other) const noexcept {
  for (Symbol s : kAllSymbols)
    if (exponent(s) < other.exponent(s)) return false;
  return true;
}

Monomial operator*(Monomial a, Monomial b) {
  // Exponents stay below 128, so byte-wise addition never carries.
  if ((a.bits_ | b.bits_) & kHighBits) throw std::overflow_error("Monomial: exponent overflow");
  return Monomial(a.bits_ + b.bits_);
}

std::string Monomial::to_string() const {
  std::string out;
  for (Symbol s : kAllSymbols) {
    const int e = exponent(s);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += symbol_name(s);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Polynomial::Polynomial(GaussianRational constant) {
  if (!constant.is_zero()) terms_.push_back({Monomial(), constant});
}

Polynomial::Polynomial(Monomial mono, GaussianRational coeff) {
  if (!coeff.is_zero()) terms_.push_back({mono, coeff});
}

Polynomial Polynomial::from_terms(std::vector<PolyTerm> terms) {
  merge_sorted(terms);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

const Polynomial& Polynomial::conformal(int dim) { return conformal_power(dim, 1); }

const Polynomial& Polynomial::conformal_power(int dim, int power) {
  if (dim < 1 || dim > kMaxDim) throw std::domain_error("Polynomial: unsupported dimension");
  if (power < 0) throw std::domain_error("Polynomial: negative power of D");
  thread_local std::vector<std::vector<Polynomial>> cache(kMaxDim + 1);
  auto& powers = cache[static_cast<std::size_t>(dim)];
  if (powers.empty()) {
    powers.emplace_back(GaussianRational(1));
    std::vector<PolyTerm> d{{Monomial(), 1}};
    for (int i = 0; i < dim; ++i)
      d.push_back({Monomial::of(Symbol::lambda) * Monomial::of(position_symbol(i), 2), 1});
    powers.push_back(from_terms(std::move(d)));
  }
  while (static_cast<int>(powers.size()) <= power) {
    Polynomial next = powers.back() * powers[1];
    powers.push_back(std::move(next));
  }
  return powers[static_cast<std::size_t>(power)];
}

GaussianRational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return {};
}

int Polynomial::degree_in(Symbol s) const noexcept {
  int deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, t.mono.exponent(s));
  return deg;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Polynomial out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mono > ib->mono)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->mono > ia->mono) {
      out.terms_.push_back(*ib++);
    } else {
      GaussianRational c = ia->coeff + ib->coeff;
      if (!c.is_zero()) out.terms_.push_back({ia->mono, c});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& a) { return a.scaled(GaussianRational(-1)); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  PolynomialAccumulator acc;
  acc.add_product(a, b, 1);
  return std::move(acc).finish();
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::times(Monomial m, const GaussianRational& c) const {
  if (c.is_zero()) return {};
  Polynomial out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
  return out;
}

Polynomial Polynomial::derivative(Symbol s) const {
  const Monomial unit = Monomial::of(s);
  std::vector<PolyTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const int e = t.mono.exponent(s);
    if (e == 0) continue;
    out.push_back({t.mono.divided_by(unit), t.coeff * GaussianRational(e)});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::conj() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = t.coeff.conj();
  return out;
}

Polynomial Polynomial::at_zero(Symbol s) const {
  Polynomial out;
  for (const auto& t : terms_)
    if (t.mono.exponent(s) == 0) out.terms_.push_back(t);
  return out;
}

std::optional<Polynomial> Polynomial::divide_by_conformal(int dim) const {
  if (is_zero()) return Polynomial();
  const Polynomial& d = conformal(dim);
  const Monomial lead = d.terms_.front().mono;  // lambda*q1^2

  // Division by a single polynomial: D generates a principal ideal, so the
  // remainder is zero exactly when D divides. Bail out on the first leading
  // term that the leading monomial of D cannot absorb.
  std::map<Monomial, GaussianRational, std::greater<>> rest;
  for (const auto& t : terms_) rest.emplace(t.mono, t.coeff);
  std::vector<PolyTerm> quotient;
  while (!rest.empty()) {
    const auto [mono, coeff] = *rest.begin();
    if (!mono.divisible_by(lead)) return std::nullopt;
    const Monomial q = mono.divided_by(lead);
    quotient.push_back({q, coeff});
    for (const auto& dt : d.terms_) {
      const Monomial m = dt.mono * q;
      auto [it, inserted] = rest.try_emplace(m, -coeff);
      if (!inserted) {
        it->second -= coeff;
        if (it->second.is_zero()) rest.erase(it);
      }
    }
  }
  return from_terms(std::move(quotient));
}

std::complex<double> Polynomial::evaluate(const Values& values) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) {
    double m = std::pow(values.lambda, t.mono.exponent(Symbol::lambda)) *
               std::pow(values.omega, t.mono.exponent(Symbol::omega)) *
               std::pow(values.hbar, t.mono.exponent(Symbol::hbar));
    for (int i = 0; i < kMaxDim; ++i) {
      const int e = t.mono.exponent(position_symbol(i));
      if (e == 0) continue;
      if (static_cast<std::size_t>(i) >= values.q.size())
        throw std::out_of_range("Polynomial::evaluate: missing coordinate value");
      m *= std::pow(values.q[static_cast<std::size_t>(i)], e);
    }
    sum += t.coeff.to_complex() * m;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += t.coeff.to_string();
    } else if (t.coeff == GaussianRational(1)) {
      out += t.mono.to_string();
    } else if (t.coeff == GaussianRational(-1)) {
      out += "-" + t.mono.to_string();
    } else {
      out += t.coeff.to_string() + "*" + t.mono.to_string();
    }
  }
  return out;
}

void PolynomialAccumulator::add(const Polynomial& p, const GaussianRational& scale) {
  if (scale.is_zero()) return;
  for (const auto& t : p.terms()) terms_.push_back({t.mono, t.coeff * scale});
}

void PolynomialAccumulator::add_product(const Polynomial& a, const Polynomial& b,
                                        const GaussianRational& scale) {
  if (scale.is_zero()) return;
  terms_.reserve(terms_.size() + a.size() * b.size());
  for (const auto& ta : a.terms()) {
    const GaussianRational ca = ta.coeff * scale;
    for (const auto& tb : b.terms()) terms_.push_back({ta.mono * tb.mono, ca * tb.coeff});
  }
}

Polynomial PolynomialAccumulator::finish() && { return Polynomial::from_terms(std::move(terms_)); }

}  // namespace darboux::algebra
