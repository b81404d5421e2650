#include "darboux/quantization.hpp"

#include <stdexcept>

namespace darboux::algebra {

namespace {

OperatorExpr q(int dim, int i) { return OperatorExpr::position(dim, i); }
OperatorExpr p(int dim, int i) { return OperatorExpr::momentum(dim, i); }

Polynomial sym(Symbol s, int power = 1) { return Polynomial::symbol(s, power); }

Polynomial radius_squared(int dim) {
  Polynomial r2;
  for (int i = 0; i < dim; ++i) r2 += sym(position_symbol(i), 2);
  return r2;
}

/// Multiplication by numerator / D^k.
OperatorExpr rational(int dim, const Polynomial& numerator, int d_power) {
  return OperatorExpr::multiplication(dim, Coefficient(dim, numerator, d_power));
}

/// sum_i q_i p_i
OperatorExpr dilation(int dim) {
  OperatorExpr out(dim);
  for (int i = 0; i < dim; ++i) out += q(dim, i) * p(dim, i);
  return out;
}

GaussianRational imaginary(Rational r) { return {Rational(0), r}; }

}  // namespace

std::string_view flavor_name(Flavor f) noexcept {
  switch (f) {
    case Flavor::schrodinger: return "schrodinger";
    case Flavor::lb: return "lb";
    case Flavor::tlb: return "tlb";
    case Flavor::pdm: return "pdm";
    case Flavor::tpdm: return "tpdm";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(std::string_view name) noexcept {
  for (Flavor f : {Flavor::schrodinger, Flavor::lb, Flavor::tlb, Flavor::pdm, Flavor::tpdm})
    if (flavor_name(f) == name) return f;
  return std::nullopt;
}

OperatorExpr oscillator_potential_operator(int dim) {
  return rational(dim, (sym(Symbol::omega, 2) * radius_squared(dim)).scaled(Rational(1, 2)), 1);
}

OperatorExpr lb_momentum_term(int dim) {
  const Polynomial c = (sym(Symbol::hbar) * sym(Symbol::lambda)).scaled(imaginary(Rational(2 - dim, 2)));
  return rational(dim, c, 2) * dilation(dim);
}

OperatorExpr tlb_curvature_term(int dim) {
  const Polynomial inner =
      Polynomial(GaussianRational(2 * dim)) +
      (sym(Symbol::lambda) * radius_squared(dim)).scaled(GaussianRational(3 * (dim - 2)));
  const Polynomial c = (sym(Symbol::hbar, 2) * sym(Symbol::lambda) * inner)
                           .scaled(GaussianRational(Rational(2 - dim, 8)));
  return rational(dim, c, 3);
}

OperatorExpr pdm_momentum_term(int dim) {
  const Polynomial c = (sym(Symbol::hbar) * sym(Symbol::lambda)).scaled(GaussianRational::i());
  return rational(dim, c, 2) * dilation(dim);
}

OperatorExpr tpdm_potential_term(int dim) {
  const Polynomial inner =
      Polynomial(GaussianRational(dim)) +
      (sym(Symbol::lambda) * radius_squared(dim)).scaled(GaussianRational(dim - 3));
  const Polynomial c =
      (sym(Symbol::hbar, 2) * sym(Symbol::lambda) * inner).scaled(GaussianRational(Rational(1, 2)));
  return rational(dim, c, 3);
}

OperatorExpr build_hamiltonian(Flavor flavor, int dim) {
  if (dim < 2 || dim > kMaxDim) throw std::domain_error("build_hamiltonian: unsupported dimension");
  const OperatorExpr d_inv = OperatorExpr::conformal_power(dim, -1);
  const GaussianRational half(Rational(1, 2));
  OperatorExpr kinetic(dim);
  switch (flavor) {
    case Flavor::schrodinger:
      for (int i = 0; i < dim; ++i) kinetic += d_inv * p(dim, i) * p(dim, i);
      break;
    case Flavor::lb:
    case Flavor::tlb:
      // D^(-N/2) p_i D^(N/2) D^-1 p_i
      for (int i = 0; i < dim; ++i)
        kinetic += conjugate_by_d_power(p(dim, i), Rational(-dim, 2)) * d_inv * p(dim, i);
      break;
    case Flavor::pdm:
    case Flavor::tpdm:
      for (int i = 0; i < dim; ++i) kinetic += p(dim, i) * d_inv * p(dim, i);
      break;
  }
  OperatorExpr h = kinetic.scaled(half) + oscillator_potential_operator(dim);
  if (flavor == Flavor::tlb) h += tlb_curvature_term(dim);
  if (flavor == Flavor::tpdm) h += tpdm_potential_term(dim);
  return h;
}

Rational similarity_exponent(Flavor flavor, int dim) {
  switch (flavor) {
    case Flavor::schrodinger: return Rational(0);
    case Flavor::tlb: return Rational(2 - dim, 4);
    case Flavor::tpdm: return Rational(1, 2);
    default: throw std::invalid_argument("similarity_exponent: flavor has no similarity form");
  }
}

Rational self_adjoint_weight(Flavor flavor, int dim) {
  switch (flavor) {
    case Flavor::schrodinger: return Rational(1);
    case Flavor::lb:
    case Flavor::tlb: return Rational(dim, 2);
    case Flavor::pdm:
    case Flavor::tpdm: return Rational(0);
  }
  return Rational(0);
}

std::vector<NamedOperator> build_angular_invariants(int dim) {
  if (dim < 2 || dim > kMaxDim) throw std::domain_error("build_angular_invariants: unsupported dimension");
  auto angular_sq = [dim](int i, int j) {
    const OperatorExpr l = q(dim, i) * p(dim, j) - q(dim, j) * p(dim, i);
    return l * l;
  };
  std::vector<NamedOperator> out;
  for (int m = 2; m <= dim; ++m) {
    OperatorExpr leading(dim);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) leading += angular_sq(i, j);
    out.push_back({"C^(" + std::to_string(m) + ")", leading});
  }
  for (int m = 2; m < dim; ++m) {
    OperatorExpr trailing(dim);
    for (int i = dim - m; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) trailing += angular_sq(i, j);
    out.push_back({"C_(" + std::to_string(m) + ")", trailing});
  }
  return out;
}

std::vector<std::vector<OperatorExpr>> build_fradkin(Flavor flavor, int dim) {
  if (flavor != Flavor::schrodinger && flavor != Flavor::tlb && flavor != Flavor::tpdm)
    throw std::invalid_argument("build_fradkin: flavor has no Fradkin tensor");
  const OperatorExpr h = build_hamiltonian(flavor, dim);
  const OperatorExpr lambda = OperatorExpr::symbol(dim, Symbol::lambda);
  const OperatorExpr omega2 = OperatorExpr::symbol(dim, Symbol::omega, 2);
  const Polynomial hl = sym(Symbol::hbar) * sym(Symbol::lambda);
  const Polynomial h2l = sym(Symbol::hbar, 2) * sym(Symbol::lambda);
  const Polynomial h2l2 = sym(Symbol::hbar, 2) * sym(Symbol::lambda, 2);

  std::vector<std::vector<OperatorExpr>> tensor(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const OperatorExpr qq = q(dim, i) * q(dim, j);
      OperatorExpr entry = p(dim, i) * p(dim, j) - (lambda * qq * h).scaled(2) + omega2 * qq;
      const OperatorExpr sym_qp = q(dim, i) * p(dim, j) + q(dim, j) * p(dim, i);
      const Polynomial qiqj = sym(position_symbol(i)) * sym(position_symbol(j));
      if (flavor == Flavor::tlb) {
        const int n2 = dim - 2;
        entry += rational(dim, hl.scaled(imaginary(Rational(-n2, 2))), 1) * sym_qp;
        // (N-2) hbar^2 lambda^2 q_i q_j (1 - (N-2)/4) / D^2
        entry += rational(dim, (h2l2 * qiqj).scaled(Rational(n2) * Rational(6 - dim, 4)), 2);
        if (i == j) entry += rational(dim, h2l.scaled(Rational(-n2, 2)), 1);
      } else if (flavor == Flavor::tpdm) {
        entry += rational(dim, hl.scaled(GaussianRational::i()), 1) * sym_qp;
        if (i == j) entry += rational(dim, h2l, 1);
        entry += rational(dim, (h2l2 * qiqj).scaled(-3), 2);
      }
      tensor[static_cast<std::size_t>(i)].push_back(std::move(entry));
    }
  }
  return tensor;
}

Sl2Realization build_sl2(int dim) {
  Sl2Realization r{OperatorExpr(dim), OperatorExpr(dim), dilation(dim)};
  for (int i = 0; i < dim; ++i) {
    r.j_plus += p(dim, i) * p(dim, i);
    r.j_minus += q(dim, i) * q(dim, i);
  }
  const Polynomial shift = sym(Symbol::hbar).scaled(imaginary(Rational(-dim, 2)));
  r.j_3 += rational(dim, shift, 0);
  return r;
}

ConformalIdentityResult conformal_potential_identity(int dim) {
  if (dim < 2 || dim > kMaxDim) throw std::domain_error("conformal_potential_identity: unsupported dimension");
  ConformalIdentityResult out;
  const OperatorExpr h = build_hamiltonian(Flavor::schrodinger, dim);
  const OperatorExpr h_lb = build_hamiltonian(Flavor::lb, dim);
  out.derived_potential = conjugate_by_d_power(h, Rational(2 - dim, 4)) - h_lb;

  // Metric D delta_ij = e^(2 phi) delta_ij with phi = ln(D)/2, so
  // R = -D^-1 [2(N-1) lap(phi) + (N-2)(N-1) |grad phi|^2].
  Coefficient laplacian;
  Coefficient grad_sq;
  for (int i = 0; i < dim; ++i) {
    const Coefficient dphi(dim, sym(Symbol::lambda) * sym(position_symbol(i)), 1);
    laplacian += dphi.derivative(i);
    grad_sq += dphi * dphi;
  }
  const Coefficient bracket =
      laplacian.scaled(GaussianRational(2 * (dim - 1))) +
      grad_sq.scaled(GaussianRational((dim - 2) * (dim - 1)));
  const Coefficient curvature =
      (Coefficient::conformal_power(dim, -1) * bracket).scaled(GaussianRational(-1));

  const Polynomial closed_inner =
      Polynomial(GaussianRational(2 * dim)) +
      (sym(Symbol::lambda) * radius_squared(dim)).scaled(GaussianRational(3 * (dim - 2)));
  const Coefficient closed_form(dim, (sym(Symbol::lambda) * closed_inner).scaled(GaussianRational(1 - dim)), 3);
  out.curvature_matches_closed_form = curvature == closed_form;

  const Coefficient factor(dim, sym(Symbol::hbar, 2).scaled(GaussianRational(Rational(dim - 2, 8 * (dim - 1)))));
  out.curvature_side = OperatorExpr::multiplication(dim, factor * curvature);

  out.holds = out.curvature_matches_closed_form && out.derived_potential.is_multiplication() &&
              out.derived_potential == out.curvature_side &&
              out.derived_potential == tlb_curvature_term(dim);
  return out;
}

}  // namespace darboux::algebra
