#include "darboux/operator_expr.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace darboux::algebra;

namespace {

const GaussianRational kI = GaussianRational::i();

OperatorExpr q(int dim, int i) { return OperatorExpr::position(dim, i); }
OperatorExpr p(int dim, int i) { return OperatorExpr::momentum(dim, i); }
OperatorExpr hbar(int dim) { return OperatorExpr::symbol(dim, Symbol::hbar); }

// Random operator with momentum order <= 2 and coefficients P / D^k.
OperatorExpr random_operator(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> axis(0, dim - 1);
  OperatorExpr out(dim);
  for (int t = 0; t < 3; ++t) {
    Polynomial num(GaussianRational(Rational(coef(rng)), Rational(coef(rng), 2)));
    num = num * Polynomial::symbol(position_symbol(axis(rng)), coin(rng));
    num += Polynomial(Monomial::of(Symbol::lambda, coin(rng)) * Monomial::of(Symbol::omega, coin(rng)),
                      GaussianRational(coef(rng)));
    OperatorExpr term = OperatorExpr::multiplication(dim, Coefficient(dim, num, coin(rng)));
    for (int k = coin(rng); k > 0; --k) term = term * p(dim, axis(rng));
    out += term;
  }
  return out;
}

}  // namespace

TEST_SUITE("operator-algebra") {
  TEST_CASE("canonical commutation relations") {
    for (int dim = 1; dim <= 4; ++dim)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          const OperatorExpr expected = i == j ? hbar(dim).scaled(kI) : OperatorExpr(dim);
          CHECK(commutator(q(dim, i), p(dim, j)) == expected);
          CHECK(commutator(p(dim, i), p(dim, j)).is_zero());
          CHECK(commutator(q(dim, i), q(dim, j)).is_zero());
        }
  }

  TEST_CASE("[p_i, f] = -i hbar df/dq_i for coefficient functions") {
    const int dim = 3;
    const Coefficient f(dim, Polynomial::symbol(Symbol::q2, 3) * Polynomial::symbol(Symbol::omega), 2);
    const OperatorExpr lhs = commutator(p(dim, 1), OperatorExpr::multiplication(dim, f));
    const OperatorExpr rhs =
        OperatorExpr::multiplication(dim, f.derivative(1) * Coefficient(dim, Polynomial::symbol(Symbol::hbar)))
            .scaled(-kI);
    CHECK(lhs == rhs);
  }

  TEST_CASE("product is associative and the commutator satisfies Jacobi") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
      const int dim = 2 + trial % 2;
      const OperatorExpr a = random_operator(rng, dim);
      const OperatorExpr b = random_operator(rng, dim);
      const OperatorExpr c = random_operator(rng, dim);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a * (b + c)) == a * b + a * c);
      const OperatorExpr jacobi =
          commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
      CHECK(jacobi.is_zero());
    }
  }

  TEST_CASE("conjugation by D powers is a homomorphism") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
      const int dim = 2 + trial % 2;
      const OperatorExpr a = random_operator(rng, dim);
      const OperatorExpr b = random_operator(rng, dim);
      const Rational s(2 * trial - 5, 4);
      CHECK(conjugate_by_d_power(a * b, s) == conjugate_by_d_power(a, s) * conjugate_by_d_power(b, s));
      CHECK(conjugate_by_d_power(conjugate_by_d_power(a, s), -s) == a);
    }
  }

  TEST_CASE("integer conjugation agrees with explicit multiplication by D^k") {
    std::mt19937 rng(29);
    for (int k = -2; k <= 2; ++k) {
      const int dim = 3;
      const OperatorExpr x = random_operator(rng, dim);
      const OperatorExpr direct = OperatorExpr::conformal_power(dim, k) * x * OperatorExpr::conformal_power(dim, -k);
      CHECK(conjugate_by_d_power(x, Rational(k)) == direct);
    }
  }

  TEST_CASE("formal adjoint is an anti-involution") {
    std::mt19937 rng(31);
    const int dim = 2;
    CHECK(formal_adjoint(p(dim, 0)) == p(dim, 0));
    CHECK(formal_adjoint(q(dim, 1).scaled(kI)) == q(dim, 1).scaled(-kI));
    // (q p)^T = p q = q p - i hbar
    CHECK(formal_adjoint(q(dim, 0) * p(dim, 0)) == q(dim, 0) * p(dim, 0) - hbar(dim).scaled(kI));
    for (int trial = 0; trial < 8; ++trial) {
      const OperatorExpr a = random_operator(rng, dim);
      const OperatorExpr b = random_operator(rng, dim);
      CHECK(formal_adjoint(formal_adjoint(a)) == a);
      CHECK(formal_adjoint(a * b) == formal_adjoint(b) * formal_adjoint(a));
    }
  }

  TEST_CASE("weighted adjoint matches D^-w X^T D^w") {
    std::mt19937 rng(37);
    const int dim = 3;
    for (int w = -1; w <= 2; ++w) {
      const OperatorExpr x = random_operator(rng, dim);
      const OperatorExpr direct =
          OperatorExpr::conformal_power(dim, -w) * formal_adjoint(x) * OperatorExpr::conformal_power(dim, w);
      CHECK(weighted_adjoint(x, Rational(w)) == direct);
    }
  }

  TEST_CASE("lambda = 0 restriction commutes with products") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 6; ++trial) {
      const OperatorExpr a = random_operator(rng, 2);
      const OperatorExpr b = random_operator(rng, 2);
      CHECK((a * b).at_lambda_zero() == a.at_lambda_zero() * b.at_lambda_zero());
    }
  }

  TEST_CASE("degree bookkeeping") {
    const int dim = 2;
    const OperatorExpr x = q(dim, 0) * p(dim, 0) * p(dim, 1) * OperatorExpr::conformal_power(dim, -3);
    CHECK(x.momentum_degree() == 2);
    CHECK(x.max_d_power() >= 3);
    CHECK(OperatorExpr(dim).to_string() == "0");
    CHECK(power(p(dim, 0), 3) == p(dim, 0) * p(dim, 0) * p(dim, 0));
    CHECK_THROWS_AS((void)power(p(dim, 0), -1), std::domain_error);
  }
}
