#include "darboux/operator_parser.hpp"
#include "darboux/quantization.hpp"

#include <doctest.h>

using namespace darboux::algebra;

TEST_SUITE("parser") {
  TEST_CASE("ascii and unicode spellings agree") {
    const OperatorExpr a = parse("p1*(1/(1+lambda*q1^2))*p1 + omega^2*q1^2/(2*D)", 1);
    const OperatorExpr b = parse("p1·D^(-1)·p1 + ω^2·q1^2·D^−1/2", 1);
    CHECK(a == b);
    CHECK(parse("hbar*i", 2) == parse("ħ·i", 2));
    CHECK(parse("0.25*q2", 2) == parse("q2/4", 2));
  }

  TEST_CASE("parsed operators are normal ordered") {
    // p q = q p - i hbar
    CHECK(parse("p1*q1", 1) == parse("q1*p1 - i*hbar", 1));
    CHECK(parse("p1*q2 - q2*p1", 2).is_zero());
  }

  TEST_CASE("print then parse round trips the built Hamiltonians") {
    for (int dim = 2; dim <= 3; ++dim)
      for (auto flavor : {Flavor::schrodinger, Flavor::lb, Flavor::tlb, Flavor::pdm, Flavor::tpdm}) {
        const OperatorExpr h = build_hamiltonian(flavor, dim);
        CHECK(parse(h.to_string(), dim) == h);
      }
  }

  TEST_CASE("errors carry a byte position") {
    auto position_of = [](const char* text) -> std::size_t {
      try {
        (void)parse(text, 2);
      } catch (const ParseError& e) {
        return e.position();
      }
      return std::string::npos;
    };
    CHECK(position_of("q1 + ") == 5);
    CHECK(position_of("q1 * $") == 5);
    CHECK(position_of("q3") != std::string::npos);
    CHECK(position_of("(q1") != std::string::npos);
    CHECK(position_of("1/q1") != std::string::npos);
    CHECK(position_of("p1^(-1)") != std::string::npos);
    CHECK(position_of("q1 q2") != std::string::npos);
  }

  TEST_CASE("division only by scalar multiples of D powers") {
    CHECK(parse("1/(2*D^2)", 2) == OperatorExpr::conformal_power(2, -2).scaled(Rational(1, 2)));
    CHECK(parse("D^-1*D", 2) == OperatorExpr::identity(2));
    CHECK_THROWS_AS((void)parse("1/(1+q1^2)", 2), ParseError);
  }
}
