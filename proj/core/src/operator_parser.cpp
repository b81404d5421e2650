#include "darboux/operator_parser.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace darboux::algebra {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int dim) : text_(text), dim_(dim) {
    if (dim < 1 || dim > kMaxDim) throw ParseError("unsupported dimension", 0);
  }

  OperatorExpr run() {
    OperatorExpr result = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept_bytes(std::string_view s) {
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }

  // Operator characters, with the unicode minus sign and middle dot accepted
  // as '-' and '*'.
  char peek_operator() {
    skip_space();
    if (pos_ >= text_.size()) return '\0';
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") return '-';
    if (text_.substr(pos_, 2) == "\xC2\xB7") return '*';
    const char c = text_[pos_];
    return std::string_view("+-*/^()").find(c) != std::string_view::npos ? c : '\0';
  }

  void consume_operator() {
    if (text_.substr(pos_, 3) == "\xE2\x88\x92")
      pos_ += 3;
    else if (text_.substr(pos_, 2) == "\xC2\xB7")
      pos_ += 2;
    else
      ++pos_;
  }

  OperatorExpr expression() {
    OperatorExpr acc = term();
    for (;;) {
      const char op = peek_operator();
      if (op != '+' && op != '-') return acc;
      consume_operator();
      OperatorExpr rhs = term();
      acc = op == '+' ? acc + rhs : acc - rhs;
    }
  }

  OperatorExpr term() {
    OperatorExpr acc = unary();
    for (;;) {
      const char op = peek_operator();
      if (op != '*' && op != '/') return acc;
      consume_operator();
      const std::size_t at = pos_;
      OperatorExpr rhs = unary();
      acc = op == '*' ? multiply(acc, rhs) : multiply(acc, inverse_of(rhs, at));
    }
  }

  OperatorExpr unary() {
    const char op = peek_operator();
    if (op == '-') {
      consume_operator();
      return -unary();
    }
    if (op == '+') {
      consume_operator();
      return unary();
    }
    return power_expr();
  }

  OperatorExpr power_expr() {
    const std::size_t base_at = (skip_space(), pos_);
    OperatorExpr base = atom();
    if (peek_operator() != '^') return base;
    consume_operator();
    const int exponent = integer_exponent();
    if (exponent >= 0) return power(base, exponent);
    return power(inverse_of(base, base_at), -exponent);
  }

  int integer_exponent() {
    bool parens = false;
    if (peek_operator() == '(') {
      consume_operator();
      parens = true;
    }
    bool negative = false;
    if (peek_operator() == '-') {
      consume_operator();
      negative = true;
    }
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 64) fail("exponent too large");
    }
    if (parens) {
      if (peek_operator() != ')') fail("expected ')'");
      consume_operator();
    }
    return negative ? -value : value;
  }

  OperatorExpr inverse_of(const OperatorExpr& x, std::size_t at) const {
    if (x.is_zero()) throw ParseError("division by zero", at);
    if (!x.is_multiplication())
      throw ParseError("division by an operator containing momenta", at);
    auto inv = x.coefficient(MomentumIndex{}).scalar_d_power_inverse();
    if (!inv) throw ParseError("division only by scalars and powers of D", at);
    return OperatorExpr::multiplication(dim_, *inv);
  }

  OperatorExpr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (peek_operator() == '(') {
      consume_operator();
      OperatorExpr inner = expression();
      if (peek_operator() != ')') fail("expected ')'");
      consume_operator();
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (accept_bytes("\xCE\xBB")) return OperatorExpr::symbol(dim_, Symbol::lambda);
    if (accept_bytes("\xCF\x89")) return OperatorExpr::symbol(dim_, Symbol::omega);
    if (accept_bytes("\xC4\xA7")) return OperatorExpr::symbol(dim_, Symbol::hbar);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected character");
  }

  OperatorExpr number() {
    const std::size_t start = pos_;
    Rational value(0);
    Rational scale(1);
    bool fraction = false;
    bool any_digit = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '.' && !fraction) {
        fraction = true;
        ++pos_;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) break;
      any_digit = true;
      try {
        value = value * Rational(10) + Rational(c - '0');
        if (fraction) scale = scale * Rational(10);
      } catch (const std::overflow_error&) {
        throw ParseError("numeric literal too long", start);
      }
      ++pos_;
    }
    if (!any_digit) throw ParseError("malformed number", start);
    return OperatorExpr::scalar(dim_, GaussianRational(value / scale));
  }

  OperatorExpr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "i") return OperatorExpr::scalar(dim_, GaussianRational::i());
    if (name == "lambda") return OperatorExpr::symbol(dim_, Symbol::lambda);
    if (name == "omega") return OperatorExpr::symbol(dim_, Symbol::omega);
    if (name == "hbar") return OperatorExpr::symbol(dim_, Symbol::hbar);
    if (name == "D") return OperatorExpr::conformal_power(dim_, 1);
    if (name.size() >= 2 && (name[0] == 'q' || name[0] == 'p')) {
      const std::string_view digits = name.substr(1);
      bool numeric = !digits.empty() && digits.size() <= 2;
      for (char d : digits) numeric = numeric && std::isdigit(static_cast<unsigned char>(d));
      if (numeric) {
        const int index = std::stoi(std::string(digits)) - 1;
        if (index < 0 || index >= dim_)
          throw ParseError("coordinate index out of range: " + std::string(name), start);
        return name[0] == 'q' ? OperatorExpr::position(dim_, index)
                              : OperatorExpr::momentum(dim_, index);
      }
    }
    throw ParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

OperatorExpr parse(std::string_view text, int dim) { return Parser(text, dim).run(); }

}  // namespace darboux::algebra
