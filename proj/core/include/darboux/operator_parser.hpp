#pragma once

// Text front end for OperatorExpr. The accepted grammar is documented in
// docs/operator_grammar.md.

#include "darboux/operator_expr.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace darboux::algebra {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Byte offset into the input where the problem was detected.
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses and normal-orders an operator expression in `dim` dimensions.
[[nodiscard]] OperatorExpr parse(std::string_view text, int dim);

}  // namespace darboux::algebra
