#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dqg/model.hpp"

namespace dqg {

/// Element expressions, LL(1):
///
///     expr   := term (('+' | '-') term)*
///     term   := factor ('*' factor)*
///     factor := '-' factor | number | name | name '(' args ')' | '(' expr ')'
///     number := digits ('/' digits)?
///
/// Names: unit, delta(g...), entry(b, i, j), char(l...), poly(k), poly(i, k),
/// e({b, ...}), adj(x), antipode(x), zeta(n, k), sqrt(d).
struct ExprNode {
  enum class Kind { number, add, sub, mul, neg, name, call, window };
  Kind kind = Kind::number;
  std::size_t column = 1;   // 1-based position of the first character
  Scalar value;             // number
  std::string name;         // name, call
  std::vector<ExprNode> args;
  std::vector<std::vector<std::int32_t>> blocks;  // window literal inside e({...})
};

/// Syntax only. Throws ParseError with the column and the expected-token set.
ExprNode parse_expression(std::string_view text);

/// Throws ParseError for symbols that do not apply to the model (char on a finite
/// model, a block outside the shape, a non-scalar argument).
Multiplier evaluate(const ModelPtr& model, const ExprNode& node);
Multiplier parse_element(const ModelPtr& model, std::string_view text);

/// Expressions without element symbols, e.g. "(1/2 + zeta(8,1))" or "-sqrt(3)".
Scalar parse_scalar(std::string_view text);

/// Canonical text: parse_element(model, print_element(x)) == x.
std::string print_element(const Multiplier& x);

}  // namespace dqg
