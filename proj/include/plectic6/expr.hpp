#pragma once

#include <array>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>

namespace plectic6 {

using Point6 = std::array<double, 6>;

namespace detail {
struct ExprNode;
}

// Immutable scalar expression over x1..x6. Grammar, loosest binding first:
//
//   sum     := product (('+' | '-') product)*
//   product := power (('*' | '/') power)*
//   power   := unary ('^' ['-'] integer)?
//   unary   := '-' unary | '+' unary | primary
//   primary := number | x1..x6 | pi | (sin|cos|exp) '(' sum ')' | '(' sum ')'
//
// Unary minus binds tighter than '^', so -x1^2 means (-x1)^2.
class ScalarFieldExpr {
 public:
  ScalarFieldExpr();  // the constant 0

  static ScalarFieldExpr constant(double value);

  // Throws EvalError on division by a value with magnitude < 1e-300.
  double evaluate(const Point6& p) const;

  const std::string& text() const noexcept { return text_; }
  const detail::ExprNode& root() const noexcept { return *root_; }

 private:
  friend ScalarFieldExpr parse_expr(std::string_view text);
  ScalarFieldExpr(std::shared_ptr<const detail::ExprNode> root, std::string text);

  std::shared_ptr<const detail::ExprNode> root_;
  std::string text_;
};

// Throws ParseError with the byte offset of the first offending token.
ScalarFieldExpr parse_expr(std::string_view text);

// Syntactic variable set, e.g. {"x2", "x4"}; "x1*0" still reports x1.
std::set<std::string> free_variables(const ScalarFieldExpr& f);

}  // namespace plectic6
