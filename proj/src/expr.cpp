#include "plectic6/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "plectic6/error.hpp"

namespace plectic6 {

namespace detail {

enum class ExprKind { number, variable, negate, add, subtract, multiply, divide, power, sin, cos, exp };

struct ExprNode {
  ExprKind kind = ExprKind::number;
  double value = 0.0;    // number
  int variable = 0;      // 0-based, variable
  int exponent = 0;      // power
  std::shared_ptr<const ExprNode> lhs;
  std::shared_ptr<const ExprNode> rhs;
};

}  // namespace detail

namespace {

using detail::ExprKind;
using detail::ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_number(double v) {
  auto n = std::make_shared<ExprNode>();
  n->value = v;
  return n;
}

NodePtr make_node(ExprKind kind, NodePtr lhs, NodePtr rhs = nullptr) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = sum();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError("syntax error: " + message, 0, at);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr sum() {
    NodePtr lhs = product();
    while (true) {
      if (accept('+')) {
        lhs = make_node(ExprKind::add, lhs, product());
      } else if (accept('-')) {
        lhs = make_node(ExprKind::subtract, lhs, product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr product() {
    NodePtr lhs = power();
    while (true) {
      if (accept('*')) {
        lhs = make_node(ExprKind::multiply, lhs, power());
      } else if (accept('/')) {
        lhs = make_node(ExprKind::divide, lhs, power());
      } else {
        return lhs;
      }
    }
  }

  NodePtr power() {
    NodePtr base = unary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') negative = true, ++pos_;
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    int exponent = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, exponent);
    if (end == pos_ || ec != std::errc() || (end < text_.size() && (text_[end] == '.' || text_[end] == 'e')))
      fail_at("exponent must be an integer literal", start);
    pos_ = end;
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::power;
    n->exponent = negative ? -exponent : exponent;
    n->lhs = std::move(base);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') fail("chained '^' needs parentheses");
    return n;
  }

  NodePtr unary() {
    if (accept('-')) return make_node(ExprKind::negate, unary());
    if (accept('+')) return unary();
    return primary();
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail_at("malformed number", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return make_number(v);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);

    ExprKind fn;
    if (name == "sin") {
      fn = ExprKind::sin;
    } else if (name == "cos") {
      fn = ExprKind::cos;
    } else if (name == "exp") {
      fn = ExprKind::exp;
    } else {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '(')
        fail_at("'" + std::string(name) + "' is not a function", start);
      if (name == "pi") return make_number(std::numbers::pi);
      if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '6') {
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprKind::variable;
        n->variable = name[1] - '1';
        return n;
      }
      fail_at("unknown identifier '" + std::string(name) + "'", start);
    }

    if (!accept('(')) fail_at("function '" + std::string(name) + "' expects 1 argument", start);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ')')
      fail_at("function '" + std::string(name) + "' expects 1 argument, got 0", start);
    NodePtr arg = sum();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ',')
      fail_at("function '" + std::string(name) + "' expects 1 argument", start);
    if (!accept(')')) fail("expected ')'");
    return make_node(fn, std::move(arg));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double eval(const ExprNode& n, const Point6& p) {
  switch (n.kind) {
    case ExprKind::number: return n.value;
    case ExprKind::variable: return p[n.variable];
    case ExprKind::negate: return -eval(*n.lhs, p);
    case ExprKind::add: return eval(*n.lhs, p) + eval(*n.rhs, p);
    case ExprKind::subtract: return eval(*n.lhs, p) - eval(*n.rhs, p);
    case ExprKind::multiply: return eval(*n.lhs, p) * eval(*n.rhs, p);
    case ExprKind::divide: {
      const double num = eval(*n.lhs, p);
      const double den = eval(*n.rhs, p);
      if (std::abs(den) < 1e-300) throw EvalError("division by zero");
      return num / den;
    }
    case ExprKind::power: {
      const double base = eval(*n.lhs, p);
      if (n.exponent < 0 && std::abs(base) < 1e-300) throw EvalError("division by zero in negative power");
      return std::pow(base, n.exponent);
    }
    case ExprKind::sin: return std::sin(eval(*n.lhs, p));
    case ExprKind::cos: return std::cos(eval(*n.lhs, p));
    case ExprKind::exp: return std::exp(eval(*n.lhs, p));
  }
  return 0.0;
}

void collect(const ExprNode& n, std::set<std::string>& out) {
  if (n.kind == ExprKind::variable) out.insert("x" + std::to_string(n.variable + 1));
  if (n.lhs) collect(*n.lhs, out);
  if (n.rhs) collect(*n.rhs, out);
}

}  // namespace

ScalarFieldExpr::ScalarFieldExpr() : ScalarFieldExpr(make_number(0.0), "0") {}

ScalarFieldExpr::ScalarFieldExpr(std::shared_ptr<const detail::ExprNode> root, std::string text)
    : root_(std::move(root)), text_(std::move(text)) {}

ScalarFieldExpr ScalarFieldExpr::constant(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return ScalarFieldExpr(make_number(value), os.str());
}

double ScalarFieldExpr::evaluate(const Point6& p) const { return eval(*root_, p); }

ScalarFieldExpr parse_expr(std::string_view text) {
  return ScalarFieldExpr(Parser(text).parse(), std::string(text));
}

std::set<std::string> free_variables(const ScalarFieldExpr& f) {
  std::set<std::string> out;
  collect(f.root(), out);
  return out;
}

}  // namespace plectic6
