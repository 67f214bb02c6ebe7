#include "hilfer/exprlang.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hilfer/errors.hpp"

namespace hilfer::exprlang {

namespace {

using Node = ExprTree::Node;

const char* unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Abs: return "abs";
    case UnaryOp::Sqrt: return "sqrt";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
  }
  return "?";
}

char binary_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return '+';
    case BinaryOp::Sub: return '-';
    case BinaryOp::Mul: return '*';
    case BinaryOp::Div: return '/';
    case BinaryOp::Pow: return '^';
  }
  return '?';
}

double checked(double value, const char* what, double t, double x) {
  if (!std::isfinite(value)) {
    throw EvalError(std::string("non-finite result in ") + what, t, x);
  }
  return value;
}

double eval_node(const Node& n, double t, double x) {
  switch (n.kind) {
    case Node::Kind::Constant:
      return n.value;
    case Node::Kind::Variable:
      return n.var == Variable::T ? t : x;
    case Node::Kind::Unary: {
      const double a = eval_node(n.lhs->root(), t, x);
      switch (n.unary_op) {
        case UnaryOp::Neg: return -a;
        case UnaryOp::Abs: return std::abs(a);
        case UnaryOp::Sqrt:
          if (a < 0.0) {
            throw EvalError("sqrt of negative value " + std::to_string(a), t, x);
          }
          return std::sqrt(a);
        case UnaryOp::Exp: return checked(std::exp(a), "exp", t, x);
        case UnaryOp::Sin: return std::sin(a);
        case UnaryOp::Cos: return std::cos(a);
      }
      break;
    }
    case Node::Kind::Binary: {
      const double a = eval_node(n.lhs->root(), t, x);
      const double b = eval_node(n.rhs->root(), t, x);
      switch (n.binary_op) {
        case BinaryOp::Add: return checked(a + b, "+", t, x);
        case BinaryOp::Sub: return checked(a - b, "-", t, x);
        case BinaryOp::Mul: return checked(a * b, "*", t, x);
        case BinaryOp::Div:
          if (b == 0.0) {
            throw EvalError("division by zero", t, x);
          }
          return checked(a / b, "/", t, x);
        case BinaryOp::Pow: return checked(std::pow(a, b), "^", t, x);
      }
      break;
    }
  }
  throw EvalError("malformed expression node", t, x);
}

bool node_uses(const Node& n, Variable v) {
  switch (n.kind) {
    case Node::Kind::Constant: return false;
    case Node::Kind::Variable: return n.var == v;
    case Node::Kind::Unary: return n.lhs->uses(v);
    case Node::Kind::Binary: return n.lhs->uses(v) || n.rhs->uses(v);
  }
  return false;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void unparse_node(const Node& n, std::string& out) {
  switch (n.kind) {
    case Node::Kind::Constant:
      if (n.value < 0.0) {
        out += "(" + format_number(n.value) + ")";
      } else {
        out += format_number(n.value);
      }
      return;
    case Node::Kind::Variable:
      out += n.var == Variable::T ? "t" : "x";
      return;
    case Node::Kind::Unary:
      if (n.unary_op == UnaryOp::Neg) {
        out += "(-";
        unparse_node(n.lhs->root(), out);
        out += ")";
      } else {
        out += unary_name(n.unary_op);
        out += "(";
        unparse_node(n.lhs->root(), out);
        out += ")";
      }
      return;
    case Node::Kind::Binary:
      out += "(";
      unparse_node(n.lhs->root(), out);
      out += binary_symbol(n.binary_op);
      unparse_node(n.rhs->root(), out);
      out += ")";
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprTree parse_all() {
    ExprTree e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail({"operator", "end of input"});
    }
    return e;
  }

 private:
  ExprTree parse_expr() {
    ExprTree lhs = parse_term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        lhs = ExprTree::binary(BinaryOp::Add, lhs, parse_term());
      } else if (accept('-')) {
        lhs = ExprTree::binary(BinaryOp::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  ExprTree parse_term() {
    ExprTree lhs = parse_factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        lhs = ExprTree::binary(BinaryOp::Mul, lhs, parse_factor());
      } else if (accept('/')) {
        lhs = ExprTree::binary(BinaryOp::Div, lhs, parse_factor());
      } else {
        return lhs;
      }
    }
  }

  ExprTree parse_factor() {
    skip_ws();
    if (accept('-')) {
      return ExprTree::unary(UnaryOp::Neg, parse_factor());
    }
    ExprTree base = parse_base();
    skip_ws();
    if (accept('^')) {
      return ExprTree::binary(BinaryOp::Pow, base, parse_factor());
    }
    return base;
  }

  ExprTree parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) {
      fail({"number", "t", "x", "function", "(", "-"});
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (c == '(') {
      ++pos_;
      ExprTree inner = parse_expr();
      skip_ws();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "t") return ExprTree::variable(Variable::T);
      if (name == "x") return ExprTree::variable(Variable::X);
      std::optional<UnaryOp> op;
      if (name == "abs") op = UnaryOp::Abs;
      else if (name == "sqrt") op = UnaryOp::Sqrt;
      else if (name == "exp") op = UnaryOp::Exp;
      else if (name == "sin") op = UnaryOp::Sin;
      else if (name == "cos") op = UnaryOp::Cos;
      if (!op) {
        throw UnknownIdentifier(name, start);
      }
      skip_ws();
      expect('(');
      ExprTree arg = parse_expr();
      skip_ws();
      expect(')');
      return ExprTree::unary(*op, arg);
    }
    fail({"number", "t", "x", "function", "(", "-"});
  }

  ExprTree parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail({"digit"});
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        ++pos_;
      }
      if (digits() == 0) {
        fail({"exponent digit"});
      }
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      throw ParseError("number out of range at offset " + std::to_string(start), start, {"number"});
    }
    return ExprTree::constant(value);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail({std::string(1, c)});
    }
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "parse error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      msg += (i ? ", '" : "'") + expected[i] + "'";
    }
    if (pos_ < text_.size()) {
      msg += ", found '" + std::string(1, text_[pos_]) + "'";
    } else {
      msg += ", found end of input";
    }
    throw ParseError(msg, pos_, std::move(expected));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprTree ExprTree::constant(double value) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Constant;
  n->value = value;
  return ExprTree(std::move(n));
}

ExprTree ExprTree::variable(Variable var) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Variable;
  n->var = var;
  return ExprTree(std::move(n));
}

ExprTree ExprTree::unary(UnaryOp op, ExprTree operand) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Unary;
  n->unary_op = op;
  n->lhs = std::move(operand);
  return ExprTree(std::move(n));
}

ExprTree ExprTree::binary(BinaryOp op, ExprTree lhs, ExprTree rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Binary;
  n->binary_op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return ExprTree(std::move(n));
}

double ExprTree::eval(double t, double x) const { return eval_node(*root_, t, x); }

bool ExprTree::uses(Variable var) const { return node_uses(*root_, var); }

std::string ExprTree::unparse() const {
  std::string out;
  unparse_node(*root_, out);
  return out;
}

bool operator==(const ExprTree& a, const ExprTree& b) {
  if (a.root_ == b.root_) {
    return true;
  }
  const Node& x = *a.root_;
  const Node& y = *b.root_;
  if (x.kind != y.kind) {
    return false;
  }
  switch (x.kind) {
    case Node::Kind::Constant:
      return std::bit_cast<std::uint64_t>(x.value) == std::bit_cast<std::uint64_t>(y.value);
    case Node::Kind::Variable:
      return x.var == y.var;
    case Node::Kind::Unary:
      return x.unary_op == y.unary_op && *x.lhs == *y.lhs;
    case Node::Kind::Binary:
      return x.binary_op == y.binary_op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
  }
  return false;
}

ExprTree parse(std::string_view text) { return Parser(text).parse_all(); }

RhsBounds estimate_bounds(const ExprTree& tree, double t_max, double x_radius, int samples_t,
                          int samples_x) {
  if (!(t_max > 0.0) || !(x_radius > 0.0)) {
    throw DomainError("estimate_bounds needs t_max > 0 and x_radius > 0");
  }
  if (samples_t < 2 || samples_x < 2) {
    throw DomainError("estimate_bounds needs at least 2 samples per axis");
  }
  std::vector<double> xs;
  xs.reserve(samples_x + 1);
  for (int j = 0; j < samples_x; ++j) {
    xs.push_back(-x_radius + 2.0 * x_radius * j / (samples_x - 1));
  }
  if (std::find(xs.begin(), xs.end(), 0.0) == xs.end()) {
    xs.push_back(0.0);
    std::sort(xs.begin(), xs.end());
  }
  const double h = x_radius / (10.0 * samples_x);

  RhsBounds out;
  double psi = 0.0;
  for (int i = 0; i < samples_t; ++i) {
    const double t = t_max * i / (samples_t - 1);
    out.m_const = std::max(out.m_const, std::abs(tree.eval(t, 0.0)));
    for (double x : xs) {
      const double fx = tree.eval(t, x);
      psi = std::max(psi, std::abs(fx));
      const double slope = std::abs(tree.eval(t, x + h) - fx) / h;
      out.lipschitz_L = std::max(out.lipschitz_L, slope);
    }
  }
  out.psi_norm = psi;
  return out;
}

double sampled_sup_in_t(const ExprTree& tree, double t_max, int samples) {
  if (samples < 2) {
    throw DomainError("sampled_sup_in_t needs at least 2 samples");
  }
  double sup = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = t_max * i / (samples - 1);
    sup = std::max(sup, std::abs(tree.eval(t, 0.0)));
  }
  return sup;
}

}  // namespace hilfer::exprlang
