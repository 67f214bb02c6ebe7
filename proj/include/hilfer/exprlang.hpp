#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace hilfer::exprlang {

enum class Variable { T, X };
enum class UnaryOp { Neg, Abs, Sqrt, Exp, Sin, Cos };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

/// Immutable expression tree in the variables t and x.
///
/// Copies share nodes. Structural equality compares shapes and constants bit for bit.
class ExprTree {
 public:
  struct Node;

  static ExprTree constant(double value);
  static ExprTree variable(Variable var);
  static ExprTree unary(UnaryOp op, ExprTree operand);
  static ExprTree binary(BinaryOp op, ExprTree lhs, ExprTree rhs);

  /// Evaluates at (t, x). Throws EvalError on division by zero, sqrt of a
  /// negative number, or a non-finite result.
  double eval(double t, double x) const;

  /// True when the variable occurs anywhere in the tree.
  bool uses(Variable var) const;

  /// Fully parenthesized text that parses back to a structurally equal tree.
  std::string unparse() const;

  const Node& root() const noexcept { return *root_; }

  friend bool operator==(const ExprTree& a, const ExprTree& b);

 private:
  explicit ExprTree(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

struct ExprTree::Node {
  enum class Kind { Constant, Variable, Unary, Binary };
  Kind kind = Kind::Constant;
  double value = 0.0;
  Variable var = Variable::T;
  UnaryOp unary_op = UnaryOp::Neg;
  BinaryOp binary_op = BinaryOp::Add;
  std::optional<ExprTree> lhs;
  std::optional<ExprTree> rhs;
};

/// Parses
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | base ('^' factor)?
///   base   := number | 't' | 'x' | fname '(' expr ')' | '(' expr ')'
/// with fname in {abs, sqrt, exp, sin, cos}. '^' is right-associative and
/// unary minus applies to the whole power: -t^2 is -(t^2).
/// Throws ParseError (with byte offset and expected tokens) or UnknownIdentifier.
ExprTree parse(std::string_view text);

/// Estimates of the constants L, M and ||psi|| of the right-hand side.
struct RhsBounds {
  double lipschitz_L = 0.0;
  double m_const = 0.0;
  std::optional<double> psi_norm;
  bool lipschitz_user_supplied = false;
  bool m_user_supplied = false;
  bool psi_user_supplied = false;
};

/// Sampled estimates over t in [0, t_max] and x in [-x_radius, x_radius].
///
/// The x-grid is uniform with samples_x points and always contains x = 0.
/// L is the largest forward difference quotient with step x_radius/(10 samples_x);
/// M is max |f(t,0)|; psi_norm is max |f| over the box. Every value is a lower
/// bound on the true supremum and is flagged as not user supplied.
RhsBounds estimate_bounds(const ExprTree& tree, double t_max, double x_radius, int samples_t,
                          int samples_x);

/// max over samples uniform t-points in [0, t_max] of |tree(t, 0)|.
double sampled_sup_in_t(const ExprTree& tree, double t_max, int samples);

}  // namespace hilfer::exprlang
