#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hilfer/fracops.hpp"
#include "hilfer/grid.hpp"
#include "hilfer/wellposed.hpp"

namespace hilfer::picard {

using grid::GridFunction;
using wellposed::LinearProblem;
using wellposed::ProblemSpec;

struct SolverOptions {
  int grid_n = 201;
  int rule_order = singquad::kDefaultRuleOrder;
  double tol = 1e-8;
  int max_iter = 200;
  bool uniform_mesh = false;
  grid::Interpolation interpolation = grid::Interpolation::MonotoneCubic;
};

/// The integral representation of the linear problem with source h:
///   x(t) = I^a h(t) + t^(g-1)/Delta (sum_i sigma_i I_i I^a h(xi_i) - I^a h(T)).
///
/// Quadrature rules and Delta are built once and reused for every source.
class LinearSolutionMap {
 public:
  /// Throws DegenerateProblem when Delta vanishes.
  LinearSolutionMap(const LinearProblem& problem, int rule_order);

  /// Evaluates the representation at each node. Source values are requested
  /// only on [0, t_max].
  std::vector<double> evaluate(const std::function<double(double)>& source,
                               std::span<const double> nodes) const;

  double delta() const noexcept { return delta_; }
  const LinearProblem& problem() const noexcept { return problem_; }

 private:
  LinearProblem problem_;
  double delta_;
  double gamma_;
  singquad::RiemannLiouville rl_;
  std::vector<fracops::ComposedEkRl> composed_;
};

/// The fixed-point map F of the nonlinear problem on grid functions.
class FixedPointMap {
 public:
  FixedPointMap(const ProblemSpec& spec, int rule_order);

  /// (F x) on the nodes of x; the source is s -> f(s, x(s)).
  GridFunction apply(const GridFunction& x) const;

  const LinearSolutionMap& linear_map() const noexcept { return map_; }
  const ProblemSpec& spec() const noexcept { return spec_; }

 private:
  ProblemSpec spec_;
  LinearSolutionMap map_;
};

struct SolveResult {
  GridFunction solution;
  int iterations = 0;
  std::vector<double> diff_history;
  double final_residual = 0.0;
  double boundary_residual = 0.0;
  bool converged = false;
  bool certified = false;  // the contraction condition L*Omega < 1 holds
};

/// F x sampled on the nodes of x.
GridFunction apply_F(const ProblemSpec& spec, const GridFunction& x,
                     int rule_order = singquad::kDefaultRuleOrder);

/// Closed-form solution of the linear problem with right-hand side h.
GridFunction solve_linear(const LinearProblem& problem, const std::function<double(double)>& h,
                          std::vector<double> nodes, int rule_order = singquad::kDefaultRuleOrder,
                          grid::Interpolation interp = grid::Interpolation::MonotoneCubic);

/// (||x - F x|| over the nodes, |x(T) - sum_i sigma_i I_i x(xi_i)|).
std::pair<double, double> residual(const ProblemSpec& spec, const GridFunction& x,
                                   int rule_order = singquad::kDefaultRuleOrder);

/// Boundary-condition defect alone.
double boundary_residual(const LinearProblem& problem, const GridFunction& x,
                         int rule_order = singquad::kDefaultRuleOrder);

/// Computational mesh for a problem: covers [0, t_max] and contains T.
std::vector<double> problem_mesh(const LinearProblem& problem, const SolverOptions& options);

/// The zero function on problem_mesh.
GridFunction zero_function(const LinearProblem& problem, const SolverOptions& options);

/// Picard iteration x_{k+1} = F x_k from `initial` (zero by default).
///
/// Stops once ||x_{k+1} - x_k|| <= tol and ||x - F x|| <= tol. Throws
/// NonConvergence when max_iter is reached and the differences stopped
/// decreasing, or when an iterate is no longer finite.
SolveResult picard_solve(const ProblemSpec& spec, const SolverOptions& options,
                         const std::optional<GridFunction>& initial = std::nullopt);

}  // namespace hilfer::picard
