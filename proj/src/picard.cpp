#include "hilfer/picard.hpp"

#include <cmath>
#include <string>

#include "hilfer/errors.hpp"

namespace hilfer::picard {

LinearSolutionMap::LinearSolutionMap(const LinearProblem& problem, int rule_order)
    : problem_(problem), delta_(0.0), gamma_(0.0), rl_((problem.validate(), problem.alpha), rule_order) {
  gamma_ = problem_.gamma();
  delta_ = wellposed::compute_delta(problem_);
  if (wellposed::is_resonant(problem_, delta_)) {
    throw DegenerateProblem("boundary determinant vanishes; the linear problem has no integral representation");
  }
  composed_.reserve(problem_.terms.size());
  for (const auto& term : problem_.terms) {
    composed_.emplace_back(term, problem_.alpha, rule_order);
  }
}

std::vector<double> LinearSolutionMap::evaluate(const std::function<double(double)>& source,
                                                std::span<const double> nodes) const {
  double nonlocal = 0.0;
  for (std::size_t i = 0; i < composed_.size(); ++i) {
    nonlocal += problem_.terms[i].sigma * composed_[i](source);
  }
  const double bracket = (nonlocal - rl_(source, problem_.horizon_T)) / delta_;

  std::vector<double> out(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double t = nodes[j];
    out[j] = (t == 0.0) ? 0.0 : rl_(source, t) + std::pow(t, gamma_ - 1.0) * bracket;
  }
  return out;
}

FixedPointMap::FixedPointMap(const ProblemSpec& spec, int rule_order)
    : spec_(spec), map_(spec.linear, rule_order) {}

GridFunction FixedPointMap::apply(const GridFunction& x) const {
  const auto& rhs = spec_.rhs;
  auto source = [&](double s) { return rhs.eval(s, x(s)); };
  return x.with_values(map_.evaluate(source, x.nodes()));
}

GridFunction apply_F(const ProblemSpec& spec, const GridFunction& x, int rule_order) {
  return FixedPointMap(spec, rule_order).apply(x);
}

GridFunction solve_linear(const LinearProblem& problem, const std::function<double(double)>& h,
                          std::vector<double> nodes, int rule_order, grid::Interpolation interp) {
  LinearSolutionMap map(problem, rule_order);
  std::vector<double> values = map.evaluate(h, nodes);
  return GridFunction(std::move(nodes), std::move(values), interp);
}

double boundary_residual(const LinearProblem& problem, const GridFunction& x, int rule_order) {
  double rhs = 0.0;
  for (const auto& term : problem.terms) {
    singquad::ErdelyiKober ek(term.eta, term.mu, term.delta, rule_order);
    rhs += term.sigma * ek([&](double s) { return x(s); }, term.xi);
  }
  return std::abs(x(problem.horizon_T) - rhs);
}

std::pair<double, double> residual(const ProblemSpec& spec, const GridFunction& x, int rule_order) {
  const GridFunction fx = apply_F(spec, x, rule_order);
  return {grid::sup_distance(x, fx), boundary_residual(spec.linear, x, rule_order)};
}

std::vector<double> problem_mesh(const LinearProblem& problem, const SolverOptions& options) {
  return grid::make_mesh(problem.t_max(), options.grid_n, problem.gamma(), options.uniform_mesh,
                         problem.horizon_T);
}

GridFunction zero_function(const LinearProblem& problem, const SolverOptions& options) {
  std::vector<double> nodes = problem_mesh(problem, options);
  std::vector<double> zeros(nodes.size(), 0.0);
  return GridFunction(std::move(nodes), std::move(zeros), options.interpolation);
}

SolveResult picard_solve(const ProblemSpec& spec, const SolverOptions& options,
                         const std::optional<GridFunction>& initial) {
  if (!(options.tol > 0.0)) {
    throw DomainError("tolerance must be positive");
  }
  if (options.max_iter < 1) {
    throw DomainError("max_iter must be at least 1");
  }
  const FixedPointMap F(spec, options.rule_order);

  GridFunction x = initial ? *initial : zero_function(spec.linear, options);
  if (x.t_max() < spec.linear.t_max()) {
    throw DomainError("initial guess does not cover [0, " + std::to_string(spec.linear.t_max()) + "]");
  }

  const wellposed::WellPosednessReport report = wellposed::analyze(spec);

  std::vector<double> history;
  bool converged = false;
  double final_residual = 0.0;
  GridFunction next = x;
  for (int k = 0; k < options.max_iter; ++k) {
    try {
      next = F.apply(x);
    } catch (const DomainError& e) {
      // Non-finite iterates are rejected by GridFunction.
      throw NonConvergence(std::string("iterate became invalid: ") + e.what(), history);
    }
    const double diff = grid::sup_distance(next, x);
    history.push_back(diff);
    x = next;
    if (diff <= options.tol) {
      const GridFunction fx = F.apply(x);
      final_residual = grid::sup_distance(x, fx);
      if (final_residual <= options.tol) {
        converged = true;
        break;
      }
    }
  }

  if (!converged) {
    const std::size_t n = history.size();
    if (n >= 2 && !(history.back() < history[n / 2])) {
      throw NonConvergence("Picard iteration stalled after " + std::to_string(n) +
                               " iterations (last difference " + std::to_string(history.back()) + ")",
                           history);
    }
    final_residual = grid::sup_distance(x, F.apply(x));
  }

  SolveResult result{x, static_cast<int>(history.size()), history, final_residual, 0.0, converged,
                     report.verdict_unique};
  result.boundary_residual = boundary_residual(spec.linear, x, options.rule_order);
  return result;
}

}  // namespace hilfer::picard
