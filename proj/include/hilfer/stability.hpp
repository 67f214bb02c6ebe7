#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilfer/exprlang.hpp"
#include "hilfer/picard.hpp"

namespace hilfer::stability {

/// Perturbation g(t) of the right-hand side with sup |g| <= epsilon.
struct PerturbationSpec {
  double epsilon = 0.0;
  exprlang::ExprTree g = exprlang::ExprTree::constant(0.0);
  double g_sup = 0.0;
  std::string label;

  /// Throws DomainError unless epsilon > 0, g is free of x, and g_sup <= epsilon.
  void validate() const;
};

struct StabilityReport {
  double epsilon = 0.0;
  std::string g_label;
  double deviation = 0.0;     // sup over [0, T] of |y - x|
  double cf_bound = 0.0;      // C_f epsilon, also the generalized bound theta(epsilon)
  bool bound_holds = false;
  double omega_eps = 0.0;     // Omega epsilon
  double residual_bound_lhs = 0.0;   // sup over [0, T] of |y - F y|
  bool residual_bound_holds = false; // residual_bound_lhs <= omega_eps + kResidualBoundSlack
  double tightness = 0.0;     // deviation / cf_bound
  int perturbed_iterations = 0;
};

struct UhExperiment {
  double ulam_hyers_Cf = 0.0;
  double omega = 0.0;
  std::optional<picard::SolveResult> base;
  std::vector<StabilityReport> reports;
  std::vector<std::string> warnings;
  int skipped = 0;
};

/// Slack for the quadrature error in the residual inequality |y - F y| <= Omega epsilon.
inline constexpr double kResidualBoundSlack = 1e-6;

/// Solves the problem with right-hand side f(t, x) + g(t).
picard::SolveResult perturbed_solve(const wellposed::ProblemSpec& spec, const PerturbationSpec& pert,
                                    const picard::SolverOptions& options);

/// Shapes {cos(t), 1, t/t_max, sin(3t)} with their labels.
std::vector<std::pair<std::string, exprlang::ExprTree>> default_g_family(double t_max);

/// Scales g so that its sup over [0, t_max] (estimated on 10 grid_n samples,
/// with a 1% margin) equals epsilon.
PerturbationSpec scaled_perturbation(const exprlang::ExprTree& g, std::string label, double epsilon,
                                     double t_max, int grid_n);

/// Solves base and perturbed problems for every (epsilon, g) pair and checks
/// |y - x| <= C_f epsilon and |y - F y| <= Omega epsilon on [0, T].
/// Throws DomainError when L Omega >= 1. Non-converging pairs are skipped with a warning.
UhExperiment uh_experiment(const wellposed::ProblemSpec& spec, const std::vector<double>& epsilons,
                           const std::vector<std::pair<std::string, exprlang::ExprTree>>& g_family,
                           const picard::SolverOptions& options);

}  // namespace hilfer::stability
